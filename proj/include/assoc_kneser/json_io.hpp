#pragma once

#include <json.hpp>

#include "assoc_kneser/chromatic.hpp"
#include "assoc_kneser/circulant.hpp"
#include "assoc_kneser/hypergraph.hpp"
#include "assoc_kneser/stability.hpp"
#include "assoc_kneser/triangulation.hpp"

namespace assockg {

using nlohmann::json;

/// {"n": 6, "diagonals": [[1,3],[1,5],[3,5]]}, diagonals in canonical order.
json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

/// {"value": k, "coloring": [...], "lower_bound_witness": {...}, "exact": b}.
json certificate_to_json(const ChromaticCertificate& cert);

json clique_result_to_json(const CliqueResult& r, const std::string& kind);

json hyper_result_to_json(const HyperChromaticResult& r);

/// {"a": [...], "J": [[...], ...]}.
json t3_witness_to_json(const T3Witness& w);

/// {"check": "obtuse", "n": n, "mode": ..., "min_slack": ..., "violations": [...]}.
json obtuse_report_to_json(const ObtuseReport& rep);

}  // namespace assockg
