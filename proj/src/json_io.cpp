#include "assoc_kneser/json_io.hpp"

#include <stdexcept>

namespace assockg {

json triangulation_to_json(const Triangulation& t) {
    json diags = json::array();
    for (const Diagonal& d : t.diagonal_list()) diags.push_back({d.i, d.j});
    return json{{"n", t.n()}, {"diagonals", diags}};
}

Triangulation triangulation_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("diagonals"))
        throw std::invalid_argument("triangulation record needs n and diagonals");
    int n = j.at("n").get<int>();
    std::vector<Diagonal> ds;
    for (const auto& pair : j.at("diagonals")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("diagonal must be a label pair");
        ds.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Triangulation(n, ds);
}

json certificate_to_json(const ChromaticCertificate& cert) {
    json witness;
    if (static_cast<int>(cert.clique.size()) == cert.value && cert.exact) {
        witness = {{"type", "clique"}, {"vertices", cert.clique}};
    } else if (cert.refutation_complete) {
        witness = {{"type", "exhausted_search"},
                   {"statement", "no (k-1)-coloring found by complete search"},
                   {"clique", cert.clique}};
    } else {
        witness = {{"type", "clique"}, {"vertices", cert.clique}};
    }
    return json{{"value", cert.value},
                {"exact", cert.exact},
                {"lower_bound", cert.lower_bound},
                {"upper_bound", cert.upper_bound},
                {"coloring", cert.coloring.color},
                {"palette", cert.coloring.palette},
                {"lower_bound_witness", witness}};
}

json clique_result_to_json(const CliqueResult& r, const std::string& kind) {
    return json{{"kind", kind},        {"exact", r.exact},
                {"value", r.value},    {"lower_bound", r.lower_bound},
                {"upper_bound", r.upper_bound}, {"witness", r.vertices}};
}

json hyper_result_to_json(const HyperChromaticResult& r) {
    return json{{"value", r.value},
                {"exact", r.exact},
                {"lower_bound", r.lower_bound},
                {"upper_bound", r.upper_bound},
                {"coloring", r.coloring.color},
                {"palette", r.coloring.palette},
                {"refutation_complete", r.refutation_complete}};
}

json t3_witness_to_json(const T3Witness& w) {
    return json{{"n", w.n}, {"a", w.a}, {"J", w.J}};
}

json obtuse_report_to_json(const ObtuseReport& rep) {
    return json{{"check", "obtuse"},
                {"n", rep.n},
                {"mode", rep.mode},
                {"precision_bits", static_cast<long>(rep.precision)},
                {"min_slack", rep.min_slack},
                {"positive_definite", rep.positive_definite},
                {"violations", rep.violations},
                {"ok", rep.ok}};
}

}  // namespace assockg
