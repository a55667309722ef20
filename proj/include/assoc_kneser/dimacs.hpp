#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "assoc_kneser/kneser.hpp"

namespace assockg {

/// Writes the graph in DIMACS .col format: a "p edge V E" header followed by
/// one "e u v" line per edge (1-indexed, u < v, each edge once).
void export_dimacs(const KneserGraph& g, std::ostream& out);
void export_dimacs(const KneserGraph& g, const std::string& path);

/// Parses a DIMACS .col stream back into adjacency rows (for round-trips and
/// external-solver interop). Comment lines ("c ...") are ignored.
std::vector<Bits> import_dimacs(std::istream& in);

}  // namespace assockg
