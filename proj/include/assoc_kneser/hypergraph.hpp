#pragma once

#include <optional>
#include <vector>

#include "assoc_kneser/chromatic.hpp"

namespace assockg {

/// Kneser r-uniform hypergraph of a set family: edges are the r-element
/// collections of pairwise disjoint members. Edges are never materialized;
/// queries run as r-clique searches on the disjointness graph.
struct KneserHypergraph {
    SetFamily family;
    int r = 2;
    std::vector<Bits> disjointness;  // adjacency rows of the disjointness graph

    int n() const { return family.size(); }
};

KneserHypergraph build_kneser_hypergraph(const SetFamily& family, int r);

/// True iff `sub` contains m pairwise adjacent vertices; fills `witness`
/// when found and witness != nullptr.
bool exists_clique(const std::vector<Bits>& adj, const Bits& sub, int m,
                   std::vector<int>* witness = nullptr);

struct HyperVerifyResult {
    bool proper = false;
    std::optional<std::vector<int>> violation;  // a monochromatic hyperedge
};

HyperVerifyResult verify_hypergraph_coloring(const KneserHypergraph& hg,
                                             const Coloring& coloring);

struct HyperChromaticResult {
    bool exact = false;
    int value = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    Coloring coloring;  // proper with upper_bound colors
    bool refutation_complete = false;
};

/// Exact chromatic number of KG^r(family) by complete search (delegates to
/// the graph solver when r = 2).
HyperChromaticResult hypergraph_chromatic(const SetFamily& family, int r,
                                          const SolveOptions& opt = {});

/// Fan colors grouped in blocks of r-1: a proper coloring of KG^r(T_n) with
/// ceil((n-2)/(r-1)) colors.
Coloring grouped_fan_coloring(const std::vector<Triangulation>& ts, int r);

/// Star-deleted colors grouped in blocks of r-1, with the deleted star
/// (center n) recolored to 1; proper for KG^r(T_n) when r >= 3 because no
/// star lies in a hyperedge. Uses ceil((n-3)/(r-1)) colors.
Coloring grouped_star_deleted_coloring(const std::vector<Triangulation>& ts, int r);

}  // namespace assockg
