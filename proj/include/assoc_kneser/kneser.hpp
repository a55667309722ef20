#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "assoc_kneser/set_family.hpp"
#include "assoc_kneser/triangulation.hpp"

namespace assockg {

/// Kneser graph of a set family: vertices are the members, edges join
/// disjoint members. Adjacency is kept as bitset rows.
struct KneserGraph {
    SetFamily family;
    std::vector<Bits> adj;

    int n() const { return family.size(); }
    long long edge_count() const;
    bool adjacent(int u, int v) const { return adj[u].test(v); }

    /// The subgraph induced by dropping the listed vertices (family members
    /// are dropped too, so the result is again a Kneser graph).
    KneserGraph without_vertices(const std::vector<int>& drop) const;

    /// Complement graph rows (no self-loops); used for independence numbers.
    std::vector<Bits> complement_rows() const;
};

KneserGraph build_kneser(const SetFamily& family);

/// The family whose members are the diagonal sets of the given
/// triangulations, over the canonical Diag_n ground set.
SetFamily family_from_triangulations(const std::vector<Triangulation>& ts);

/// KG(T_n) with vertices in enumeration order.
KneserGraph kneser_of_triangulations(int n);

/// The floor(n/2) pairwise disjoint zig-zag triangulations (one per start
/// vertex i in [floor(n/2)]); a maximum clique of KG(T_n).
std::vector<Triangulation> zigzag_cliques(int n);

/// True iff under the 2-coloring "diagonals {i, i+2} for i in [n-2] are red,
/// all others blue" every triangulation contains both colors. Computable for
/// n >= 4; the zero-defect claim it certifies concerns n >= 6.
bool cd2_witness_check(int n);

/// True iff T lies in a triangle of KG(T_n), i.e. two further pairwise
/// disjoint triangulations exist. Decided by exhaustive search.
bool triangle_membership(const Triangulation& t);

/// Same, but with the ambient triangulation list precomputed.
bool triangle_membership(const Triangulation& t, const std::vector<Triangulation>& all);

}  // namespace assockg
