#pragma once

#include <vector>

#include "assoc_kneser/coloring.hpp"
#include "assoc_kneser/kneser.hpp"

namespace assockg {

/// A permutation of [n], stored as the image sequence sigma(1..n).
using Permutation = std::vector<int>;

/// A triangulation of the prism over the (n-1)-simplex, built bottom-up:
/// V_0 = [n]; at step t the chosen vertex v_t is replaced by its primed copy
/// and the simplex V_{t-1} + {v_t'} is added. Primed copies are encoded as
/// n + i.
struct PrismTriangulation {
    int n = 0;
    Permutation removal_order;
    std::vector<std::vector<int>> simplices;  // n simplices, sorted vertex lists
};

PrismTriangulation perm_to_prism(const Permutation& sigma);
Permutation prism_to_perm(const PrismTriangulation& pt);

/// All permutations of [n] in lexicographic order; the vertex order of the
/// permutohedron Kneser graph.
std::vector<Permutation> all_permutations(int n);

/// The permutohedron Kneser graph: facets correspond to nonempty proper
/// subsets S of [n] with sigma on facet f_S iff sigma(S) = [|S|], so two
/// permutations are adjacent iff no prefix preimage set coincides. Built as
/// an ordinary Kneser graph over the facet family.
KneserGraph perm_kneser(int n);

/// Direct prefix-set adjacency test (cross-check of the facet model).
bool perm_adjacent(const Permutation& a, const Permutation& b);

/// Proper n-coloring: sigma maps to sigma^{-1}(1).
Coloring prefix_coloring(int n);

/// The (n-1)! right cosets of the cyclic group generated by i -> i+1; each
/// is a clique of size n and together they partition the vertices. Returned
/// as index lists into all_permutations(n).
std::vector<std::vector<int>> cyclic_cliques(int n);

}  // namespace assockg
