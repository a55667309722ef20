#pragma once

#include <memory>
#include <string>
#include <vector>

#include "assoc_kneser/triangulation.hpp"

namespace assockg {

/// A full binary tree over an ordered sequence of symbols. Leaves carry no
/// payload: the k-th leaf in in-order is symbol k. Nodes are immutable and
/// shared, so subtrees can be reused freely during enumeration.
struct ParenNode;
using ParenTree = std::shared_ptr<const ParenNode>;

struct ParenNode {
    ParenTree left;   // null for leaves
    ParenTree right;  // null for leaves
    int leaf_count = 1;

    bool is_leaf() const { return !left; }
};

ParenTree paren_leaf();
ParenTree paren_node(ParenTree left, ParenTree right);

int leaf_count(const ParenTree& t);

/// Structural equality.
bool paren_equal(const ParenTree& a, const ParenTree& b);

/// Renders e.g. "((s1 s2) s3)" with symbols numbered from `first_symbol`.
std::string paren_to_string(const ParenTree& t, int first_symbol = 1);

/// The triangulation <-> parenthesization bijection: a triangle {i, j, k}
/// (i < j < k) of T corresponds to multiplying s_i..s_{j-1} by s_j..s_{k-1}.
ParenTree to_parenthesization(const Triangulation& t);
Triangulation from_parenthesization(const ParenTree& tree, int n);

/// All parenthesizations of m symbols (Catalan many), deterministic order.
std::vector<ParenTree> all_parenthesizations(int m);

/// Recursive shape test: a single symbol is a k-parenthesization for every
/// k >= 0; for odd k the tree must be p1 (p2 ... (pl s)...) with each p a
/// (k-1)-parenthesization, and mirrored for even k.
bool is_k_parenthesization(const ParenTree& t, int k);

/// Constructively generates every k-parenthesization on m symbols.
std::vector<ParenTree> enumerate_k_parenthesizations(int m, int k);

}  // namespace assockg
