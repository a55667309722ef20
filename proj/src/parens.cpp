#include "assoc_kneser/parens.hpp"

#include <map>
#include <stdexcept>

namespace assockg {

ParenTree paren_leaf() {
    static const ParenTree leaf = std::make_shared<const ParenNode>();
    return leaf;
}

ParenTree paren_node(ParenTree left, ParenTree right) {
    auto node = std::make_shared<ParenNode>();
    node->leaf_count = left->leaf_count + right->leaf_count;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

int leaf_count(const ParenTree& t) { return t->leaf_count; }

bool paren_equal(const ParenTree& a, const ParenTree& b) {
    if (a.get() == b.get()) return true;
    if (a->is_leaf() || b->is_leaf()) return a->is_leaf() == b->is_leaf();
    if (a->leaf_count != b->leaf_count) return false;
    return paren_equal(a->left, b->left) && paren_equal(a->right, b->right);
}

namespace {

void render(const ParenTree& t, int& next_symbol, std::string& out) {
    if (t->is_leaf()) {
        out += "s" + std::to_string(next_symbol++);
        return;
    }
    out += "(";
    render(t->left, next_symbol, out);
    out += " ";
    render(t->right, next_symbol, out);
    out += ")";
}

}  // namespace

std::string paren_to_string(const ParenTree& t, int first_symbol) {
    std::string out;
    int sym = first_symbol;
    render(t, sym, out);
    return out;
}

namespace {

// Apex of the triangle resting on chord {a, b}: the unique j with a < j < b
// such that {a, j, b} is a triangle of T.
int find_apex(const Triangulation& t, int a, int b) {
    for (int j = a + 1; j < b; ++j)
        if (t.has_edge(a, j) && t.has_edge(j, b)) return j;
    throw std::logic_error("no apex found; triangulation is malformed");
}

ParenTree build_tree(const Triangulation& t, int a, int b) {
    if (b - a == 1) return paren_leaf();
    int j = find_apex(t, a, b);
    return paren_node(build_tree(t, a, j), build_tree(t, j, b));
}

// Collects the chord {lo, lo + leaves} of every internal node; only the root
// chord {1, n} is a polygon side, all others are diagonals.
void collect_chords(const ParenTree& t, int lo, int n, std::vector<Diagonal>& out) {
    if (t->is_leaf()) return;
    int hi = lo + t->leaf_count;
    if (!(lo == 1 && hi == n)) out.emplace_back(lo, hi);
    collect_chords(t->left, lo, n, out);
    collect_chords(t->right, lo + t->left->leaf_count, n, out);
}

}  // namespace

ParenTree to_parenthesization(const Triangulation& t) {
    return build_tree(t, 1, t.n());
}

Triangulation from_parenthesization(const ParenTree& tree, int n) {
    if (tree->leaf_count != n - 1)
        throw std::invalid_argument("parenthesization must have n-1 symbols");
    std::vector<Diagonal> diags;
    collect_chords(tree, 1, n, diags);
    return Triangulation(n, diags);
}

std::vector<ParenTree> all_parenthesizations(int m) {
    if (m < 1) throw std::invalid_argument("need at least one symbol");
    std::vector<std::vector<ParenTree>> memo(m + 1);
    memo[1] = {paren_leaf()};
    for (int sz = 2; sz <= m; ++sz)
        for (int s = 1; s < sz; ++s)
            for (const ParenTree& l : memo[s])
                for (const ParenTree& r : memo[sz - s])
                    memo[sz].push_back(paren_node(l, r));
    return memo[m];
}

bool is_k_parenthesization(const ParenTree& t, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (t->is_leaf()) return true;
    if (k == 0) return false;
    const ParenNode* cur = t.get();
    if (k % 2 == 1) {
        // p1 (p2 ... (pl s)...): walk the right spine, each left child must
        // be a (k-1)-parenthesization, and the spine must end in a symbol.
        while (!cur->is_leaf()) {
            if (!is_k_parenthesization(cur->left, k - 1)) return false;
            cur = cur->right.get();
        }
    } else {
        // (...((s p1) p2)... pl): mirrored.
        while (!cur->is_leaf()) {
            if (!is_k_parenthesization(cur->right, k - 1)) return false;
            cur = cur->left.get();
        }
    }
    return true;
}

namespace {

// Generator for the grammar  shape ::= s | Node(part, shape)  (odd k)
// or  shape ::= s | Node(shape, part)  (even k), where part ranges over
// (k-1)-parenthesizations. The split-off of the first part is unique, so no
// tree is produced twice.
struct KParenGen {
    int k;
    std::vector<std::vector<ParenTree>> parts;   // (k-1)-parens by leaf count
    std::vector<std::vector<ParenTree>> shapes;  // results by leaf count

    std::vector<ParenTree> run(int m) {
        parts.assign(m + 1, {});
        shapes.assign(m + 1, {});
        for (int s = 1; s <= m; ++s)
            parts[s] = enumerate_k_parenthesizations(s, k - 1);
        shapes[1] = {paren_leaf()};
        for (int sz = 2; sz <= m; ++sz)
            for (int s = 1; s < sz; ++s)
                for (const ParenTree& part : parts[s])
                    for (const ParenTree& rest : shapes[sz - s])
                        shapes[sz].push_back(k % 2 == 1 ? paren_node(part, rest)
                                                        : paren_node(rest, part));
        return shapes[m];
    }
};

}  // namespace

std::vector<ParenTree> enumerate_k_parenthesizations(int m, int k) {
    if (m < 1) throw std::invalid_argument("need at least one symbol");
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k == 0 || m == 1)
        return m == 1 ? std::vector<ParenTree>{paren_leaf()} : std::vector<ParenTree>{};
    KParenGen gen{k, {}, {}};
    return gen.run(m);
}

}  // namespace assockg
