#include "assoc_kneser/triangulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace assockg {

namespace {

void validate(int n, const DiagonalSet& ds) {
    if (ds.count() != n - 3)
        throw std::invalid_argument("triangulation must have exactly n-3 diagonals");
    auto list = ds.to_diagonals();
    for (size_t a = 0; a < list.size(); ++a)
        for (size_t b = a + 1; b < list.size(); ++b)
            if (crosses(list[a], list[b]))
                throw std::invalid_argument("triangulation diagonals must not cross");
}

}  // namespace

Triangulation::Triangulation(int n, const std::vector<Diagonal>& diagonals)
    : n_(n), diags_(n) {
    for (const Diagonal& d : diagonals) {
        if (!is_diagonal(n, d.i, d.j))
            throw std::invalid_argument("label pair is not a diagonal of the n-gon");
        diags_.set(d);
    }
    if (static_cast<int>(diagonals.size()) != diags_.count())
        throw std::invalid_argument("duplicate diagonal in triangulation");
    validate(n, diags_);
}

Triangulation::Triangulation(int n, DiagonalSet diagonals)
    : n_(n), diags_(std::move(diagonals)) {
    if (diags_.n() != n) throw std::invalid_argument("diagonal set size mismatch");
    validate(n, diags_);
}

bool Triangulation::has_edge(int u, int v) const {
    if (u == v) return false;
    int d = (v - u) % n_;
    if (d < 0) d += n_;
    if (d == 1 || d == n_ - 1) return true;  // polygon side
    return diags_.test(Diagonal(u, v));
}

DihedralElement dihedral_compose(const DihedralElement& h,
                                 const DihedralElement& g, int n) {
    // h(g(v)): reflections conjugate rotations to their inverses.
    DihedralElement out;
    int r = h.reflect ? (h.rotation - g.rotation) : (h.rotation + g.rotation);
    out.rotation = ((r % n) + n) % n;
    out.reflect = h.reflect != g.reflect;
    return out;
}

int dihedral_apply_vertex(int v, const DihedralElement& g, int n) {
    int u = g.reflect ? n + 1 - v : v;
    return cyc_label(u + g.rotation, n);
}

Diagonal dihedral_apply(const Diagonal& d, const DihedralElement& g, int n) {
    return Diagonal(dihedral_apply_vertex(d.i, g, n),
                    dihedral_apply_vertex(d.j, g, n));
}

Triangulation dihedral_apply(const Triangulation& t, const DihedralElement& g) {
    std::vector<Diagonal> out;
    for (const Diagonal& d : t.diagonal_list())
        out.push_back(dihedral_apply(d, g, t.n()));
    return Triangulation(t.n(), out);
}

std::vector<DihedralElement> dihedral_group(int n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * n);
    for (int s = 0; s <= 1; ++s)
        for (int r = 0; r < n; ++r) out.push_back({r, s == 1});
    return out;
}

namespace {

// Expands all triangulations of the chain a..b whose closing edge is the
// chord {a, b}: every triangulation has a unique apex k for that chord, so
// choosing k and recursing on both sub-chains visits each exactly once, in
// ascending apex order.
void expand(int n, int a, int b, DiagonalSet& acc,
            const std::function<void()>& cont) {
    if (b - a < 2) {
        cont();
        return;
    }
    for (int k = a + 1; k < b; ++k) {
        int add1 = -1, add2 = -1;
        if (k - a >= 2) {
            add1 = diagonal_index(n, Diagonal(a, k));
            acc.set(add1);
        }
        if (b - k >= 2) {
            add2 = diagonal_index(n, Diagonal(k, b));
            acc.set(add2);
        }
        expand(n, a, k, acc, [&] { expand(n, k, b, acc, cont); });
        if (add1 >= 0) acc.reset(add1);
        if (add2 >= 0) acc.reset(add2);
    }
}

}  // namespace

void for_each_triangulation(int n, const std::function<void(const Triangulation&)>& fn) {
    if (n < 3) throw std::invalid_argument("polygon size must be at least 3");
    DiagonalSet acc(n);
    expand(n, 1, n, acc, [&] { fn(Triangulation(n, acc)); });
}

std::vector<Triangulation> enumerate_triangulations(int n) {
    std::vector<Triangulation> out;
    for_each_triangulation(n, [&](const Triangulation& t) { out.push_back(t); });
    return out;
}

unsigned long long catalan_number(int k) {
    if (k < 0) throw std::invalid_argument("negative Catalan index");
    std::vector<unsigned long long> c(k + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= k; ++m)
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c[k];
}

std::vector<Triangle> triangles_of(const Triangulation& t) {
    const int n = t.n();
    std::vector<Triangle> out;
    if (n == 3) {
        out.push_back({1, 2, 3});
        return out;
    }
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (!t.has_edge(a, b)) continue;
            for (int c = b + 1; c <= n; ++c)
                if (t.has_edge(b, c) && t.has_edge(a, c)) out.push_back({a, b, c});
        }
    if (static_cast<int>(out.size()) != n - 2)
        throw std::logic_error("triangle decomposition has wrong size");
    return out;
}

std::vector<int> ears_of(const Triangulation& t) {
    const int n = t.n();
    std::vector<int> out;
    for (int i = 1; i <= n; ++i) {
        int a = i, b = cyc_next(i, n), c = cyc_next(b, n);
        if (t.has_edge(a, c)) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<int> star_center(const Triangulation& t) {
    const int n = t.n();
    if (n == 3) return 1;  // empty triangulation: a star by convention
    auto list = t.diagonal_list();
    for (int cand : {list[0].i, list[0].j}) {
        bool all = true;
        for (const Diagonal& d : list)
            if (d.i != cand && d.j != cand) {
                all = false;
                break;
            }
        if (all) return cand;
    }
    return std::nullopt;
}

namespace {

bool cyclic_and_distinct(const ZTuple& z) {
    // Going around the polygon in one of the two directions, the sequence
    // must wrap exactly once.
    int descents = 0, ascents = 0;
    for (int k = 0; k < 6; ++k) {
        int a = z[k], b = z[(k + 1) % 6];
        if (a == b) return false;
        (b < a ? descents : ascents) += 1;
    }
    return descents == 1 || ascents == 1;
}

bool z_triangles_present(const std::vector<Triangle>& tris, const ZTuple& z) {
    auto has_tri = [&](int a, int b, int c) {
        Triangle k{a, b, c};
        std::sort(k.begin(), k.end());
        return std::find(tris.begin(), tris.end(), k) != tris.end();
    };
    return has_tri(z[1], z[2], z[3]) && has_tri(z[1], z[3], z[4]) &&
           has_tri(z[0], z[1], z[4]) && has_tri(z[0], z[4], z[5]);
}

}  // namespace

bool is_z_tuple(const Triangulation& t, const ZTuple& z) {
    const int n = t.n();
    for (int v : z)
        if (v < 1 || v > n) return false;
    if (!cyclic_and_distinct(z)) return false;
    return z_triangles_present(triangles_of(t), z);
}

std::optional<ZTuple> find_z_copy(const Triangulation& t) {
    const int n = t.n();
    if (n < 6) return std::nullopt;
    auto tris = triangles_of(t);
    // Iterate over 6-subsets in lexicographic order, then over the 12 cyclic
    // orderings (6 rotations in each direction), ascending direction first.
    std::vector<int> comb = {1, 2, 3, 4, 5, 6};
    auto advance = [&]() {
        int k = 5;
        while (k >= 0 && comb[k] == n - (5 - k)) --k;
        if (k < 0) return false;
        ++comb[k];
        for (int j = k + 1; j < 6; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        for (int dir = 0; dir < 2; ++dir)
            for (int s = 0; s < 6; ++s) {
                ZTuple z;
                for (int k = 0; k < 6; ++k) {
                    int pos = dir == 0 ? (s + k) % 6 : ((s - k) % 6 + 6) % 6;
                    z[k] = comb[pos];
                }
                if (z_triangles_present(tris, z)) return z;
            }
    } while (advance());
    return std::nullopt;
}

Triangulation hexagon_Z() {
    return Triangulation(6, std::vector<Diagonal>{{1, 5}, {2, 4}, {2, 5}});
}

Triangulation hexagon_Delta() {
    return Triangulation(6, std::vector<Diagonal>{{1, 3}, {1, 5}, {3, 5}});
}

Triangulation hexagon_DeltaPrime() {
    return Triangulation(6, std::vector<Diagonal>{{2, 4}, {2, 6}, {4, 6}});
}

bool is_delta_type(const Triangulation& t) {
    if (t.n() != 6) return false;
    return t == hexagon_Delta() || t == hexagon_DeltaPrime();
}

}  // namespace assockg
