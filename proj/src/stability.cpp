#include "assoc_kneser/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace assockg {

bool rsqa_diag(int n, const Diagonal& d, const Diagonal& d2) {
    if (!crosses(d, d2)) return true;
    // Crossing: require i' < i < j' < j < n and j' - i > 1.
    return d2.i < d.i && d.i < d2.j && d2.j < d.j && d.j < n && d2.j - d.i > 1;
}

bool rsqa_tri(const Triangulation& t, const Triangulation& t2) {
    if (t.n() != t2.n()) throw std::invalid_argument("polygon size mismatch");
    auto ds = t.diagonal_list(), ds2 = t2.diagonal_list();
    for (const Diagonal& d : ds)
        for (const Diagonal& d2 : ds2)
            if (!rsqa_diag(t.n(), d, d2)) return false;
    return true;
}

std::vector<Triangulation> enumerate_T3(int n) {
    if (n < 3) throw std::invalid_argument("polygon size must be at least 3");
    std::vector<Triangulation> out;
    for (const ParenTree& tree : enumerate_k_parenthesizations(n - 1, 3))
        out.push_back(from_parenthesization(tree, n));
    return out;
}

bool in_T3(const Triangulation& t) {
    return is_k_parenthesization(to_parenthesization(t), 3);
}

mpz_class count_Tk(int n, int k) {
    if (n < 3 || k < 0) throw std::invalid_argument("need n >= 3 and k >= 0");
    const int N = n - 1;  // coefficient of t^{n-1}
    std::vector<mpz_class> f(N + 1, 0);
    f[1] = 1;  // f_0 = t
    for (int step = 1; step <= k; ++step) {
        // g = 1 / (1 - f); f has zero constant term, so g_0 = 1 and
        // g_i = sum_{j=1..i} f_j g_{i-j}.
        std::vector<mpz_class> g(N + 1, 0);
        g[0] = 1;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= i; ++j) g[i] += f[j] * g[i - j];
        // next f = t * g
        std::vector<mpz_class> nf(N + 1, 0);
        for (int i = 1; i <= N; ++i) nf[i] = g[i - 1];
        f = std::move(nf);
    }
    return f[N];
}

mpz_class fibonacci(int k) {
    if (k < 1) throw std::invalid_argument("Fibonacci index starts at 1");
    mpz_class a = 1, b = 1;
    for (int i = 3; i <= k; ++i) {
        mpz_class c = a + b;
        a = b;
        b = c;
    }
    return b;
}

T3Witness t3_witness_of(const Triangulation& t) {
    const int n = t.n();
    T3Witness w;
    w.n = n;
    w.a.push_back(1);
    for (int i = 2; i <= n - 2; ++i)
        if (t.contains(Diagonal(i, n))) w.a.push_back(i);
    w.a.push_back(n - 1);
    // J_i: the j in [a_i + 2, a_{i+1} - 1] hit by a diagonal from the left.
    for (size_t gi = 0; gi + 1 < w.a.size(); ++gi) {
        std::vector<int> J;
        for (int j = w.a[gi] + 2; j <= w.a[gi + 1] - 1; ++j)
            for (int jp = 1; jp < j; ++jp)
                if (is_diagonal(n, jp, j) && t.contains(Diagonal(jp, j))) {
                    J.push_back(j);
                    break;
                }
        w.J.push_back(J);
    }
    return w;
}

Triangulation t3_from_witness(const T3Witness& w) {
    const int n = w.n;
    const auto& a = w.a;
    const int l = static_cast<int>(a.size());
    std::vector<Diagonal> diags;
    auto add = [&](int u, int v) {
        if (is_diagonal(n, u, v)) diags.emplace_back(u, v);
    };
    // (1) spokes to n
    for (int i = 1; i < l - 1; ++i) add(a[i], n);
    // (2) consecutive anchors
    for (int i = 0; i + 1 < l; ++i) add(a[i], a[i + 1]);
    for (int i = 0; i + 1 < l; ++i) {
        const std::vector<int>& J = w.J[i];
        // (3) anchor to each member of J_i
        for (int j : J) add(a[i], j);
        // (4) chain fill-ins: for j in the gap but not in J_i, connect j-1 to
        // the least element of J_i ∪ {a_{i+1}} that exceeds j.
        for (int j = a[i] + 2; j <= a[i + 1] - 1; ++j) {
            if (std::find(J.begin(), J.end(), j) != J.end()) continue;
            int jp = a[i + 1];
            for (int x : J)
                if (x > j && x < jp) jp = x;
            add(j - 1, jp);
        }
    }
    return Triangulation(n, diags);
}

Triangulation map_to_T3(const Triangulation& t) {
    return t3_from_witness(t3_witness_of(t));
}

bool check_nobetter(int n) {
    auto all = enumerate_triangulations(n);
    for (const Triangulation& t3 : enumerate_T3(n))
        for (const Triangulation& other : all)
            if (!(other == t3) && rsqa_tri(t3, other)) return false;
    return true;
}

std::optional<ZSwap> z_swap(const Triangulation& t) {
    auto z = find_z_copy(t);
    if (!z) return std::nullopt;
    const int n = t.n();
    for (const DihedralElement& g : dihedral_group(n)) {
        ZTuple m;
        for (int k = 0; k < 6; ++k) m[k] = dihedral_apply_vertex((*z)[k], g, n);
        if (m[5] != n) continue;
        if (!(m[0] < m[1] && m[1] < m[2] && m[2] < m[3] && m[3] < m[4])) continue;
        Triangulation image = dihedral_apply(t, g);
        DiagonalSet ds = image.diagonals();
        ds.reset(diagonal_index(n, Diagonal(m[1], m[4])));
        ds.set(diagonal_index(n, Diagonal(m[0], m[3])));
        return ZSwap{g, m, image, Triangulation(n, ds)};
    }
    return std::nullopt;  // unreachable: some dihedral image normalizes z
}

}  // namespace assockg
