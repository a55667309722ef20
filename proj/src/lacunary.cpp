#include "assoc_kneser/lacunary.hpp"

#include <stdexcept>

namespace assockg {

namespace {

std::string pair_str(const Diagonal& d, const Diagonal& d2) {
    return "({" + std::to_string(d.i) + "," + std::to_string(d.j) + "} sqsubset {" +
           std::to_string(d2.i) + "," + std::to_string(d2.j) + "})";
}

}  // namespace

LacunaryResult lacunary_attempt(int n, const Rat& growth) {
    if (n < 4) throw std::invalid_argument("needs n >= 4");
    LacunaryResult res;
    res.n = n;
    res.growth = growth;

    // Vertex i at (M^i, M^{2i}) for i in [n-1], vertex n at (1, 1); points on
    // the parabola in increasing x-order n, 1, 2, ..., n-1 are convex and
    // counterclockwise in label order.
    std::vector<Vec2> pts;
    Rat y = 1;
    for (int i = 1; i <= n - 1; ++i) {
        y *= growth;
        pts.push_back({y, y * y});
    }
    pts.push_back({Rat(1), Rat(1)});
    res.q = make_polygon(std::move(pts));

    auto diags = all_diagonals(n);
    const int D = static_cast<int>(diags.size());

    // Base vectors: the single crossing combination with the shifted chord
    // {i-, j-}; zero for diagonals through vertex n.
    std::vector<CoeffVec> lac(D, CoeffVec(n, Rat(0)));
    for (int di = 0; di < D; ++di) {
        const Diagonal& d = diags[di];
        if (d.j == n) continue;
        int im = d.i == 1 ? n : d.i - 1;
        int jm = d.j - 1;
        lac[di] = crossing_combination(res.q, d, Diagonal(im, jm));
    }
    std::vector<CoeffVec> vec = vec_vectors(res.q);
    std::vector<Covector> normals;
    for (const Diagonal& d : diags) normals.push_back(facet_normal(res.q, d));

    // Minimal slack over the crossing ⊏-pairs decides whether this M is big
    // enough; the correction weight must not eat that slack.
    Rat slack_min;
    Rat vec_mag_max = 0;
    bool have = false;
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            const Diagonal &d = diags[a], &d2 = diags[b];
            if (!crosses(d, d2) || !rsqa_diag(n, d, d2)) continue;
            Rat s = pairing(normals[a], lac[b]);
            if (!(s > 0)) {
                res.ok = false;
                res.detail = "base slack not positive at " + pair_str(d, d2);
                return res;
            }
            if (!have || s < slack_min) slack_min = s;
            have = true;
            Rat m = pairing(normals[a], vec[b]);
            if (m < 0) m = -m;
            if (m > vec_mag_max) vec_mag_max = m;
        }
    res.epsilon = (!have || vec_mag_max == 0) ? Rat(1) : slack_min / (2 * vec_mag_max);

    res.vectors.assign(D, CoeffVec(n, Rat(0)));
    for (int di = 0; di < D; ++di)
        for (int k = 0; k < n; ++k)
            res.vectors[di][k] = lac[di][k] + res.epsilon * vec[di][k];

    for (int di = 0; di < D; ++di)
        if (!in_XQ(res.q, res.vectors[di]))
            throw std::logic_error("lacunary vector left X_Q");

    // Final certification: every ⊏-pair pairs strictly positive.
    for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
            if (!rsqa_diag(n, diags[a], diags[b])) continue;
            if (!(pairing(normals[a], res.vectors[b]) > 0)) {
                res.ok = false;
                res.detail = "pairing not positive at " + pair_str(diags[a], diags[b]);
                return res;
            }
        }
    res.ok = true;
    return res;
}

LacunaryResult lacunary_construction(int n, int max_attempts) {
    Rat growth = 2;
    LacunaryResult last;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        last = lacunary_attempt(n, growth);
        last.attempts = attempt;
        if (last.ok) return last;
        growth = growth * growth;
    }
    throw std::runtime_error("lacunary schedule exhausted: " + last.detail);
}

DeltaCaseReport delta_case_vectors() {
    DeltaCaseReport rep;
    const int n = 6;
    PolygonRealization q = affine_regular_polygon(n);
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        rep.detail = why;
        return rep;
    };

    // The three bespoke long-diagonal vectors.
    auto special = [&](int i) {
        CoeffVec x(n, Rat(0));
        int c[6] = {5, -3, -1, 3, -1, -3};
        for (int k = 0; k < 6; ++k) x[cyc_label(i + k, n) - 1] = c[k];
        return x;
    };
    CoeffVec x14 = special(1), x36 = special(3), x25 = special(5);
    for (const CoeffVec* x : {&x14, &x36, &x25})
        if (!in_XQ(q, *x)) return fail("special vector not in X_Q");
    rep.checks.push_back("x_{i,i+3} in X_Q for i in {1,3,5}");

    // Decomposition into weighted crossing combinations (weights 6 and 2).
    {
        CoeffVec t1 = crossing_combination(q, Diagonal(1, 4), Diagonal(2, 6));
        CoeffVec t2 = crossing_combination(q, Diagonal(1, 4), Diagonal(3, 5));
        for (int k = 0; k < n; ++k)
            if (x14[k] != 6 * t1[k] + 2 * t2[k])
                return fail("x_{1,4} decomposition mismatch");
        rep.checks.push_back("x_{1,4} = 6*cc({1,4},{2,6}) + 2*cc({1,4},{3,5})");
    }

    // The triangle-type facet normals are the negative vertex indicators.
    for (auto [d, v] : std::vector<std::pair<Diagonal, int>>{
             {{1, 3}, 2}, {{1, 5}, 6}, {{3, 5}, 4}}) {
        Covector psi = facet_normal(q, d);
        for (int k = 0; k < n; ++k)
            if (psi.psi[k] != (k == v - 1 ? Rat(-1) : Rat(0)))
                return fail("triangle-type facet normal is not -1_v");
    }
    rep.checks.push_back("facet normals of {1,3},{1,5},{3,5} are -1_2, -1_6, -1_4");

    // Pairing formula and fan positivity over a grid of cone points.
    std::vector<CoeffVec> vec = vec_vectors(q);
    const CoeffVec& x13 = vec[diagonal_index(n, Diagonal(1, 3))];
    const CoeffVec& x15 = vec[diagonal_index(n, Diagonal(1, 5))];
    for (int l2 = 0; l2 <= 3; ++l2)
        for (int l4 = 0; l4 <= 3; ++l4)
            for (int l6 = 0; l6 <= 3; ++l6) {
                if (l2 == 0 && l4 == 0 && l6 == 0) continue;
                Covector w;
                w.psi.assign(n, Rat(0));
                w.psi[1] = -l2;
                w.psi[3] = -l4;
                w.psi[5] = -l6;
                Rat got = pairing(w, x14);
                if (got != 3 * l2 + 3 * l6 - 3 * l4)
                    return fail("pairing formula <w, x_{1,4}> mismatch");
                if (l4 <= l2 && l4 <= l6) {
                    if (!(pairing(w, x13) > 0 && got > 0 && pairing(w, x15) > 0))
                        return fail("fan {{1,3},{1,4},{1,5}} pairing not positive");
                }
            }
    rep.checks.push_back("<w, x_{1,4}> = 3l2 + 3l6 - 3l4 on the grid");
    rep.checks.push_back("fan pairings positive whenever l4 = min");
    return rep;
}

}  // namespace assockg
