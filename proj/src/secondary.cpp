#include "assoc_kneser/secondary.hpp"

#include <algorithm>
#include <stdexcept>

namespace assockg {

bool in_XQ(const PolygonRealization& q, const CoeffVec& c) {
    if (static_cast<int>(c.size()) != q.n) return false;
    Rat s0 = 0, sx = 0, sy = 0;
    for (int k = 0; k < q.n; ++k) {
        s0 += c[k];
        sx += c[k] * q.pts[k].x;
        sy += c[k] * q.pts[k].y;
    }
    return s0 == 0 && sx == 0 && sy == 0;
}

namespace {

// Gaussian elimination over the rationals; returns false if singular.
bool solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs,
                  std::vector<Rat>& out) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(m[col], m[piv]);
        std::swap(rhs[col], rhs[piv]);
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    out.assign(n, Rat(0));
    for (int r = n - 1; r >= 0; --r) {
        Rat acc = rhs[r];
        for (int c = r + 1; c < n; ++c) acc -= m[r][c] * out[c];
        out[r] = acc / m[r][r];
    }
    return true;
}

}  // namespace

bool is_affine_values(const PolygonRealization& q, const std::vector<Rat>& vals) {
    if (static_cast<int>(vals.size()) != q.n) return false;
    // Fit an affine function through three non-collinear vertices, compare.
    std::vector<std::vector<Rat>> m(3, std::vector<Rat>(3));
    std::vector<Rat> rhs(3);
    for (int r = 0; r < 3; ++r) {
        m[r] = {q.pts[r].x, q.pts[r].y, Rat(1)};
        rhs[r] = vals[r];
    }
    std::vector<Rat> sol;
    if (!solve_linear(m, rhs, sol)) return false;
    Affine2 fit{sol[0], sol[1], sol[2]};
    for (int k = 0; k < q.n; ++k)
        if (fit.eval(q.pts[k]) != vals[k]) return false;
    return true;
}

Rat pairing(const Covector& w, const CoeffVec& x) {
    if (w.psi.size() != x.size()) throw std::invalid_argument("size mismatch");
    Rat s = 0;
    for (size_t k = 0; k < x.size(); ++k) s += w.psi[k] * x[k];
    return s;
}

Rat polygon_area(const PolygonRealization& q) {
    Rat s = 0;
    for (int k = 0; k < q.n; ++k) {
        const Vec2& a = q.pts[k];
        const Vec2& b = q.pts[(k + 1) % q.n];
        s += a.x * b.y - b.x * a.y;
    }
    return s / 2;
}

Rat integral_affine(const PolygonRealization& q, const Affine2& l) {
    // Fan triangulation from vertex 1; over a triangle the integral of an
    // affine function is area * mean of the corner values.
    Rat total = 0;
    for (int k = 1; k + 1 < q.n; ++k) {
        const Vec2 &a = q.pts[0], &b = q.pts[k], &c = q.pts[k + 1];
        Rat area = orient(a, b, c) / 2;
        total += area * (l.eval(a) + l.eval(b) + l.eval(c)) / 3;
    }
    return total;
}

CoeffVec area_vector(const PolygonRealization& q, const Triangulation& t) {
    if (t.n() != q.n) throw std::invalid_argument("polygon size mismatch");
    CoeffVec v(q.n, Rat(0));
    for (const Triangle& tr : triangles_of(t)) {
        Rat area = orient(q.vertex(tr[0]), q.vertex(tr[1]), q.vertex(tr[2])) / 2;
        if (area < 0) area = -area;
        for (int corner : tr) v[corner - 1] += area;
    }
    return v;
}

Covector facet_normal(const PolygonRealization& q, const Diagonal& d) {
    if (!is_diagonal(q.n, d.i, d.j)) throw std::invalid_argument("not a diagonal");
    const Vec2 &pi = q.vertex(d.i), &pj = q.vertex(d.j);
    // l(p) = (pj - pi) x (p - pi); vanishes on the diagonal's line.
    auto raw = [&](const Vec2& p) -> Rat {
        return (pj.x - pi.x) * (p.y - pi.y) - (pj.y - pi.y) * (p.x - pi.x);
    };
    Rat side = raw(q.vertex(d.i + 1));  // strictly between i and j, never 0
    int flip = sgn(side) > 0 ? -1 : 1;
    std::vector<Rat> psi(q.n, Rat(0));
    Rat lowest = 0;
    for (int v = 1; v <= q.n; ++v) {
        if (v == d.i || v == d.j) continue;
        Rat lv = raw(q.vertex(v)) * flip;
        if (lv < 0) {
            psi[v - 1] = lv;
            if (lv < lowest) lowest = lv;
        }
    }
    // Scale so the most negative value is exactly -1.
    for (Rat& x : psi)
        if (x != 0) x /= -lowest;
    return Covector{std::move(psi)};
}

CoeffVec crossing_combination(const PolygonRealization& q, const Diagonal& d,
                              const Diagonal& e) {
    if (!crosses(d, e)) throw std::invalid_argument("chords must cross");
    const Vec2 &a = q.vertex(d.i), &b = q.vertex(d.j);
    const Vec2 &c = q.vertex(e.i), &f = q.vertex(e.j);
    // r = a + t (b - a) = c + s (f - c); lengths along a common segment are
    // proportional to the parameter, so no square roots are needed.
    Rat det = (b.x - a.x) * (c.y - f.y) - (b.y - a.y) * (c.x - f.x);
    if (det == 0) throw std::logic_error("crossing chords cannot be parallel");
    Rat t = ((c.x - a.x) * (c.y - f.y) - (c.y - a.y) * (c.x - f.x)) / det;
    Rat s = ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)) / det;
    CoeffVec out(q.n, Rat(0));
    out[d.i - 1] += 1 - t;  // |r b| / |a b|
    out[d.j - 1] += t;      // |r a| / |a b|
    out[e.i - 1] -= 1 - s;
    out[e.j - 1] -= s;
    return out;
}

std::vector<CoeffVec> vec_vectors(const PolygonRealization& q) {
    const int n = q.n;
    auto diags = all_diagonals(n);
    std::vector<CoeffVec> out;
    out.reserve(diags.size());
    for (const Diagonal& d : diags) {
        CoeffVec x(n, Rat(0));
        bool crossed = false;
        for (const Diagonal& e : diags) {
            if (!crosses(d, e)) continue;
            crossed = true;
            CoeffVec term = crossing_combination(q, d, e);
            for (int k = 0; k < n; ++k) x[k] += term[k];
        }
        if (!crossed) throw std::logic_error("every diagonal is crossed by another");
        out.push_back(std::move(x));
    }
    return out;
}

int SecondaryFan::argmax(const Covector& w) const {
    int best = 0;
    Rat best_val = pairing(w, verts[0]);
    for (size_t t = 1; t < verts.size(); ++t) {
        Rat val = pairing(w, verts[t]);
        if (val > best_val || (val == best_val && tris[t] < tris[best])) {
            best = static_cast<int>(t);
            if (val > best_val) best_val = val;
        }
    }
    return best;
}

SecondaryFan build_secondary_fan(const PolygonRealization& q) {
    SecondaryFan fan;
    fan.q = q;
    fan.tris = enumerate_triangulations(q.n);
    fan.verts.reserve(fan.tris.size());
    for (const Triangulation& t : fan.tris) fan.verts.push_back(area_vector(q, t));
    for (const Diagonal& d : all_diagonals(q.n))
        fan.normals.push_back(facet_normal(q, d));
    return fan;
}

GkzReport verify_gkz_incidence(const SecondaryFan& fan) {
    const int n = fan.n();
    auto diags = all_diagonals(n);
    for (size_t di = 0; di < diags.size(); ++di) {
        const Covector& psi = fan.normals[di];
        // Maximum pairing and the set of maximizers must be {T : d in T}.
        Rat maxv;
        bool first = true;
        std::vector<Rat> vals(fan.tris.size());
        for (size_t t = 0; t < fan.tris.size(); ++t) {
            vals[t] = pairing(psi, fan.verts[t]);
            if (first || vals[t] > maxv) {
                maxv = vals[t];
                first = false;
            }
        }
        for (size_t t = 0; t < fan.tris.size(); ++t) {
            bool on_facet = fan.tris[t].contains(diags[di]);
            if (on_facet != (vals[t] == maxv)) {
                GkzReport r;
                r.ok = false;
                r.detail = "facet incidence failed for diagonal {" +
                           std::to_string(diags[di].i) + "," +
                           std::to_string(diags[di].j) + "} at triangulation index " +
                           std::to_string(t);
                return r;
            }
        }
    }
    // Vertex property: the sum of T's facet normals is uniquely maximized at T.
    for (size_t t = 0; t < fan.tris.size(); ++t) {
        Covector w;
        w.psi.assign(n, Rat(0));
        for (const Diagonal& d : fan.tris[t].diagonal_list()) {
            const Covector& psi = fan.normals[diagonal_index(n, d)];
            for (int k = 0; k < n; ++k) w.psi[k] += psi.psi[k];
        }
        Rat self = pairing(w, fan.verts[t]);
        for (size_t o = 0; o < fan.tris.size(); ++o) {
            if (o == t) continue;
            if (!(pairing(w, fan.verts[o]) < self)) {
                GkzReport r;
                r.ok = false;
                r.detail = "triangulation index " + std::to_string(t) +
                           " is not a strict vertex of the realization";
                return r;
            }
        }
    }
    return {};
}

FarkasResult farkas_decompose(const SecondaryFan& fan, const Covector& w) {
    const int n = fan.n();
    if (is_affine_values(fan.q, w.psi))
        throw std::invalid_argument("covector must be nonzero in the quotient");
    FarkasResult res;
    res.tri_index = fan.argmax(w);
    res.diagonals = fan.tris[res.tri_index].diagonal_list();
    // Solve w(p) = sum_d c_d psi_d(p) + alpha x + beta y + gamma per vertex:
    // n equations, (n-3) + 3 unknowns; unique because the realization is a
    // simple polytope and the affine functions are independent.
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    std::vector<Rat> rhs(n);
    for (int p = 0; p < n; ++p) {
        for (int dcol = 0; dcol < n - 3; ++dcol) {
            const Covector& psi = fan.normals[diagonal_index(n, res.diagonals[dcol])];
            m[p][dcol] = psi.psi[p];
        }
        m[p][n - 3] = fan.q.pts[p].x;
        m[p][n - 2] = fan.q.pts[p].y;
        m[p][n - 1] = 1;
        rhs[p] = w.psi[p];
    }
    std::vector<Rat> sol;
    if (!solve_linear(m, rhs, sol))
        throw std::logic_error("facet normals at a vertex must be a basis");
    res.coeffs.assign(sol.begin(), sol.begin() + (n - 3));
    res.affine_part = Affine2{sol[n - 3], sol[n - 2], sol[n - 1]};
    return res;
}

HemisphereReport hemisphere_check(const SecondaryFan& fan,
                                  const std::vector<CoeffVec>& vectors,
                                  int samples, uint64_t seed) {
    HemisphereReport rep;
    const int n = fan.n();
    uint64_t state = seed;
    for (int s = 0; s < samples; ++s) {
        Covector w;
        w.psi.assign(n, Rat(0));
        do {
            for (int k = 0; k < n; ++k)
                w.psi[k] = Rat(static_cast<long>(splitmix64(state) % 201) - 100);
        } while (is_affine_values(fan.q, w.psi));
        int t = fan.argmax(w);
        ++rep.samples_run;
        for (const Diagonal& d : fan.tris[t].diagonal_list()) {
            Rat val = pairing(w, vectors[diagonal_index(n, d)]);
            if (!(val > 0)) {
                rep.ok = false;
                rep.detail = "sample " + std::to_string(s) + ": <w, x_{" +
                             std::to_string(d.i) + "," + std::to_string(d.j) +
                             "}> is not positive at the maximizing triangulation";
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace assockg
