#include "assoc_kneser/circulant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "assoc_kneser/secondary.hpp"

namespace assockg {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Interval Interval::from_rat(const Rat& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

void Interval::widen(const Interval& pad) {
    mpfr_sub(lo_, lo_, pad.hi_, MPFR_RNDD);
    mpfr_add(hi_, hi_, pad.hi_, MPFR_RNDU);
}

Interval Interval::operator+(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval Interval::operator-(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const {
    Interval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const {
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // Lower bound: min of the four products rounded down.
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // Upper bound: max of the four products rounded up.
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const {
    if (!o.certainly_positive() && !o.certainly_negative())
        throw std::runtime_error("interval division by an uncertified sign");
    Interval r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}
bool Interval::is_exact_zero() const {
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string Interval::lo_string() const {
    std::ostringstream os;
    os << lo_double();
    return os.str();
}

namespace {

// Enclosure of 2*pi*num/den as [lo, hi].
void angle_bounds(long num, long den, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
    mpfr_t pi_lo, pi_hi;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(pi_hi, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    if (num >= 0) {
        mpfr_mul_si(lo, pi_lo, 2 * num, MPFR_RNDD);
        mpfr_mul_si(hi, pi_hi, 2 * num, MPFR_RNDU);
    } else {
        mpfr_mul_si(lo, pi_hi, 2 * num, MPFR_RNDD);
        mpfr_mul_si(hi, pi_lo, 2 * num, MPFR_RNDU);
    }
    mpfr_div_si(lo, lo, den, MPFR_RNDD);
    mpfr_div_si(hi, hi, den, MPFR_RNDU);
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
}

// cos or sin over a tiny angle interval via midpoint evaluation and the
// Lipschitz-1 bound |f(x) - f(y)| <= |x - y|.
Interval trig_enclosure(long num, long den, mpfr_prec_t prec, bool is_cos) {
    mpfr_t alo, ahi, width;
    mpfr_init2(alo, prec);
    mpfr_init2(ahi, prec);
    mpfr_init2(width, prec);
    angle_bounds(num, den, prec, alo, ahi);
    mpfr_sub(width, ahi, alo, MPFR_RNDU);
    Interval r(prec);
    if (is_cos) {
        mpfr_cos(r.raw_lo(), alo, MPFR_RNDD);
        mpfr_cos(r.raw_hi(), alo, MPFR_RNDU);
    } else {
        mpfr_sin(r.raw_lo(), alo, MPFR_RNDD);
        mpfr_sin(r.raw_hi(), alo, MPFR_RNDU);
    }
    mpfr_sub(r.raw_lo(), r.raw_lo(), width, MPFR_RNDD);
    mpfr_add(r.raw_hi(), r.raw_hi(), width, MPFR_RNDU);
    mpfr_clear(alo);
    mpfr_clear(ahi);
    mpfr_clear(width);
    return r;
}

}  // namespace

Interval cos_of_angle(long num, long den, mpfr_prec_t prec) {
    return trig_enclosure(num, den, prec, true);
}

Interval sin_of_angle(long num, long den, mpfr_prec_t prec) {
    return trig_enclosure(num, den, prec, false);
}

CirculantForm circulant_form_exact(int n) {
    Rat cosv;
    if (n == 4)
        cosv = 0;
    else if (n == 6)
        cosv = Rat(1, 2);
    else
        throw std::invalid_argument("exact circulant form exists for n = 4, 6");
    CirculantForm f;
    f.n = n;
    Rat base = (2 - 2 * cosv) / n;
    f.a.assign(n, base);
    f.a[0] += 2 * cosv;
    f.a[1] += -1;
    f.a[n - 1] += -1;
    return f;
}

Rat circ_pair(const CirculantForm& form, const std::vector<Rat>& psi,
              const std::vector<Rat>& psi2) {
    const int n = form.n;
    Rat s = 0;
    for (int i = 0; i < n; ++i) {
        if (psi[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (psi2[j] == 0) continue;
            s += form.a[((i - j) % n + n) % n] * psi[i] * psi2[j];
        }
    }
    return s;
}

namespace {

// Interval circulant coefficients for the regular n-gon.
std::vector<Interval> circulant_coeffs_interval(int n, mpfr_prec_t prec) {
    Interval c = cos_of_angle(1, n, prec);
    Interval two = Interval::from_long(2, prec);
    Interval base = (two - two * c) / Interval::from_long(n, prec);
    std::vector<Interval> a(n, base);
    a[0] = a[0] + two * c;
    a[1] = a[1] - Interval::from_long(1, prec);
    a[n - 1] = a[n - 1] - Interval::from_long(1, prec);
    return a;
}

struct IntervalGon {
    int n;
    std::vector<Interval> x, y;  // vertex k+1 at angle 2*pi*k/n
};

IntervalGon regular_gon(int n, mpfr_prec_t prec) {
    IntervalGon g{n, {}, {}};
    for (int k = 0; k < n; ++k) {
        g.x.push_back(cos_of_angle(k, n, prec));
        g.y.push_back(sin_of_angle(k, n, prec));
    }
    return g;
}

// Facet-normal value vector for diagonal d on the regular n-gon: zero on the
// nonnegative side of the line through d, the (certainly negative) line
// values elsewhere. Unnormalized; positivity claims are scale invariant.
std::vector<Interval> facet_normal_interval(const IntervalGon& g, const Diagonal& d,
                                            mpfr_prec_t prec) {
    const int n = g.n;
    int i = d.i - 1, j = d.j - 1;
    Interval dx = g.x[j] - g.x[i];
    Interval dy = g.y[j] - g.y[i];
    auto raw = [&](int p) {
        return dx * (g.y[p] - g.y[i]) - dy * (g.x[p] - g.x[i]);
    };
    Interval probe = raw(d.i % n);  // vertex d.i + 1, strictly inside one side
    bool flip;
    if (probe.certainly_negative())
        flip = false;
    else if (probe.certainly_positive())
        flip = true;
    else
        throw std::runtime_error("precision too low to orient the facet normal");
    std::vector<Interval> psi(n, Interval(prec));
    for (int p = 0; p < n; ++p) {
        if (p == i || p == j) continue;  // exactly zero on the diagonal
        Interval v = flip ? -raw(p) : raw(p);
        if (v.certainly_negative())
            psi[p] = v;
        else if (v.certainly_positive())
            ;  // min(l, 0) = 0
        else
            throw std::runtime_error("precision too low to certify a vertex sign");
    }
    return psi;
}

}  // namespace

bool circulant_descends(int n, mpfr_prec_t prec) {
    if (n == 4 || n == 6) {
        CirculantForm f = circulant_form_exact(n);
        Rat s = 0;
        for (const Rat& v : f.a) s += v;
        if (s != 0) return false;
        // cos/sin sums still need the transcendental values; fall through to
        // the interval check for those.
    }
    auto a = circulant_coeffs_interval(n, prec);
    Interval s0(prec), sc(prec), ss(prec);
    for (int k = 0; k < n; ++k) {
        s0 += a[k];
        sc += a[k] * cos_of_angle(k, n, prec);
        ss += a[k] * sin_of_angle(k, n, prec);
    }
    return s0.contains_zero() && sc.contains_zero() && ss.contains_zero();
}

ObtuseReport verify_obtuse(int n, mpfr_prec_t prec) {
    if (n < 4) throw std::invalid_argument("needs n >= 4");
    ObtuseReport rep;
    rep.n = n;
    rep.precision = prec;
    auto diags = all_diagonals(n);
    const int D = static_cast<int>(diags.size());

    if (n == 4 || n == 6) {
        rep.mode = "exact";
        CirculantForm form = circulant_form_exact(n);
        PolygonRealization q = affine_regular_polygon(n);
        std::vector<std::vector<Rat>> psis;
        for (const Diagonal& d : diags) psis.push_back(facet_normal(q, d).psi);
        Rat min_slack;
        bool have = false;
        for (int b = 0; b < D; ++b)
            for (int a2 = 0; a2 <= b; ++a2) {
                if (crosses(diags[a2], diags[b])) continue;
                Rat v = circ_pair(form, psis[a2], psis[b]);
                if (!(v > 0))
                    rep.violations.push_back("pair ({" + std::to_string(diags[a2].i) +
                                             "," + std::to_string(diags[a2].j) + "},{" +
                                             std::to_string(diags[b].i) + "," +
                                             std::to_string(diags[b].j) + "})");
                if (!have || v < min_slack) {
                    min_slack = v;
                    have = true;
                }
            }
        rep.min_slack = min_slack.get_str();
        // Positive definiteness: pivots of the Gram slice (a_{s-t}), s,t in [4, n].
        const int m = n - 3;
        std::vector<std::vector<Rat>> g(m, std::vector<Rat>(m));
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) g[s][t] = form.a[((s - t) % n + n) % n];
        rep.positive_definite = true;
        for (int col = 0; col < m; ++col) {
            if (!(g[col][col] > 0)) {
                rep.positive_definite = false;
                break;
            }
            for (int r = col + 1; r < m; ++r) {
                Rat f = g[r][col] / g[col][col];
                for (int c2 = col; c2 < m; ++c2) g[r][c2] -= f * g[col][c2];
            }
        }
        rep.ok = rep.violations.empty() && rep.positive_definite;
        return rep;
    }

    rep.mode = "interval";
    auto a = circulant_coeffs_interval(n, prec);
    IntervalGon gon = regular_gon(n, prec);
    std::vector<std::vector<Interval>> psis;
    psis.reserve(D);
    for (const Diagonal& d : diags) psis.push_back(facet_normal_interval(gon, d, prec));

    Interval min_slack(prec);
    bool have = false;
    for (int b = 0; b < D; ++b) {
        // Convolution c(i) = sum_j a_{i-j} psi_b(j); reused across partners.
        std::vector<Interval> conv(n, Interval(prec));
        for (int j = 0; j < n; ++j) {
            if (psis[b][j].is_exact_zero()) continue;
            for (int i = 0; i < n; ++i)
                conv[i] += a[((i - j) % n + n) % n] * psis[b][j];
        }
        for (int a2 = 0; a2 <= b; ++a2) {
            if (crosses(diags[a2], diags[b])) continue;
            Interval v(prec);
            for (int i = 0; i < n; ++i) {
                if (psis[a2][i].is_exact_zero()) continue;
                v += psis[a2][i] * conv[i];
            }
            if (!v.certainly_positive())
                rep.violations.push_back("pair ({" + std::to_string(diags[a2].i) + "," +
                                         std::to_string(diags[a2].j) + "},{" +
                                         std::to_string(diags[b].i) + "," +
                                         std::to_string(diags[b].j) + "})");
            if (!have || v.lo_double() < min_slack.lo_double()) {
                min_slack = v;
                have = true;
            }
        }
    }
    rep.min_slack = min_slack.lo_string();

    // Positive definiteness via elimination pivots with certified signs.
    const int m = n - 3;
    std::vector<std::vector<Interval>> g(m, std::vector<Interval>(m, Interval(prec)));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) g[s][t] = a[((s - t) % n + n) % n];
    rep.positive_definite = true;
    for (int col = 0; col < m && rep.positive_definite; ++col) {
        if (!g[col][col].certainly_positive()) {
            rep.positive_definite = false;
            break;
        }
        for (int r = col + 1; r < m; ++r) {
            Interval f = g[r][col] / g[col][col];
            for (int c2 = col; c2 < m; ++c2) g[r][c2] = g[r][c2] - f * g[col][c2];
        }
    }
    rep.ok = rep.violations.empty() && rep.positive_definite;
    return rep;
}

DotControlReport naive_dot_control(int n, mpfr_prec_t prec) {
    DotControlReport rep;
    IntervalGon gon = regular_gon(n, prec);
    auto diags = all_diagonals(n);
    const int D = static_cast<int>(diags.size());
    std::vector<std::vector<Interval>> psis;
    for (const Diagonal& d : diags) psis.push_back(facet_normal_interval(gon, d, prec));

    // Orthogonal projection onto X_Q: subtract the least-squares affine fit
    // (X_Q is exactly the orthogonal complement of the affine value vectors).
    auto project = [&](const std::vector<Interval>& psi) {
        Interval sx(prec), sy(prec), sxx(prec), sxy(prec), syy(prec);
        Interval s1 = Interval::from_long(n, prec);
        Interval b0(prec), bx(prec), by(prec);
        for (int k = 0; k < n; ++k) {
            sx += gon.x[k];
            sy += gon.y[k];
            sxx += gon.x[k] * gon.x[k];
            sxy += gon.x[k] * gon.y[k];
            syy += gon.y[k] * gon.y[k];
            b0 += psi[k];
            bx += psi[k] * gon.x[k];
            by += psi[k] * gon.y[k];
        }
        // Solve [sxx sxy sx; sxy syy sy; sx sy n] (alpha beta gamma) = (bx by b0)
        // by Cramer's rule.
        auto det3 = [&](const Interval& a11, const Interval& a12, const Interval& a13,
                        const Interval& a21, const Interval& a22, const Interval& a23,
                        const Interval& a31, const Interval& a32, const Interval& a33) {
            return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
                   a13 * (a21 * a32 - a22 * a31);
        };
        Interval det = det3(sxx, sxy, sx, sxy, syy, sy, sx, sy, s1);
        Interval da = det3(bx, sxy, sx, by, syy, sy, b0, sy, s1);
        Interval db = det3(sxx, bx, sx, sxy, by, sy, sx, b0, s1);
        Interval dc = det3(sxx, sxy, bx, sxy, syy, by, sx, sy, b0);
        Interval alpha = da / det, beta = db / det, gamma = dc / det;
        std::vector<Interval> out;
        out.reserve(n);
        for (int k = 0; k < n; ++k)
            out.push_back(psi[k] - (alpha * gon.x[k] + beta * gon.y[k] + gamma));
        return out;
    };

    std::vector<std::vector<Interval>> projs;
    for (int d = 0; d < D; ++d) projs.push_back(project(psis[d]));

    bool have = false;
    double minv = 0;
    for (int b = 0; b < D; ++b)
        for (int a2 = 0; a2 <= b; ++a2) {
            if (crosses(diags[a2], diags[b])) continue;
            Interval dot(prec);
            for (int k = 0; k < n; ++k) dot += projs[a2][k] * psis[b][k];
            if (!have || dot.lo_double() < minv) {
                minv = dot.lo_double();
                have = true;
                rep.min_value = dot.lo_string();
            }
            if (dot.certainly_negative() && !rep.found_nonpositive) {
                rep.found_nonpositive = true;
                rep.witness = "({" + std::to_string(diags[a2].i) + "," +
                              std::to_string(diags[a2].j) + "},{" +
                              std::to_string(diags[b].i) + "," +
                              std::to_string(diags[b].j) + "})";
            }
        }
    return rep;
}

}  // namespace assockg
