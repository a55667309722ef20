#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "assoc_kneser/realization.hpp"

namespace assockg {

/// Closed interval [lo, hi] with outward MPFR rounding; every arithmetic
/// result encloses the exact result, so a sign certified here is a proof.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = 192);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_long(long v, mpfr_prec_t prec);
    static Interval from_rat(const Rat& q, mpfr_prec_t prec);
    /// [lo_eval - pad, hi_eval + pad]; used by the Lipschitz enclosures.
    void widen(const Interval& pad);

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator-() const;
    /// Division; the divisor must have a certified sign.
    Interval operator/(const Interval& o) const;
    Interval& operator+=(const Interval& o);

    bool certainly_positive() const;
    bool certainly_negative() const;
    bool contains_zero() const;
    bool is_exact_zero() const;

    double lo_double() const;
    double hi_double() const;
    std::string lo_string() const;

    mpfr_prec_t prec() const { return prec_; }

    /// Raw endpoint access for the trig-enclosure helpers.
    mpfr_ptr raw_lo() { return lo_; }
    mpfr_ptr raw_hi() { return hi_; }

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

/// Certified enclosure of cos(2*pi*num/den) resp. sin(2*pi*num/den).
Interval cos_of_angle(long num, long den, mpfr_prec_t prec);
Interval sin_of_angle(long num, long den, mpfr_prec_t prec);

/// The circulant coefficients a_0..a_{n-1}:
/// a_k = (2 - 2cos(2pi/n))/n + (2cos(2pi/n) if k = 0; -1 if k = +-1; 0 else).
/// Exact rational variant (cos(2pi/n) rational only for n in {4, 6}).
struct CirculantForm {
    int n = 0;
    std::vector<Rat> a;
};

CirculantForm circulant_form_exact(int n);

/// B~(psi, psi') = sum_{i,j} a_{i-j} psi(p_i) psi'(p_j), indices mod n.
Rat circ_pair(const CirculantForm& form, const std::vector<Rat>& psi,
              const std::vector<Rat>& psi2);

/// Checks that the form descends to the quotient: sum a_k, sum a_k cos,
/// sum a_k sin all vanish (exactly for n in {4,6}; certified enclosures of
/// zero otherwise).
bool circulant_descends(int n, mpfr_prec_t prec = 192);

struct ObtuseReport {
    bool ok = false;
    std::string mode;  // "exact" or "interval"
    int n = 0;
    mpfr_prec_t precision = 0;
    /// Smallest certified lower bound over all noncrossing pairs (decimal).
    std::string min_slack;
    bool positive_definite = false;
    std::vector<std::string> violations;
};

/// Verifies B(psi_d, psi_d') > 0 for every unordered noncrossing pair of
/// diagonals of the regular n-gon (d = d' included), plus positive
/// definiteness of the Gram slice (a_{s-t})_{s,t in [4,n]} via elimination
/// pivots. Exact for n in {4, 6}, certified intervals otherwise.
ObtuseReport verify_obtuse(int n, mpfr_prec_t precision_bits = 192);

struct DotControlReport {
    bool found_nonpositive = false;
    std::string witness;  // the failing pair, if found
    std::string min_value;
};

/// The naive-inner-product control: project each psi_d onto X_Q (coordinate
/// inner product) and look for a noncrossing pair whose projected dot
/// product is certainly negative. Succeeds (finds one) for n >= 7.
DotControlReport naive_dot_control(int n, mpfr_prec_t precision_bits = 192);

}  // namespace assockg
