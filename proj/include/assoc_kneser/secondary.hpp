#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc_kneser/realization.hpp"
#include "assoc_kneser/triangulation.hpp"

namespace assockg {

/// Coefficient vector (c_p) indexed by polygon vertex; the ambient space of
/// the secondary polytope. Members of X_Q satisfy sum c_p = 0 and
/// sum c_p * p = 0 exactly.
using CoeffVec = std::vector<Rat>;

/// A representative of a class in X_Q^* = (functions V(Q) -> Q) / affine.
struct Covector {
    std::vector<Rat> psi;
};

/// True iff the three X_Q constraints hold exactly.
bool in_XQ(const PolygonRealization& q, const CoeffVec& c);

/// True iff the values are those of an affine function on V(Q).
bool is_affine_values(const PolygonRealization& q, const std::vector<Rat>& vals);

/// The pairing <[psi], x> = sum psi(p) x_p. Well-defined on X_Q; on raw area
/// vectors it shifts by a T-independent constant, so argmax comparisons are
/// still meaningful.
Rat pairing(const Covector& w, const CoeffVec& x);

/// Area of the polygon (shoelace, exact).
Rat polygon_area(const PolygonRealization& q);

/// Integral of an affine function over the polygon.
Rat integral_affine(const PolygonRealization& q, const Affine2& l);

/// v_T: per-vertex sum of the areas of the incident triangles of T.
CoeffVec area_vector(const PolygonRealization& q, const Triangulation& t);

/// Outward normal of the facet of the diagonal d, represented as
/// psi = min(l, 0) where l is affine, vanishes on d's endpoints, is negative
/// at vertex d.i + 1, and is scaled so min psi = -1. (Both sign choices of l
/// give the same class modulo affine functions.)
Covector facet_normal(const PolygonRealization& q, const Diagonal& d);

/// The Lemma-2.6-style vectors: for each diagonal d the sum, over all
/// diagonals crossing d, of the four-term crossing combinations; positive
/// exactly at d's endpoints, nonpositive elsewhere. Indexed canonically.
std::vector<CoeffVec> vec_vectors(const PolygonRealization& q);

/// Single crossing combination for chords d and e meeting at r:
/// (|r-d.j| d.i + |r-d.i| d.j)/|d| - (|r-e.j| e.i + |r-e.i| e.j)/|e|, with
/// the ratios computed exactly along each segment.
CoeffVec crossing_combination(const PolygonRealization& q, const Diagonal& d,
                              const Diagonal& e);

/// Precomputed realization data: all triangulations, their area vectors and
/// every facet normal. Everything downstream (GKZ, Farkas, hemispheres)
/// works off this.
struct SecondaryFan {
    PolygonRealization q;
    std::vector<Triangulation> tris;
    std::vector<CoeffVec> verts;     // area vector per triangulation
    std::vector<Covector> normals;   // per canonical diagonal index

    int n() const { return q.n; }
    /// Index of the pairing-maximizing triangulation; ties resolve to the
    /// lexicographically least triangulation.
    int argmax(const Covector& w) const;
};

SecondaryFan build_secondary_fan(const PolygonRealization& q);

struct GkzReport {
    bool ok = true;
    std::string detail;  // first failure, if any
};

/// Checks vertex-facet incidence of the realization: for every diagonal d,
/// the maximizers of <psi_d, v_T> are exactly the triangulations containing
/// d (with a common maximum value), and every v_T is the unique maximizer of
/// the sum of its own facet normals.
GkzReport verify_gkz_incidence(const SecondaryFan& fan);

struct FarkasResult {
    int tri_index = -1;
    std::vector<Rat> coeffs;  // one per diagonal of the chosen triangulation
    std::vector<Diagonal> diagonals;
    Affine2 affine_part;  // w minus the conic part, exactly
};

/// Writes w as a combination of the facet normals at the maximizing vertex
/// plus an affine function (exact linear solve); Farkas guarantees the
/// coefficients are nonnegative, which the caller should assert.
FarkasResult farkas_decompose(const SecondaryFan& fan, const Covector& w);

struct HemisphereReport {
    bool ok = true;
    int samples_run = 0;
    std::string detail;
};

/// Samples pseudorandom covectors w and checks the open-hemisphere mechanism:
/// the maximizing triangulation T has <w, x_d> > 0 for all d in T. `vectors`
/// is indexed by canonical diagonal index.
HemisphereReport hemisphere_check(const SecondaryFan& fan,
                                  const std::vector<CoeffVec>& vectors,
                                  int samples, uint64_t seed);

}  // namespace assockg
