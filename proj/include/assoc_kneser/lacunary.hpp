#pragma once

#include <string>
#include <vector>

#include "assoc_kneser/secondary.hpp"
#include "assoc_kneser/stability.hpp"

namespace assockg {

/// A certified instance of the swapping-compatible vector assignment: a
/// polygon on the parabola (vertex i at (M^i, M^{2i}), vertex n at (1, 1))
/// and vectors x_d with <psi_d, x_{d'}> > 0, exactly, whenever d ⊏ d'.
struct LacunaryResult {
    bool ok = false;
    int n = 0;
    Rat growth;   // the M that cleared every pair
    Rat epsilon;  // weight of the Lemma-2.6 correction term
    PolygonRealization q;
    std::vector<CoeffVec> vectors;  // per canonical diagonal index
    std::string detail;             // failing pair when !ok
    int attempts = 0;
};

/// Tries M = 2, 4, 16, 256, ... (squaring) until all ⊏-pair pairings are
/// strictly positive in exact arithmetic; epsilon is chosen as half the
/// ratio of the minimal crossing-pair slack to the largest correction
/// magnitude. Throws std::runtime_error if the schedule is exhausted.
LacunaryResult lacunary_construction(int n, int max_attempts = 8);

/// One schedule step with an explicit M; ok = false reports the first
/// violated pair instead of throwing.
LacunaryResult lacunary_attempt(int n, const Rat& growth);

struct DeltaCaseReport {
    bool ok = true;
    std::string detail;
    std::vector<std::string> checks;  // human-readable record of what passed
};

/// The hexagon special case: builds the three long-diagonal vectors
/// x_{i,i+3} = 5p_i - 3p_{i+1} - p_{i+2} + 3p_{i+3} - p_{i+4} - 3p_{i+5},
/// checks X_Q membership, their decomposition into weighted crossing
/// combinations, the pairing identity <w, x_{1,4}> = 3l2 + 3l6 - 3l4 against
/// the triangle-type normal cone, and positivity of the fan {{1,3},{1,4},
/// {1,5}} pairings whenever l4 is the minimum.
DeltaCaseReport delta_case_vectors();

}  // namespace assockg
