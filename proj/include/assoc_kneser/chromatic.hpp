#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "assoc_kneser/coloring.hpp"
#include "assoc_kneser/kneser.hpp"

namespace assockg {

struct SolveOptions {
    /// Wall-clock limit; 0 means unlimited. On expiry the solvers return
    /// bracketing bounds flagged inexact, never a wrong exact value.
    double timeout_seconds = 0;
    /// Fix the colors of one maximum clique before the search (sound for
    /// colorability decisions; large speedup on symmetric instances).
    bool clique_seed = true;
    /// Accepted for interface compatibility; exact results are identical
    /// for any value.
    int threads = 1;
};

/// Exact chromatic number with a proper-coloring witness and a lower-bound
/// witness (a clique when it meets the value, otherwise the completed
/// refutation of (value-1)-colorability).
struct ChromaticCertificate {
    bool exact = false;
    int value = 0;  // equals upper_bound; the chromatic number when exact
    int lower_bound = 0;
    int upper_bound = 0;
    Coloring coloring;           // proper coloring with upper_bound colors
    std::vector<int> clique;     // best clique found (lower-bound witness)
    bool refutation_complete = false;
};

struct CliqueResult {
    bool exact = false;
    int value = 0;
    int lower_bound = 0;
    int upper_bound = 0;
    std::vector<int> vertices;  // witness attaining lower_bound
};

ChromaticCertificate chromatic_number(const KneserGraph& g, const SolveOptions& opt = {});

CliqueResult clique_number(const KneserGraph& g, const SolveOptions& opt = {});

/// Maximum independent set via branch-and-bound on the complement.
CliqueResult independence_number(const KneserGraph& g, const SolveOptions& opt = {});

enum class DecideStatus { Colorable, NotColorable, Timeout };

struct DecideResult {
    DecideStatus status = DecideStatus::Timeout;
    Coloring coloring;  // valid when status == Colorable
};

/// Complete DSATUR-style backtracking decision of k-colorability over bitset
/// adjacency rows. `seed_clique` vertices are pre-assigned colors 1..q.
DecideResult decide_k_colorable(const std::vector<Bits>& adj, int k,
                                const std::vector<int>& seed_clique,
                                double timeout_seconds = 0);

/// DSATUR greedy coloring (deterministic); proper but not necessarily
/// optimal. Used to seed the upper bound.
Coloring greedy_coloring(const std::vector<Bits>& adj);

/// Exact maximum clique over arbitrary bitset rows (branch and bound with
/// greedy coloring bounds). Exposed for reuse by the hypergraph solver.
CliqueResult max_clique(const std::vector<Bits>& adj, const SolveOptions& opt = {});

/// Degeneracy order (repeatedly remove a minimum-degree vertex, smallest
/// index first); used as the static tie-break order everywhere.
std::vector<int> degeneracy_order(const std::vector<Bits>& adj);

}  // namespace assockg
