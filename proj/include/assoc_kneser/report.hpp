#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace assockg {

struct AcceptanceOptions {
    /// Wall-clock budget for the stretch items (chi at n = 9, alpha at n = 8).
    double stretch_timeout = 1800.0;
    bool run_stretch = true;
    int threads = 1;
    uint64_t seed = 0x5eed0001;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    nlohmann::json details;
};

/// Runs the full acceptance battery (one entry per criterion) and returns
/// the per-criterion outcomes in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// Reads ASSOC_KNESER_THREADS (default 1).
int default_thread_count();

}  // namespace assockg
