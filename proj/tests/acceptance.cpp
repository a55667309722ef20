// Acceptance suite: runs every criterion end to end and prints one PASS/FAIL
// line each. Exit status is nonzero if any criterion fails.
//
// Environment knobs:
//   ASSOC_KNESER_THREADS          worker threads for batch solves
//   ASSOC_KNESER_STRETCH_TIMEOUT  seconds for the stretch items (default 60)
//   ASSOC_KNESER_SKIP_STRETCH=1   skip the stretch items entirely

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "assoc_kneser/report.hpp"

int main() {
    assockg::AcceptanceOptions opt;
    opt.threads = assockg::default_thread_count();
    opt.stretch_timeout = 60.0;
    if (const char* env = std::getenv("ASSOC_KNESER_STRETCH_TIMEOUT"))
        opt.stretch_timeout = std::atof(env);
    if (const char* env = std::getenv("ASSOC_KNESER_SKIP_STRETCH"))
        opt.run_stretch = std::string(env) != "1";

    auto results = assockg::run_acceptance(opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2)
                  << r.id << "  " << r.name << "  [" << std::fixed
                  << std::setprecision(2) << r.seconds << "s]\n";
        if (!r.pass) std::cout << "      details: " << r.details.dump() << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES present")
              << "\n";
    return all ? 0 : 1;
}
