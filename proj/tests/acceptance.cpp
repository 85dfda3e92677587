// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cras/checks.hpp"

namespace {

using Results = std::vector<cras::checks::CheckResult>;

bool all_pass(const Results& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace

int main() {
    using cras::checks::SuiteOptions;
    SuiteOptions options;
    options.trials = 1000000;
    options.parallel_chunks = 2;

    int failures = 0;
    auto run = [&failures](int number, const char* description,
                           const std::function<Results()>& produce) {
        const auto start = std::chrono::steady_clock::now();
        const Results results = produce();
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const bool pass = all_pass(results);
        std::printf("criterion %2d: %s  [%s] (%.1fs)\n", number,
                    pass ? "PASS" : "FAIL", description, seconds);
        for (const auto& r : results) {
            std::printf("    %s %s: measured %.6g, limit %.6g\n",
                        r.pass ? "ok  " : "FAIL", r.name.c_str(), r.measured,
                        r.threshold);
        }
        std::fflush(stdout);
        if (!pass) ++failures;
    };

    run(1, "probability closure over 1000 random parameter sets", [&] {
        return Results{cras::checks::probability_closure(options)};
    });

    run(2, "dual PDF formulas agree to 1e-9 (N = 1..8, all ranks)", [&] {
        return Results{cras::checks::dual_pdf_agreement(options)};
    });

    run(3, "PDF normalization and CDF consistency at reference configs", [&] {
        return Results{cras::checks::pdf_normalization(options),
                       cras::checks::cdf_pdf_consistency(options)};
    });

    run(4, "moment identity: n = 1 formula equals the mean formula", [&] {
        return Results{cras::checks::moment_identity(options)};
    });

    run(5, "appendix integral identities vs quadrature", [&] {
        return Results{cras::checks::hyp2f1_integral_identity(options),
                       cras::checks::hyp3f2_integral_identity(options),
                       cras::checks::capacity_integral_identity(options)};
    });

    run(6, "Monte-Carlo within 3 sigma of closed forms (outage/AF/capacity)",
        [&] {
            return Results{cras::checks::mc_outage_agreement(options),
                           cras::checks::mc_af_agreement(options),
                           cras::checks::mc_capacity_agreement(options)};
        });

    run(7, "qualitative claims: dominance, endpoint matches, N trends", [&] {
        Results results = cras::checks::scheme_comparison(options);
        results.push_back(cras::checks::capacity_monotone_in_n(options));
        results.push_back(cras::checks::outage_monotone_in_n(options));
        return results;
    });

    run(8, "capacity continuity across the singular manifold", [&] {
        return Results{cras::checks::capacity_singularity_continuity(options)};
    });

    run(9, "proposed selection equals brute force on 1e5 realizations", [&] {
        return Results{cras::checks::proposed_bruteforce_equivalence(options)};
    });

    run(10, "sweep CSV byte-identical across runs and chunkings", [&] {
        return Results{cras::checks::csv_reproducibility(options)};
    });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion/criteria FAILED\n", failures);
    }
    return failures;
}
