#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cras/analytic.hpp"
#include "cras/checks.hpp"
#include "cras/montecarlo.hpp"

using namespace cras;
namespace mc = cras::montecarlo;

namespace {

SystemParams ref_params(int n = 4) {
    SystemParams p = checks::reference_params();
    p.n_antennas = n;
    return p;
}

}  // namespace

TEST_CASE("trial streams are pure functions of (seed, trial)") {
    mc::TrialStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    const auto first = a.next_u64();
    CHECK(first == b.next_u64());
    CHECK(first != c.next_u64());
    CHECK(first != d.next_u64());

    // same trial, later draws differ from the first
    CHECK(a.next_u64() != first);
}

TEST_CASE("channel draws are reproducible and prefix-stable across N") {
    const auto p2 = ref_params(2);
    const auto p8 = ref_params(8);

    mc::TrialStream s1(1234, 0);
    const auto first = mc::draw_channels(p2, s1);
    mc::TrialStream s2(1234, 0);
    const auto again = mc::draw_channels(p2, s2);
    CHECK(first.h0_sq == again.h0_sq);
    CHECK(first.h_sq == again.h_sq);
    CHECK(first.g_sq == again.g_sq);

    mc::TrialStream s3(1234, 0);
    const auto wide = mc::draw_channels(p8, s3);
    CHECK(wide.h0_sq == first.h0_sq);
    for (int i = 0; i < 2; ++i) {
        CHECK(wide.h_sq[i] == first.h_sq[i]);
        CHECK(wide.g_sq[i] == first.g_sq[i]);
    }
}

TEST_CASE("draw moments match the exponential laws") {
    const auto p = ref_params(2);
    const std::uint64_t draws = 1000000;
    double sum_h = 0.0;
    std::uint64_t below = 0;
    const double probe = 1.0 / p.rate_ss;  // CDF there: 1 - e^{-1}
    for (std::uint64_t t = 0; t < draws; ++t) {
        mc::TrialStream stream(99, t);
        const auto ch = mc::draw_channels(p, stream);
        sum_h += ch.h_sq[0];
        if (ch.h_sq[0] <= probe) ++below;
    }
    const double mean = sum_h / static_cast<double>(draws);
    CHECK(std::abs(mean - 1.0 / p.rate_ss) <=
          4.0 / (p.rate_ss * std::sqrt(static_cast<double>(draws))));

    const double cdf = -std::expm1(-1.0);
    const double freq = static_cast<double>(below) / static_cast<double>(draws);
    const double sigma =
        std::sqrt(cdf * (1.0 - cdf) / static_cast<double>(draws));
    CHECK(std::abs(freq - cdf) <= 3.0 * sigma);
}

TEST_CASE("estimates are bit-identical across chunk counts and runs") {
    const auto p = ref_params();
    for (const auto scheme :
         {schemes::SchemeId::proposed, schemes::SchemeId::mds}) {
        mc::SimConfig sim{30000, 777, 1};
        const auto serial_outage = mc::estimate_outage(p, scheme, sim);
        const auto serial_capacity = mc::estimate_capacity(p, scheme, sim);
        const auto serial_af = mc::estimate_af(p, scheme, sim, 2);
        for (const int chunks : {2, 3, 7}) {
            sim.parallel_chunks = chunks;
            CHECK(mc::estimate_outage(p, scheme, sim).value ==
                  serial_outage.value);
            const auto cap = mc::estimate_capacity(p, scheme, sim);
            CHECK(cap.value == serial_capacity.value);
            CHECK(cap.std_error == serial_capacity.std_error);
            const auto af = mc::estimate_af(p, scheme, sim, 2);
            CHECK(af.value == serial_af.value);
            CHECK(af.std_error == serial_af.std_error);
        }
    }
}

TEST_CASE("selected trials always satisfy the interference constraint") {
    const auto p = ref_params();
    for (const auto scheme :
         {schemes::SchemeId::proposed, schemes::SchemeId::mmi,
          schemes::SchemeId::muc, schemes::SchemeId::mmslir,
          schemes::SchemeId::mds}) {
        for (std::uint64_t t = 0; t < 20000; ++t) {
            mc::TrialStream stream(31337, t);
            const auto ch = mc::draw_channels(p, stream);
            const auto outcome = schemes::select(scheme, p, ch);
            if (!outcome.is_halt()) {
                CHECK(p.st_power * ch.g_sq[outcome.antenna_index - 1] <=
                      p.interference_threshold);
            }
        }
    }
}

TEST_CASE("outage estimate at T = 0 is exactly one") {
    auto p = ref_params();
    p.interference_threshold = 0.0;
    const auto est =
        mc::estimate_outage(p, schemes::SchemeId::proposed, {5000, 1, 1});
    CHECK(est.value == 1.0);
    CHECK(est.std_error == 0.0);
}

TEST_CASE("halted samples make the AF estimate undefined") {
    auto p = ref_params();
    p.interference_threshold = 0.0;
    CHECK_THROWS_AS(
        mc::estimate_af(p, schemes::SchemeId::proposed, {2000, 1, 1}, 2),
        std::domain_error);
}

TEST_CASE("proposed equals MUC under a generous threshold") {
    auto p = ref_params();
    p.interference_threshold = 50.0;
    mc::SimConfig sim{200000, 4242, 2};
    const auto proposed =
        mc::estimate_capacity(p, schemes::SchemeId::proposed, sim);
    const auto muc = mc::estimate_capacity(p, schemes::SchemeId::muc, sim);
    // identical selections under common random numbers
    CHECK(proposed.value == muc.value);
}

TEST_CASE("AF approaches the unconstrained best-antenna value for large T") {
    auto p = ref_params();
    p.interference_threshold = 100.0;  // feasibility is near-certain
    // closed form at this threshold collapses to the best-antenna ratio
    const double best_antenna_af =
        analytic::sinr_moment(p, 1, 2) /
            (analytic::sinr_mean(p, 1) * analytic::sinr_mean(p, 1)) -
        1.0;
    CHECK_THAT(analytic::amount_of_fading(p, 2),
               Catch::Matchers::WithinRel(best_antenna_af, 1e-9));

    mc::SimConfig sim{400000, 888, 2};
    const auto af = mc::estimate_af(p, schemes::SchemeId::proposed, sim, 2);
    CHECK(std::abs(af.value - best_antenna_af) <= 3.0 * af.std_error);
}

TEST_CASE("power adaptation beats one antenna at small T, loses to eight") {
    auto p = ref_params(1);
    p.interference_threshold = 0.02;
    mc::SimConfig sim{200000, 515, 2};
    const double pa =
        mc::estimate_outage(p, schemes::SchemeId::single_antenna_pa, sim).value;
    const double one_antenna =
        mc::estimate_outage(p, schemes::SchemeId::proposed, sim).value;
    p.n_antennas = 8;
    const double eight_antennas =
        mc::estimate_outage(p, schemes::SchemeId::proposed, sim).value;
    CHECK(pa < one_antenna);
    CHECK(pa > eight_antennas);

    // the analytic forms order the same way
    p.n_antennas = 1;
    const double pa_exact = analytic::outage_probability_single_antenna_pa(p);
    CHECK(pa_exact < analytic::outage_probability(p));
    p.n_antennas = 8;
    CHECK(pa_exact > analytic::outage_probability(p));
}

TEST_CASE("outage and capacity estimates track the closed forms (spot)") {
    const auto p = ref_params();
    mc::SimConfig sim{200000, 2025, 2};
    const auto outage =
        mc::estimate_outage(p, schemes::SchemeId::proposed, sim);
    CHECK(std::abs(outage.value - analytic::outage_probability(p)) <=
          3.0 * outage.std_error);

    const auto capacity =
        mc::estimate_capacity(p, schemes::SchemeId::proposed, sim);
    CHECK(std::abs(capacity.value - analytic::ergodic_capacity(p)) <=
          3.0 * capacity.std_error);
}

TEST_CASE("rank histogram tracks the selection probabilities") {
    const auto p = ref_params();
    mc::SimConfig sim{300000, 11, 2};
    const auto hist = mc::rank_histogram(p, sim);
    for (int k = 1; k <= p.n_antennas; ++k) {
        CHECK(std::abs(hist.rank_freq[k - 1] - analytic::selection_prob(p, k)) <=
              3.0 * std::max(hist.rank_stderr[k - 1], 1e-12));
    }
    CHECK(std::abs(hist.halt_freq - analytic::halt_prob(p)) <=
          3.0 * std::max(hist.halt_stderr, 1e-12));

    auto degenerate = p;
    degenerate.interference_threshold = 0.0;
    const auto all_halt = mc::rank_histogram(degenerate, {2000, 1, 1});
    CHECK(all_halt.halt_freq == 1.0);

    degenerate.interference_threshold = 1e9;
    const auto all_best = mc::rank_histogram(degenerate, {2000, 1, 1});
    CHECK(all_best.rank_freq[0] == 1.0);
}

TEST_CASE("conditional rank means track the closed form") {
    const auto p = ref_params();
    mc::SimConfig sim{400000, 3111, 2};
    const auto stats = mc::conditional_rank_sinr(p, sim);
    for (int k = 1; k <= p.n_antennas; ++k) {
        if (stats.count[k - 1] < 1000) continue;
        CHECK(std::abs(stats.mean[k - 1] - analytic::sinr_mean(p, k)) <=
              3.0 * stats.std_error[k - 1]);
    }
}

TEST_CASE("capacity estimate is monotone in N under common random numbers") {
    mc::SimConfig sim{150000, 60606, 2};
    double previous = -1.0;
    for (const int n : {1, 2, 4, 8}) {
        const auto p = ref_params(n);
        const double estimate =
            mc::estimate_capacity(p, schemes::SchemeId::proposed, sim).value;
        CHECK(estimate >= previous);
        previous = estimate;
    }
}

TEST_CASE("scheme seeds split only when CRN is off") {
    const std::uint64_t master = 97;
    CHECK(mc::scheme_seed(master, schemes::SchemeId::mmi, true) == master);
    CHECK(mc::scheme_seed(master, schemes::SchemeId::muc, true) == master);
    CHECK(mc::scheme_seed(master, schemes::SchemeId::mmi, false) !=
          mc::scheme_seed(master, schemes::SchemeId::muc, false));
}

TEST_CASE("simulation config validation") {
    CHECK_THROWS_AS(mc::validate(mc::SimConfig{0, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mc::validate(mc::SimConfig{10, 1, 0}),
                    std::invalid_argument);
}
