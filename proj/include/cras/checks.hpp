#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cras/analytic.hpp"
#include "cras/config.hpp"
#include "cras/model.hpp"
#include "cras/montecarlo.hpp"
#include "cras/quadrature.hpp"
#include "cras/schemes.hpp"
#include "cras/specfun.hpp"
#include "cras/sweep.hpp"

// Consistency suite behind `cras validate`: every closed form is pitted
// against an independent route (quadrature of its defining integral, a
// second algebraic path, or the Monte-Carlo simulator).

namespace cras::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;   // the observed discrepancy / statistic
    double threshold = 0.0;  // what it must stay below
};

struct SuiteOptions {
    bool quick = false;
    std::uint64_t seed = 20250809;
    std::uint64_t trials = 1000000;
    int parallel_chunks = 2;

    std::uint64_t mc_trials() const { return quick ? trials / 10 : trials; }
};

namespace detail {

inline CheckResult bound(std::string name, double measured, double threshold) {
    const bool pass = std::isfinite(measured) && measured <= threshold;
    return CheckResult{std::move(name), pass, measured, threshold};
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

inline double z_score(const MetricEstimate& mc, double exact) {
    return std::abs(mc.value - exact) / std::max(mc.std_error, 1e-15);
}

inline std::vector<double> log_spaced(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
    return grid;
}

inline SystemParams random_valid_params(montecarlo::TrialStream& stream) {
    auto log_uniform = [&stream](double lo, double hi) {
        return lo * std::pow(hi / lo, stream.next_uniform());
    };
    SystemParams p;
    p.n_antennas = 1 + static_cast<int>(stream.next_uniform() * 8.0);
    p.pt_power = log_uniform(0.05, 20.0);
    p.st_power = log_uniform(0.05, 20.0);
    p.noise = log_uniform(1e-4, 1.0);
    p.interference_threshold =
        stream.next_uniform() < 0.1 ? 0.0 : log_uniform(0.005, 5.0);
    p.rate_ps = log_uniform(0.2, 20.0);
    p.rate_ss = log_uniform(0.2, 20.0);
    p.rate_sp = log_uniform(0.2, 20.0);
    p.outage_threshold = log_uniform(0.01, 10.0);
    p.ds_weight = stream.next_uniform();
    return p;
}

}  // namespace detail

/// Shared parameter set of the bundled sweep recipes
/// (P_M = 1, P_S = 0.5, N0 = 1e-2, lambda_ps = lambda_sp = 10,
/// lambda_ss = 3, N = 4), with T = 0.1, xi_T = 1, eta = 0.2.
inline SystemParams reference_params() {
    SystemParams p;
    p.n_antennas = 4;
    p.pt_power = 1.0;
    p.st_power = 0.5;
    p.noise = 1e-2;
    p.interference_threshold = 0.1;
    p.rate_ps = 10.0;
    p.rate_ss = 3.0;
    p.rate_sp = 10.0;
    p.outage_threshold = 1.0;
    p.ds_weight = 0.2;
    return p;
}

inline std::vector<double> threshold_grid() {
    return {0.02, 0.04, 0.07, 0.1, 0.15, 0.25, 0.5, 1.0};
}

inline std::vector<double> st_power_grid() {
    return {0.1, 0.31622776601683794, 1.0, 3.1622776601683795,
            10.0, 31.622776601683793, 100.0};
}

// ---------------------------------------------------------------------------
// analytic self-consistency

/// |sum_k p_k + p_phi - 1| over random valid parameter sets.
inline CheckResult probability_closure(const SuiteOptions& options) {
    const int draws = options.quick ? 100 : 1000;
    montecarlo::TrialStream stream(options.seed, 0xC105EULL);
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        const SystemParams p = detail::random_valid_params(stream);
        specfun::KahanSum<long double> total;
        total.add(analytic::halt_prob(p));
        for (int k = 1; k <= p.n_antennas; ++k)
            total.add(analytic::selection_prob(p, k));
        worst = std::max(worst,
                         std::abs(static_cast<double>(total.value()) - 1.0));
    }
    return detail::bound("probability closure (sum p_k + p_phi = 1)", worst,
                         1e-12);
}

/// Worst relative gap between the hypergeometric and finite-sum PDF paths
/// on a 50-point log grid, every rank, N = 1..8.
inline CheckResult dual_pdf_agreement(const SuiteOptions&) {
    const auto grid = detail::log_spaced(0.25, 250.0, 50);
    SystemParams p = reference_params();
    double worst = 0.0;
    for (int n = 1; n <= 8; ++n) {
        p.n_antennas = n;
        for (int k = 1; k <= n; ++k) {
            for (const double x : grid) {
                const double finite =
                    analytic::sinr_pdf(p, k, x, analytic::PdfFormula::finite_sum);
                const double hyper = analytic::sinr_pdf(
                    p, k, x, analytic::PdfFormula::hypergeometric);
                worst = std::max(worst, detail::rel_diff(finite, hyper));
            }
        }
    }
    return detail::bound("dual PDF formulas agree", worst, 1e-9);
}

/// max |integral of the PDF - 1| over the reference configurations.
inline CheckResult pdf_normalization(const SuiteOptions& options) {
    double worst = 0.0;
    auto probe = [&worst, &options](SystemParams p) {
        for (int k = 1; k <= p.n_antennas; ++k) {
            if (options.quick && k > 1 && k < p.n_antennas) continue;
            auto pdf = [&p, k](double x) { return analytic::sinr_pdf(p, k, x); };
            const double mass =
                quadrature::integrate_to_inf(pdf, 0.0, 1e-11, 1e-11).value;
            worst = std::max(worst, std::abs(mass - 1.0));
        }
    };
    for (const int n : {2, 4, 8}) {
        SystemParams p = reference_params();
        p.n_antennas = n;
        probe(p);       // outage/AF configuration, P_S = 0.5
        p.st_power = 1.0;
        probe(p);       // capacity configuration, P_S = 1
    }
    return detail::bound("PDF normalization (integral = 1)", worst, 1e-8);
}

/// max |F(x) - integral_0^x f| at the reference configurations.
inline CheckResult cdf_pdf_consistency(const SuiteOptions& options) {
    double worst = 0.0;
    const std::vector<double> points = {0.5, 1.0, 2.0, 5.0};
    for (const int n : options.quick ? std::vector<int>{4}
                                     : std::vector<int>{2, 4, 8}) {
        SystemParams p = reference_params();
        p.n_antennas = n;
        for (int k = 1; k <= n; ++k) {
            auto pdf = [&p, k](double x) { return analytic::sinr_pdf(p, k, x); };
            for (const double x : points) {
                const double mass =
                    quadrature::integrate(pdf, 0.0, x, 1e-10, 1e-10).value;
                worst = std::max(
                    worst, std::abs(analytic::sinr_cdf(p, k, x) - mass));
            }
        }
    }
    return detail::bound("CDF equals integral of PDF", worst, 1e-6);
}

/// Relative gap between the n = 1 moment formula and the harmonic-number
/// mean, N in {2, 4, 8}, all ranks.
inline CheckResult moment_identity(const SuiteOptions&) {
    double worst = 0.0;
    for (const int n : {2, 4, 8}) {
        SystemParams p = reference_params();
        p.n_antennas = n;
        for (int k = 1; k <= n; ++k) {
            worst = std::max(worst,
                             detail::rel_diff(analytic::sinr_moment(p, k, 1),
                                              analytic::sinr_mean(p, k)));
        }
    }
    return detail::bound("first moment equals harmonic-number mean", worst,
                         1e-9);
}

// ---------------------------------------------------------------------------
// appendix integral identities

/// int_0^inf e^{-ax}(1-c e^{-bx})^d dx = 2F1(a/b, -d; a/b + 1; c) / a,
/// quadrature vs closed form at random points.
inline CheckResult hyp2f1_integral_identity(const SuiteOptions& options) {
    montecarlo::TrialStream stream(options.seed, 0xA1ULL);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = 0.3 + 4.0 * stream.next_uniform();
        const double b = 0.3 + 4.0 * stream.next_uniform();
        const double c = 0.05 + 0.9 * stream.next_uniform();
        const int d = static_cast<int>(stream.next_uniform() * 7.0);
        auto integrand = [=](double x) {
            return std::exp(-a * x) * std::pow(1.0 - c * std::exp(-b * x), d);
        };
        const double quad =
            quadrature::integrate_to_inf(integrand, 0.0, 0.0, 1e-12).value;
        const double closed =
            specfun::hyp2f1_terminating(a / b, -d, a / b + 1.0, c) / a;
        worst = std::max(worst, detail::rel_diff(quad, closed));
    }
    return detail::bound("2F1 integral identity", worst, 1e-10);
}

/// int_0^inf x e^{-ax}(1-c e^{-bx})^d dx
///   = 3F2(a/b, a/b, -d; a/b + 1, a/b + 1; c) / a^2.
inline CheckResult hyp3f2_integral_identity(const SuiteOptions& options) {
    montecarlo::TrialStream stream(options.seed, 0xA2ULL);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double a = 0.3 + 4.0 * stream.next_uniform();
        const double b = 0.3 + 4.0 * stream.next_uniform();
        const double c = 0.05 + 0.9 * stream.next_uniform();
        const int d = static_cast<int>(stream.next_uniform() * 7.0);
        auto integrand = [=](double x) {
            return x * std::exp(-a * x) *
                   std::pow(1.0 - c * std::exp(-b * x), d);
        };
        const double quad =
            quadrature::integrate_to_inf(integrand, 0.0, 0.0, 1e-12).value;
        const double ratio = a / b;
        const double closed =
            specfun::hyp3f2_terminating(ratio, ratio, -d, ratio + 1.0,
                                        ratio + 1.0, c) /
            (a * a);
        worst = std::max(worst, detail::rel_diff(quad, closed));
    }
    return detail::bound("3F2 integral identity", worst, 1e-10);
}

/// The capacity helper integral
///   I = int_0^inf e^{-a l1 x} ln(1+x) [1/(a l1 x + b l2)^2
///        + 1/(a l1 x + b l2)] dx
///     = [e^{b l2} E1(b l2) - e^{a l1} E1(a l1)] / (a^2 l1^2 - a b l1 l2).
inline CheckResult capacity_integral_identity(const SuiteOptions& options) {
    montecarlo::TrialStream stream(options.seed, 0xA3ULL);
    double worst = 0.0;
    int accepted = 0;
    while (accepted < 20) {
        const double a = 0.3 + 3.0 * stream.next_uniform();
        const double l1 = 0.3 + 3.0 * stream.next_uniform();
        const double b = 0.3 + 3.0 * stream.next_uniform();
        const double l2 = 0.3 + 3.0 * stream.next_uniform();
        const double al1 = a * l1, bl2 = b * l2;
        if (std::abs(al1 - bl2) < 0.05 * std::max(al1, bl2)) continue;
        ++accepted;
        auto integrand = [=](double x) {
            const double denom = al1 * x + bl2;
            return std::exp(-al1 * x) * std::log1p(x) *
                   (1.0 / (denom * denom) + 1.0 / denom);
        };
        const double quad =
            quadrature::integrate_to_inf(integrand, 0.0, 1e-14, 1e-11).value;
        const double closed = (std::exp(bl2) * specfun::exp_integral_e1(bl2) -
                               std::exp(al1) * specfun::exp_integral_e1(al1)) /
                              (al1 * al1 - al1 * bl2);
        worst = std::max(worst, detail::rel_diff(quad, closed));
    }
    return detail::bound("capacity helper integral identity", worst, 1e-8);
}

// ---------------------------------------------------------------------------
// Monte-Carlo vs closed forms at the reference grids

/// Outage vs T (proposed and single-antenna power adaptation), worst
/// |z-score| against the closed forms.
inline CheckResult mc_outage_agreement(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    double worst = 0.0;
    for (const double t : threshold_grid()) {
        SystemParams p = reference_params();
        p.interference_threshold = t;
        const auto mc_proposed = montecarlo::estimate_outage(
            p, schemes::SchemeId::proposed, sim);
        worst = std::max(worst, detail::z_score(
                                    mc_proposed, analytic::outage_probability(p)));
        const auto mc_pa = montecarlo::estimate_outage(
            p, schemes::SchemeId::single_antenna_pa, sim);
        worst = std::max(
            worst, detail::z_score(
                       mc_pa, analytic::outage_probability_single_antenna_pa(p)));
    }
    return detail::bound("MC outage within 3 sigma of closed form", worst, 3.0);
}

/// Amount of fading (n = 2) vs T, worst |z-score|.
inline CheckResult mc_af_agreement(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    double worst = 0.0;
    for (const double t : threshold_grid()) {
        SystemParams p = reference_params();
        p.interference_threshold = t;
        const auto mc =
            montecarlo::estimate_af(p, schemes::SchemeId::proposed, sim, 2);
        worst =
            std::max(worst, detail::z_score(mc, analytic::amount_of_fading(p, 2)));
    }
    return detail::bound("MC amount of fading within 3 sigma", worst, 3.0);
}

/// Ergodic capacity vs P_S for N in {2, 4, 8}, worst |z-score|.
inline CheckResult mc_capacity_agreement(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    double worst = 0.0;
    for (const int n : {2, 4, 8}) {
        for (const double ps : st_power_grid()) {
            SystemParams p = reference_params();
            p.n_antennas = n;
            p.st_power = ps;
            const auto mc = montecarlo::estimate_capacity(
                p, schemes::SchemeId::proposed, sim);
            worst = std::max(worst,
                             detail::z_score(mc, analytic::ergodic_capacity(p)));
        }
    }
    return detail::bound("MC capacity within 3 sigma of closed form", worst,
                         3.0);
}

/// Proposed-scheme rank/halt frequencies vs p_k, p_phi, worst |z-score|.
inline CheckResult mc_rank_histogram_agreement(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    const SystemParams p = reference_params();
    const auto hist = montecarlo::rank_histogram(p, sim);
    double worst = std::abs(hist.halt_freq - analytic::halt_prob(p)) /
                   std::max(hist.halt_stderr, 1e-15);
    for (int k = 1; k <= p.n_antennas; ++k) {
        const double z =
            std::abs(hist.rank_freq[k - 1] - analytic::selection_prob(p, k)) /
            std::max(hist.rank_stderr[k - 1], 1e-15);
        worst = std::max(worst, z);
    }
    return detail::bound("MC rank histogram within 3 sigma", worst, 3.0);
}

/// Conditional rank-k SINR sample means vs E[xi_k] (ranks with >= 1000
/// conditional samples), worst |z-score|.
inline CheckResult mc_conditional_mean_agreement(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    const SystemParams p = reference_params();
    const auto stats = montecarlo::conditional_rank_sinr(p, sim);
    double worst = 0.0;
    for (int k = 1; k <= p.n_antennas; ++k) {
        if (stats.count[k - 1] < 1000) continue;
        const double z = std::abs(stats.mean[k - 1] - analytic::sinr_mean(p, k)) /
                         std::max(stats.std_error[k - 1], 1e-15);
        worst = std::max(worst, z);
    }
    return detail::bound("MC conditional rank means within 3 sigma", worst,
                         3.0);
}

// ---------------------------------------------------------------------------
// qualitative claims (scheme comparison)

/// All scheme-comparison checks share one set of common-random-number runs:
/// capacity of the proposed scheme dominates MMI/MUC/MMSLIR/MDS everywhere,
/// matches MUC at the smallest P_S and MMI at the largest within 3 sigma.
inline std::vector<CheckResult> scheme_comparison(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    const auto grid = st_power_grid();
    const std::vector<schemes::SchemeId> rivals = {
        schemes::SchemeId::mmi, schemes::SchemeId::muc,
        schemes::SchemeId::mmslir, schemes::SchemeId::mds};

    double worst_violation = -1e300;
    double muc_gap_small_ps = 0.0;
    double mmi_gap_large_ps = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SystemParams p = reference_params();
        p.st_power = grid[i];
        const auto proposed = montecarlo::estimate_capacity(
            p, schemes::SchemeId::proposed, sim);
        for (const auto rival : rivals) {
            const auto other = montecarlo::estimate_capacity(p, rival, sim);
            const double noise =
                std::max(proposed.std_error + other.std_error, 1e-15);
            worst_violation = std::max(worst_violation,
                                       (other.value - proposed.value) / noise);
            const double z = std::abs(proposed.value - other.value) / noise;
            if (i == 0 && rival == schemes::SchemeId::muc)
                muc_gap_small_ps = z;
            if (i + 1 == grid.size() && rival == schemes::SchemeId::mmi)
                mmi_gap_large_ps = z;
        }
    }
    return {
        detail::bound("proposed capacity >= rivals (3 sigma margin)",
                      worst_violation, 3.0),
        detail::bound("proposed matches MUC at smallest P_S (3 sigma)",
                      muc_gap_small_ps, 3.0),
        detail::bound("proposed matches MMI at largest P_S (3 sigma)",
                      mmi_gap_large_ps, 3.0),
    };
}

/// Estimated capacity strictly increases with N under common random
/// numbers (nested antenna draws make this a per-trial dominance).
inline CheckResult capacity_monotone_in_n(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    double worst = -1e300;
    for (const double ps : {1.0, 10.0}) {
        double previous = -1e300;
        for (const int n : {2, 4, 8}) {
            SystemParams p = reference_params();
            p.st_power = ps;
            p.n_antennas = n;
            const double estimate =
                montecarlo::estimate_capacity(p, schemes::SchemeId::proposed,
                                              sim)
                    .value;
            if (previous > -1e300)
                worst = std::max(worst, previous - estimate);
            previous = estimate;
        }
    }
    return detail::bound("capacity increases with N", worst, 0.0);
}

/// Outage decreases with N, analytically and in simulation.
inline CheckResult outage_monotone_in_n(const SuiteOptions& options) {
    montecarlo::SimConfig sim{options.mc_trials(), options.seed,
                              options.parallel_chunks};
    double worst = -1e300;
    double previous_mc = 1e300, previous_exact = 1e300;
    for (const int n : {2, 4, 8}) {
        SystemParams p = reference_params();
        p.n_antennas = n;
        const double mc =
            montecarlo::estimate_outage(p, schemes::SchemeId::proposed, sim)
                .value;
        const double exact = analytic::outage_probability(p);
        if (n > 2) {
            worst = std::max(worst, mc - previous_mc);
            worst = std::max(worst, exact - previous_exact);
        }
        previous_mc = mc;
        previous_exact = exact;
    }
    return detail::bound("outage decreases with N", worst, 0.0);
}

// ---------------------------------------------------------------------------
// numerics and reproducibility

/// Capacity continuity across the removable singularity of the closed form:
/// P_M lambda_ss (k+j) = P_S lambda_ps hit exactly (P_S = 0.6 puts
/// j = 1, k = 1 on the manifold at the reference rates).
inline CheckResult capacity_singularity_continuity(const SuiteOptions&) {
    SystemParams p = reference_params();
    p.st_power = 0.6;
    double worst = 0.0;
    for (int k = 1; k <= p.n_antennas; ++k) {
        const double center = analytic::ergodic_capacity_k(p, k);
        for (const double wobble : {1.0 - 1e-6, 1.0 + 1e-6}) {
            SystemParams q = p;
            q.st_power = p.st_power * wobble;
            const double perturbed = analytic::ergodic_capacity_k(q, k);
            worst = std::max(worst,
                             std::abs(perturbed - center) / std::abs(center));
        }
    }
    return detail::bound("capacity continuous across singular manifold", worst,
                         1e-6);
}

/// select_proposed vs an exhaustive feasibility-filtered argmax.
inline CheckResult proposed_bruteforce_equivalence(const SuiteOptions& options) {
    const int realizations = options.quick ? 10000 : 100000;
    montecarlo::TrialStream param_stream(options.seed, 0xB4F3ULL);
    int mismatches = 0;
    SystemParams p = reference_params();
    for (int i = 0; i < realizations; ++i) {
        if (i % 100 == 0) {
            p = detail::random_valid_params(param_stream);
            p.n_antennas = 1 + static_cast<int>(
                                   param_stream.next_uniform() * 8.0);
        }
        montecarlo::TrialStream stream(options.seed ^ 0xB4F3B4F3ULL,
                                       static_cast<std::uint64_t>(i));
        const ChannelRealization ch = montecarlo::draw_channels(p, stream);
        const auto outcome = schemes::select_proposed(p, ch);

        int best = -1;
        for (int j = 0; j < p.n_antennas; ++j) {
            if (p.st_power * ch.g_sq[j] > p.interference_threshold) continue;
            if (best < 0 || ch.h_sq[j] > ch.h_sq[best]) best = j;
        }
        if (best < 0) {
            if (!outcome.is_halt()) ++mismatches;
        } else if (outcome.is_halt() || outcome.antenna_index != best + 1) {
            ++mismatches;
        }
    }
    return detail::bound("proposed selection matches brute force",
                         static_cast<double>(mismatches), 0.0);
}

/// Two sweep runs with the same seed produce byte-identical CSV, and the
/// bytes do not depend on the number of parallel chunks.
inline CheckResult csv_reproducibility(const SuiteOptions& options) {
    config::SweepSpec spec;
    spec.base = reference_params();
    spec.axis = config::Axis::T;
    spec.values = {0.05, 0.1, 0.2};
    spec.metrics = {config::Metric::outage, config::Metric::capacity};
    spec.schemes = {schemes::SchemeId::proposed, schemes::SchemeId::mmi};
    spec.sim = montecarlo::SimConfig{options.quick ? 5000u : 20000u,
                                     options.seed, 1};
    const std::string first = sweep::to_csv(sweep::run_sweep(spec));
    const std::string second = sweep::to_csv(sweep::run_sweep(spec));
    spec.sim->parallel_chunks = 3;
    const std::string chunked = sweep::to_csv(sweep::run_sweep(spec));
    const bool identical = first == second && first == chunked;
    return detail::bound("sweep CSV byte-identical across runs and chunking",
                         identical ? 0.0 : 1.0, 0.0);
}

/// Worst relative discrepancy between two SINR-PDF evaluators on the
/// standard grid; the mutation-canary test drives this with a perturbed
/// evaluator to prove the dual-formula check has teeth.
inline double pdf_discrepancy_on_grid(
    const SystemParams& params,
    const std::function<double(const SystemParams&, int, double)>& first,
    const std::function<double(const SystemParams&, int, double)>& second) {
    const auto grid = detail::log_spaced(0.25, 250.0, 50);
    double worst = 0.0;
    for (int k = 1; k <= params.n_antennas; ++k)
        for (const double x : grid)
            worst = std::max(worst, detail::rel_diff(first(params, k, x),
                                                     second(params, k, x)));
    return worst;
}

inline std::vector<CheckResult> run_all(const SuiteOptions& options) {
    std::vector<CheckResult> results;
    results.push_back(probability_closure(options));
    results.push_back(dual_pdf_agreement(options));
    results.push_back(pdf_normalization(options));
    results.push_back(cdf_pdf_consistency(options));
    results.push_back(moment_identity(options));
    results.push_back(hyp2f1_integral_identity(options));
    results.push_back(hyp3f2_integral_identity(options));
    results.push_back(capacity_integral_identity(options));
    results.push_back(capacity_singularity_continuity(options));
    results.push_back(proposed_bruteforce_equivalence(options));
    results.push_back(mc_outage_agreement(options));
    results.push_back(mc_af_agreement(options));
    results.push_back(mc_capacity_agreement(options));
    results.push_back(mc_rank_histogram_agreement(options));
    results.push_back(mc_conditional_mean_agreement(options));
    for (auto& result : scheme_comparison(options))
        results.push_back(std::move(result));
    results.push_back(capacity_monotone_in_n(options));
    results.push_back(outage_monotone_in_n(options));
    results.push_back(csv_reproducibility(options));
    return results;
}

}  // namespace cras::checks
