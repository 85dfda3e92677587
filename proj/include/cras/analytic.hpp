#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cras/model.hpp"
#include "cras/quadrature.hpp"
#include "cras/specfun.hpp"

namespace cras::analytic {

namespace detail {

inline void check_rank(const SystemParams& params, int k) {
    if (k < 1 || k > params.n_antennas)
        throw std::invalid_argument("rank k must lie in [1, n_antennas]");
}

inline void check_moment_order(int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("moment order n must lie in [1, 8]");
}

}  // namespace detail

/// Probability that the k-th best ST antenna is the first feasible one:
/// p_k = e^{-(k-1) lambda_sp T / P_S} (1 - e^{-lambda_sp T / P_S}).
inline double selection_prob(const SystemParams& params, int k) {
    detail::check_rank(params, k);
    const double exponent =
        params.rate_sp * params.interference_threshold / params.st_power;
    return std::exp(-(k - 1) * exponent) * (-std::expm1(-exponent));
}

/// Probability that no antenna satisfies the interference constraint:
/// p_phi = e^{-N lambda_sp T / P_S}.
inline double halt_prob(const SystemParams& params) {
    const double exponent =
        params.rate_sp * params.interference_threshold / params.st_power;
    return std::exp(-params.n_antennas * exponent);
}

enum class PdfFormula { finite_sum, hypergeometric };

/// PDF of the SINR xi_k when the rank-k antenna transmits. The finite-sum
/// path is the binomial expansion; the hypergeometric path evaluates the
/// 3F2/2F1 form. Both are exact and exposed for cross-validation.
inline double sinr_pdf(const SystemParams& params, int k, double x,
                       PdfFormula formula = PdfFormula::finite_sum) {
    detail::check_rank(params, k);
    if (!(x >= 0.0)) throw std::invalid_argument("sinr_pdf: requires x >= 0");

    const int n = params.n_antennas;
    const double p_m = params.pt_power;
    const double p_s = params.st_power;
    const double n0 = params.noise;
    const double l_ss = params.rate_ss;
    const double l_ps = params.rate_ps;

    if (formula == PdfFormula::hypergeometric && x > 0.0) {
        const double ratio = l_ps * p_s / (l_ss * p_m * x);  // a/b in App. A
        const double a = k + ratio;
        const double arg = std::exp(-l_ss * n0 * x / p_s);
        const double f32 =
            specfun::hyp3f2_terminating(a, a, k - n, a + 1.0, a + 1.0, arg);
        const double f21 = specfun::hyp2f1_terminating(a, k - n, a + 1.0, arg);
        const double denom = k * l_ss * p_m * x + l_ps * p_s;
        return k * l_ss * l_ps * std::exp(-k * l_ss * n0 * x / p_s) *
               specfun::binomial(n, k) / (denom * denom) *
               (p_m * p_s * f32 + n0 * denom * f21);
    }

    specfun::KahanSum<long double> acc;
    for (int j = 0; j <= n - k; ++j) {
        const int m = k + j;
        const long double denom = p_s * l_ps + l_ss * m * p_m * x;
        const long double sign = (j % 2 == 0) ? 1.0L : -1.0L;
        acc.add(sign * specfun::binomial(n - k, j) *
                std::exp(-static_cast<long double>(n0 * x * l_ss * m / p_s)) *
                (n0 / denom + p_s * p_m / (denom * denom)));
    }
    return static_cast<double>(k * specfun::binomial(n, k) * l_ss * l_ps *
                               acc.value());
}

/// CDF of xi_k via the order-statistic CDF and the 2F1 closed form.
/// F(0) is 0 by continuity; the SINR is almost surely positive.
inline double sinr_cdf(const SystemParams& params, int k, double x) {
    detail::check_rank(params, k);
    if (!(x >= 0.0)) throw std::invalid_argument("sinr_cdf: requires x >= 0");
    if (x == 0.0) return 0.0;

    const int n = params.n_antennas;
    const double p_m = params.pt_power;
    const double p_s = params.st_power;
    const double n0 = params.noise;
    const double l_ss = params.rate_ss;
    const double l_ps = params.rate_ps;

    const double ratio = l_ps * p_s / (l_ss * p_m * x);
    const double arg = std::exp(-l_ss * n0 * x / p_s);

    specfun::KahanSum<long double> acc;
    for (int i = 0; i < k; ++i) {
        const double f21 = specfun::hyp2f1_terminating(i + ratio, i - n,
                                                       i + 1.0 + ratio, arg);
        acc.add(specfun::binomial(n, i) *
                std::exp(-static_cast<long double>(n0 * i * l_ss * x / p_s)) *
                f21 / (l_ps * p_s + l_ss * p_m * i * x));
    }
    const double cdf = static_cast<double>(l_ps * p_s * acc.value());
    return std::min(1.0, std::max(0.0, cdf));
}

/// Outage probability of the proposed scheme:
/// P_o = p_phi + sum_k p_k F_{xi_k}(xi_T).
inline double outage_probability(const SystemParams& params) {
    specfun::KahanSum<long double> acc;
    acc.add(halt_prob(params));
    for (int k = 1; k <= params.n_antennas; ++k)
        acc.add(static_cast<long double>(selection_prob(params, k)) *
                sinr_cdf(params, k, params.outage_threshold));
    return std::min(1.0, std::max(0.0, static_cast<double>(acc.value())));
}

/// Outage probability of the single-antenna power-adaptation baseline,
/// p = min(P_S, T/|g_1|^2). Derived by conditioning on the PR link gain;
/// the tail piece reduces to an E1 term.
inline double outage_probability_single_antenna_pa(
    const SystemParams& params) {
    const double p_m = params.pt_power;
    const double p_s = params.st_power;
    const double n0 = params.noise;
    const double l_ps = params.rate_ps;
    const double l_sp = params.rate_sp;
    const double t = params.interference_threshold;
    const double xi_t = params.outage_threshold;

    if (xi_t == 0.0) return 0.0;
    if (t == 0.0) return 1.0;  // zero transmit power, SINR = 0 < xi_T

    const double w = params.rate_ss * xi_t;
    const double q = t / p_s;

    // g^2 <= q: full power P_S
    const double cap_piece =
        -std::expm1(-l_sp * q) *
        (1.0 - std::exp(-w * n0 / p_s) * l_ps * p_s / (l_ps * p_s + w * p_m));

    // g^2 > q: adapted power T/g^2
    const double alpha = l_sp + w * n0 / t;
    const double a = l_ps * t;
    const double b = w * p_m;
    const double e1_arg = alpha * (a + b * q) / b;
    // e^{alpha a / b} E1(e1_arg) = e^{-alpha q} * e^{e1_arg} E1(e1_arg),
    // which stays finite for large thresholds
    const double tail_e1 =
        std::exp(-alpha * q) * specfun::exp_scaled_e1(e1_arg);
    const double tail_piece =
        std::exp(-l_sp * q) - l_ps * t * l_sp / b * tail_e1;

    const double outage = cap_piece + tail_piece;
    return std::min(1.0, std::max(0.0, outage));
}

namespace detail {

// sum_{l=k}^{N} 1 / ( l^{n+N-k} prod_{j != l} (1/l - 1/j) ) in exact
// rational arithmetic; the alternating partial-fraction weights cancel
// catastrophically in floating point.
inline double moment_weight_sum(int n_antennas, int k, int order) {
    using Rational = boost::multiprecision::cpp_rational;
    using Int = boost::multiprecision::cpp_int;

    Rational sum = 0;
    for (int l = k; l <= n_antennas; ++l) {
        Rational denominator =
            Rational(boost::multiprecision::pow(Int(l), order + n_antennas - k));
        for (int j = k; j <= n_antennas; ++j) {
            if (j == l) continue;
            denominator *= Rational(j - l, static_cast<long long>(l) * j);
        }
        sum += 1 / denominator;
    }
    return static_cast<double>(sum);
}

}  // namespace detail

/// E[xi_k^n]: the n-th moment of the rank-k SINR.
inline double sinr_moment(const SystemParams& params, int k, int n) {
    detail::check_rank(params, k);
    detail::check_moment_order(n);
    if (params.n_antennas > 20)
        throw std::invalid_argument(
            "sinr_moment: exact weight evaluation supports n_antennas <= 20");

    const double z = params.rate_ps * params.noise / params.pt_power;
    const double scale =
        params.rate_ps * params.st_power / (params.rate_ss * params.pt_power);
    const double gamma_scaled = specfun::exp_scaled_upper_gamma_nonpos(1 - n, z);
    return specfun::factorial(n) * std::pow(scale, n) * gamma_scaled *
           detail::moment_weight_sum(params.n_antennas, k, n);
}

/// E[xi_k] via the harmonic-number closed form; strictly decreasing in k.
inline double sinr_mean(const SystemParams& params, int k) {
    detail::check_rank(params, k);
    const double z = params.rate_ps * params.noise / params.pt_power;
    const double scale =
        params.rate_ps * params.st_power / (params.rate_ss * params.pt_power);
    return scale * specfun::exp_scaled_e1(z) *
           (specfun::harmonic(params.n_antennas) - specfun::harmonic(k - 1));
}

/// Higher-order amount of fading
///   AF^(n) = sum_k p_k E[xi_k^n] / (sum_k p_k E[xi_k])^n - 1
/// with the selection probabilities used exactly as printed (their sum is
/// 1 - p_phi, so the halt event enters both sums as a zero contribution).
/// `normalize_weights` instead conditions on transmission by dividing the
/// weights by 1 - p_phi.
inline double amount_of_fading(const SystemParams& params, int n,
                               bool normalize_weights = false) {
    detail::check_moment_order(n);
    if (n < 2)
        throw std::invalid_argument("amount_of_fading: requires order n >= 2");
    if (selection_prob(params, 1) <= 0.0)
        throw std::domain_error(
            "amount_of_fading: undefined when no antenna can ever be "
            "selected (T = 0)");

    specfun::KahanSum<long double> numerator, mean;
    for (int k = 1; k <= params.n_antennas; ++k) {
        const long double p_k = selection_prob(params, k);
        numerator.add(p_k * sinr_moment(params, k, n));
        mean.add(p_k * sinr_mean(params, k));
    }
    long double num = numerator.value();
    long double den = mean.value();
    if (normalize_weights) {
        const long double transmit_prob = 1.0L - halt_prob(params);
        num /= transmit_prob;
        den /= transmit_prob;
    }
    return static_cast<double>(num / std::pow(den, n) - 1.0L);
}

namespace detail {

// One alternating-sum term of the capacity expression, as the integral it
// came from: lambda_ss * int_0^inf ln(1+x) e^{-z_j x}
//   [ N0/(A x + B) + P_S P_M/(A x + B)^2 ] dx
// Used when the closed form hits its removable singularity.
inline double capacity_term_quadrature(const SystemParams& params, int m) {
    const double p_m = params.pt_power;
    const double p_s = params.st_power;
    const double n0 = params.noise;
    const double l_ss = params.rate_ss;
    const double z_j = n0 * l_ss * m / p_s;
    const double coeff_a = l_ss * m * p_m;
    const double coeff_b = p_s * params.rate_ps;
    auto integrand = [=](double x) {
        const double denom = coeff_a * x + coeff_b;
        return l_ss * std::log1p(x) * std::exp(-z_j * x) *
               (n0 / denom + p_s * p_m / (denom * denom));
    };
    return quadrature::integrate_to_inf(integrand, 0.0, 1e-13, 1e-12).value;
}

}  // namespace detail

/// Ergodic capacity (bits/s/Hz) of the rank-k path. Terms where
/// P_M lambda_ss (k+j) crosses P_S lambda_ps are removable singularities of
/// the closed form and switch to quadrature of the underlying integral.
inline double ergodic_capacity_k(const SystemParams& params, int k) {
    detail::check_rank(params, k);

    const int n = params.n_antennas;
    const double p_m = params.pt_power;
    const double p_s = params.st_power;
    const double n0 = params.noise;
    const double l_ss = params.rate_ss;
    const double l_ps = params.rate_ps;

    const double z_p = n0 * l_ps / p_m;
    const double e1_p = specfun::exp_scaled_e1(z_p);

    specfun::KahanSum<long double> acc;
    for (int j = 0; j <= n - k; ++j) {
        const int m = k + j;
        const double gap = p_m * l_ss * m - p_s * l_ps;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;

        double term;
        if (std::abs(gap) < 1e-9 * std::max(p_m * l_ss * m, p_s * l_ps)) {
            term = detail::capacity_term_quadrature(params, m);
        } else {
            const double z_j = n0 * l_ss * m / p_s;
            term = p_s * (e1_p - specfun::exp_scaled_e1(z_j)) / (m * gap);
        }
        acc.add(sign * specfun::binomial(n - k, j) * term);
    }
    return static_cast<double>(k * specfun::binomial(n, k) * l_ps /
                               std::numbers::ln2 * acc.value());
}

/// Ergodic capacity of the proposed scheme, C = sum_k p_k C_k. Halted
/// coherence intervals carry zero rate.
inline double ergodic_capacity(const SystemParams& params) {
    specfun::KahanSum<long double> acc;
    for (int k = 1; k <= params.n_antennas; ++k)
        acc.add(static_cast<long double>(selection_prob(params, k)) *
                ergodic_capacity_k(params, k));
    return static_cast<double>(acc.value());
}

/// Per-rank closed-form metrics for the proposed scheme.
struct RankMetricTable {
    std::vector<double> selection_prob;  // p_k, k = 1..N
    std::vector<double> mean_sinr;       // E[xi_k]
    std::vector<double> capacity;        // C_k
    double halt_prob = 0.0;              // p_phi
};

inline RankMetricTable rank_table(const SystemParams& params) {
    RankMetricTable table;
    table.halt_prob = halt_prob(params);
    for (int k = 1; k <= params.n_antennas; ++k) {
        table.selection_prob.push_back(selection_prob(params, k));
        table.mean_sinr.push_back(sinr_mean(params, k));
        table.capacity.push_back(ergodic_capacity_k(params, k));
    }
    return table;
}

}  // namespace cras::analytic
