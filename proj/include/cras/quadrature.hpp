#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cras::quadrature {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;        // accumulated error estimate
    int evaluations = 0;
    bool converged = false;

    operator double() const { return value; }
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
// Gauss points are the odd-indexed Kronrod abscissae.
inline constexpr double kKronrodNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};

inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <typename F>
inline void gauss_kronrod_15(const F& f, double a, double b, double& value,
                             double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_mid = f(mid);
    double kronrod = kKronrodWeights[7] * f_mid;
    double gauss = kGaussWeights[3] * f_mid;

    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kronrod += kKronrodWeights[i] * fsum;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fsum;
    }
    value = kronrod * half;
    error = std::abs((kronrod - gauss) * half);
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a, b].
/// Subdivides the interval with the worst local error estimate until the
/// total estimated error drops below max(abs_tol, rel_tol * |integral|).
template <typename F>
QuadResult integrate(const F& f, double a, double b, double abs_tol = 1e-12,
                     double rel_tol = 0.0, int max_intervals = 4000) {
    if (!(a <= b)) throw std::invalid_argument("integrate: requires a <= b");
    QuadResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::priority_queue<detail::Interval> heap;
    detail::Interval whole{a, b, 0.0, 0.0};
    detail::gauss_kronrod_15(f, a, b, whole.value, whole.error);
    result.evaluations = 15;
    heap.push(whole);

    double total_value = whole.value;
    double total_error = whole.error;

    while (static_cast<int>(heap.size()) < max_intervals) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total_value));
        if (total_error <= tol) break;

        detail::Interval worst = heap.top();
        heap.pop();
        total_value -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval no longer splittable in double precision
            total_value += worst.value;
            total_error += worst.error;
            heap.push(worst);
            break;
        }
        detail::Interval left{worst.a, mid, 0.0, 0.0};
        detail::Interval right{mid, worst.b, 0.0, 0.0};
        detail::gauss_kronrod_15(f, left.a, left.b, left.value, left.error);
        detail::gauss_kronrod_15(f, right.a, right.b, right.value, right.error);
        result.evaluations += 30;

        total_value += left.value + right.value;
        total_error += left.error + right.error;
        heap.push(left);
        heap.push(right);
    }

    // re-sum by interval for a tighter final value
    double value = 0.0, compensation = 0.0;
    std::vector<detail::Interval> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const detail::Interval& x, const detail::Interval& y) {
                  return x.a < y.a;
              });
    for (const auto& piece : pieces) {
        const double y = piece.value - compensation;
        const double t = value + y;
        compensation = (t - value) - y;
        value = t;
    }

    result.value = value;
    result.error = total_error;
    result.converged =
        total_error <= std::max(abs_tol, rel_tol * std::abs(value));
    return result;
}

/// Integral of f over [a, inf) via the substitution x = a + t/(1-t).
/// The integrand must decay fast enough that f(x)/(1-t)^2 -> 0 as t -> 1.
template <typename F>
QuadResult integrate_to_inf(const F& f, double a, double abs_tol = 1e-12,
                            double rel_tol = 0.0, int max_intervals = 4000) {
    auto mapped = [&f, a](double t) -> double {
        const double u = 1.0 - t;
        const double x = a + t / u;
        if (!std::isfinite(x)) return 0.0;
        const double fx = f(x);
        const double w = 1.0 / (u * u);
        const double v = fx * w;
        return std::isfinite(v) ? v : 0.0;
    };
    return integrate(mapped, 0.0, 1.0, abs_tol, rel_tol, max_intervals);
}

}  // namespace cras::quadrature
