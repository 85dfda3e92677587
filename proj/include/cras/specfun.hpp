#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cras/quadrature.hpp"

namespace cras::specfun {

/// Kahan-compensated accumulator. All finite series below run through it;
/// the alternating-sign sums in the SINR formulas need the compensation.
template <typename T = long double>
struct KahanSum {
    T sum = 0, carry = 0;

    void add(T x) {
        const T y = x - carry;
        const T t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

namespace detail {

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::nearbyint(x);
}

// rejects denominator parameters that hit a pole in a retained term:
// c + m == 0 for some 0 <= m <= d
inline void check_denominator_param(double c, long terms, const char* name) {
    if (c == std::nearbyint(c) && c <= 0.0 && -c <= static_cast<double>(terms)) {
        throw std::invalid_argument(std::string("terminating hypergeometric: "
                                                "denominator parameter ") +
                                    name + " hits a pole in a retained term");
    }
}

inline long terminating_order(double b, const char* fn) {
    if (!is_nonpositive_integer(b)) {
        throw std::invalid_argument(
            std::string(fn) +
            ": series parameter b must be a non-positive integer");
    }
    return static_cast<long>(std::llround(-b));
}

inline void check_unit_interval(double z, const char* fn) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw std::invalid_argument(std::string(fn) +
                                    ": argument z must lie in [0, 1]");
    }
}

}  // namespace detail

/// 2F1(a, b; c; z) with b a non-positive integer: the exact terminating sum
/// sum_{m=0}^{-b} (a)_m (b)_m / ((c)_m m!) z^m.
inline double hyp2f1_terminating(double a, double b, double c, double z) {
    const long d = detail::terminating_order(b, "hyp2f1_terminating");
    detail::check_unit_interval(z, "hyp2f1_terminating");
    detail::check_denominator_param(c, d, "c");

    KahanSum<long double> acc;
    long double term = 1.0L;
    acc.add(term);
    for (long m = 0; m < d; ++m) {
        term *= (static_cast<long double>(a) + m) *
                (static_cast<long double>(b) + m) /
                ((static_cast<long double>(c) + m) * (m + 1)) * z;
        acc.add(term);
    }
    return static_cast<double>(acc.value());
}

/// 3F2(a1, a2, b; c1, c2; z) with b a non-positive integer (terminating).
inline double hyp3f2_terminating(double a1, double a2, double b, double c1,
                                 double c2, double z) {
    const long d = detail::terminating_order(b, "hyp3f2_terminating");
    detail::check_unit_interval(z, "hyp3f2_terminating");
    detail::check_denominator_param(c1, d, "c1");
    detail::check_denominator_param(c2, d, "c2");

    KahanSum<long double> acc;
    long double term = 1.0L;
    acc.add(term);
    for (long m = 0; m < d; ++m) {
        term *= (static_cast<long double>(a1) + m) *
                (static_cast<long double>(a2) + m) /
                (static_cast<long double>(c1) + m) *
                (static_cast<long double>(b) + m) /
                ((static_cast<long double>(c2) + m) * (m + 1)) * z;
        acc.add(term);
    }
    return static_cast<double>(acc.value());
}

namespace detail {

// E1(z) * e^z for z > 1 by the modified Lentz continued fraction
//   E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...))))
inline long double e1_scaled_continued_fraction(long double z) {
    constexpr long double tiny = 1e-300L;
    long double b = z + 1.0L;
    long double c = 1.0L / tiny;
    long double d = 1.0L / b;
    long double h = d;
    for (int i = 1; i <= 4000; ++i) {
        const long double a = -static_cast<long double>(i) * i;
        b += 2.0L;
        d = a * d + b;
        if (d == 0.0L) d = tiny;
        c = b + a / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0L) <= 1e-18L) break;
    }
    return h;
}

// E1(z) for 0 < z <= 1 by the power series
//   E1(z) = -gamma - ln z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
inline long double e1_series(long double z) {
    KahanSum<long double> acc;
    acc.add(-std::numbers::egamma_v<long double>);
    acc.add(-std::log(z));
    long double term = 1.0L;
    for (int k = 1; k <= 60; ++k) {
        term *= -z / k;
        const long double contribution = -term / k;
        acc.add(contribution);
        if (std::abs(contribution) <= 1e-19L * std::abs(acc.value())) break;
    }
    return acc.value();
}

}  // namespace detail

/// Exponential integral E1(z) = int_z^inf e^{-t}/t dt, z > 0.
/// Power series up to z = 1, continued fraction beyond.
inline double exp_integral_e1(double z) {
    if (!(z > 0.0))
        throw std::invalid_argument("exp_integral_e1: requires z > 0");
    if (z <= 1.0) return static_cast<double>(detail::e1_series(z));
    return static_cast<double>(detail::e1_scaled_continued_fraction(z) *
                               std::exp(-static_cast<long double>(z)));
}

/// e^z E1(z), the form every capacity/moment expression actually consumes.
/// Stable for large z where E1 alone underflows.
inline double exp_scaled_e1(double z) {
    if (!(z > 0.0)) throw std::invalid_argument("exp_scaled_e1: requires z > 0");
    if (z <= 1.0)
        return static_cast<double>(std::exp(static_cast<long double>(z)) *
                                   detail::e1_series(z));
    return static_cast<double>(detail::e1_scaled_continued_fraction(z));
}

namespace detail {

// e^z Gamma(order, z) for order < -7 via z-shifted quadrature:
//   e^z int_z^inf t^{order-1} e^{-t} dt = int_0^inf (z+u)^{order-1} e^{-u} du
inline double exp_scaled_upper_gamma_quadrature(int order, double z) {
    auto integrand = [order, z](double u) {
        return std::pow(z + u, order - 1) * std::exp(-u);
    };
    return quadrature::integrate_to_inf(integrand, 0.0, 1e-15, 1e-13).value;
}

}  // namespace detail

/// e^z Gamma(order, z) for integer order <= 0, z > 0. Downward recurrence
/// from e^z Gamma(0, z) = e^z E1(z); each step divides by a negative integer.
/// Recurrence is limited to order >= -7 (the moment orders this library
/// evaluates); beyond that the quadrature fallback takes over.
inline double exp_scaled_upper_gamma_nonpos(int order, double z) {
    if (!(z > 0.0))
        throw std::invalid_argument(
            "exp_scaled_upper_gamma_nonpos: requires z > 0");
    if (order > 0)
        throw std::invalid_argument(
            "exp_scaled_upper_gamma_nonpos: requires order <= 0");
    if (order < -7) return detail::exp_scaled_upper_gamma_quadrature(order, z);

    long double g = exp_scaled_e1(z);  // e^z Gamma(0, z)
    const long double lz = z;
    long double z_pow = 1.0L;  // z^a for the current a
    for (int a = -1; a >= order; --a) {
        z_pow /= lz;
        g = (g - z_pow) / a;
    }
    return static_cast<double>(g);
}

/// Gamma(order, z) = int_z^inf t^{order-1} e^{-t} dt for integer order <= 0.
inline double upper_incomplete_gamma_nonpos(int order, double z) {
    return exp_scaled_upper_gamma_nonpos(order, z) * std::exp(-z);
}

/// Harmonic number H_m = sum_{i=1}^m 1/i, with H_0 = 0.
inline double harmonic(int m) {
    if (m < 0) throw std::invalid_argument("harmonic: requires m >= 0");
    KahanSum<long double> acc;
    for (int i = 1; i <= m; ++i) acc.add(1.0L / i);
    return static_cast<double>(acc.value());
}

/// Binomial coefficient C(n, k); 0 outside 0 <= k <= n. Integer-exact
/// arithmetic up to n = 62, lgamma beyond.
inline double binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: requires n >= 0");
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    if (n <= 62) {
        std::uint64_t result = 1;
        for (int i = 1; i <= k; ++i) {
            result = result * static_cast<std::uint64_t>(n - k + i) /
                     static_cast<std::uint64_t>(i);
        }
        return static_cast<double>(result);
    }
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                               std::lgamma(n - k + 1.0)));
}

/// n! as a double, exact for the small orders used here.
inline double factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: requires n >= 0");
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace cras::specfun
