#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cras/quadrature.hpp"

using cras::quadrature::integrate;
using cras::quadrature::integrate_to_inf;

TEST_CASE("kronrod rule weights are consistent") {
    // integral of 1 over [-1, 1] must be exactly the weight sum
    auto one = [](double) { return 1.0; };
    const auto result = integrate(one, -1.0, 1.0);
    CHECK(std::abs(result.value - 2.0) < 1e-15);
}

TEST_CASE("polynomials integrate to their antiderivative") {
    auto cubic = [](double x) { return x * x * x; };
    CHECK(std::abs(integrate(cubic, 1.0, 2.0).value - 15.0 / 4.0) < 1e-13);
    CHECK(std::abs(integrate(cubic, -2.0, -1.0).value + 15.0 / 4.0) < 1e-13);

    // degree 13 is still exact for the embedded Gauss rule; a wrong node or
    // weight digit would show up here
    auto poly13 = [](double x) { return std::pow(x, 13); };
    CHECK(std::abs(integrate(poly13, 0.0, 1.0).value - 1.0 / 14.0) < 1e-14);
}

TEST_CASE("oscillatory and peaked integrands") {
    auto osc = [](double x) { return std::sin(100.0 * x); };
    const double exact = (1.0 - std::cos(100.0)) / 100.0;
    CHECK(std::abs(integrate(osc, 0.0, 1.0, 1e-13).value - exact) < 1e-12);

    auto peak = [](double x) { return 1.0 / (1e-4 + x * x); };
    const double exact_peak = 2.0 * std::atan(1.0 / 1e-2) / 1e-2;
    const auto result = integrate(peak, -1.0, 1.0, 1e-10);
    CHECK(std::abs(result.value - exact_peak) / exact_peak < 1e-10);
}

TEST_CASE("semi-infinite transform handles exponential decay") {
    auto expdecay = [](double x) { return std::exp(-x); };
    CHECK(std::abs(integrate_to_inf(expdecay, 0.0).value - 1.0) < 1e-12);

    auto gauss = [](double x) { return std::exp(-x * x); };
    CHECK(std::abs(integrate_to_inf(gauss, 0.0).value -
                   std::sqrt(std::numbers::pi) / 2.0) < 1e-12);

    // shifted lower limit
    auto shifted = [](double x) { return std::exp(-x); };
    CHECK(std::abs(integrate_to_inf(shifted, 2.0).value - std::exp(-2.0)) <
          1e-13);
}

TEST_CASE("relative tolerance drives refinement") {
    auto f = [](double x) { return std::exp(-x) / (1.0 + x); };
    const auto result = integrate_to_inf(f, 0.0, 0.0, 1e-12);
    CHECK(result.converged);
    // reference: e * E1(1) computed independently below in specfun tests;
    // here just require the error estimate to be honest
    CHECK(result.error < 1e-11 * std::abs(result.value) + 1e-300);
}

TEST_CASE("degenerate and invalid ranges") {
    auto f = [](double x) { return x; };
    CHECK(integrate(f, 3.0, 3.0).value == 0.0);
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0), std::invalid_argument);
}
