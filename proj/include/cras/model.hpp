#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cras {

/// Scalar parameters of the underlay cognitive-radio setup. Channel
/// quantities are squared magnitudes throughout; powers are in arbitrary
/// consistent (dimensionless) units.
struct SystemParams {
    int n_antennas = 1;                   // N, secondary transmit antennas
    double pt_power = 1.0;                // P_M, primary transmit power
    double st_power = 1.0;                // P_S, secondary transmit power
    double noise = 1e-2;                  // N0, noise power at the SR
    double interference_threshold = 0.1;  // T, interference cap at the PR
    double rate_ps = 1.0;                 // lambda_ps, PT->SR fading rate
    double rate_ss = 1.0;                 // lambda_ss, ST->SR fading rate
    double rate_sp = 1.0;                 // lambda_sp, ST->PR fading rate
    double outage_threshold = 1.0;        // xi_T, SINR outage threshold
    double ds_weight = 0.2;               // eta, difference-selection weight
};

/// Checks every SystemParams invariant; returns the params unchanged or
/// throws with a report naming each violated field.
inline SystemParams validate(const SystemParams& params) {
    std::string violations;
    auto require = [&violations](bool ok, const char* what) {
        if (!ok) {
            if (!violations.empty()) violations += "; ";
            violations += what;
        }
    };
    auto positive_finite = [](double x) { return std::isfinite(x) && x > 0.0; };

    require(params.n_antennas >= 1, "n_antennas must be >= 1");
    require(positive_finite(params.pt_power), "pt_power must be > 0");
    require(positive_finite(params.st_power), "st_power must be > 0");
    require(positive_finite(params.noise), "noise must be > 0");
    require(std::isfinite(params.interference_threshold) &&
                params.interference_threshold >= 0.0,
            "interference_threshold must be >= 0");
    require(positive_finite(params.rate_ps), "rate_ps must be > 0");
    require(positive_finite(params.rate_ss), "rate_ss must be > 0");
    require(positive_finite(params.rate_sp), "rate_sp must be > 0");
    require(std::isfinite(params.outage_threshold) &&
                params.outage_threshold >= 0.0,
            "outage_threshold must be >= 0");
    require(std::isfinite(params.ds_weight) && params.ds_weight >= 0.0 &&
                params.ds_weight <= 1.0,
            "ds_weight must lie in [0, 1]");

    if (!violations.empty())
        throw std::invalid_argument("invalid SystemParams: " + violations);
    return params;
}

/// One draw of all squared channel magnitudes.
struct ChannelRealization {
    double h0_sq = 0.0;          // |h_0|^2, PT -> SR
    std::vector<double> h_sq;    // |h_i|^2, ST antenna i -> SR
    std::vector<double> g_sq;    // |g_i|^2, ST antenna i -> PR
};

inline void validate_channels(const SystemParams& params,
                              const ChannelRealization& channels) {
    const auto n = static_cast<std::size_t>(params.n_antennas);
    if (channels.h_sq.size() != n || channels.g_sq.size() != n)
        throw std::invalid_argument(
            "ChannelRealization: vectors must have exactly n_antennas entries");
    auto ok = [](double x) { return std::isfinite(x) && x >= 0.0; };
    if (!ok(channels.h0_sq))
        throw std::invalid_argument("ChannelRealization: invalid h0_sq");
    for (std::size_t i = 0; i < n; ++i) {
        if (!ok(channels.h_sq[i]) || !ok(channels.g_sq[i]))
            throw std::invalid_argument(
                "ChannelRealization: entries must be finite and >= 0");
    }
}

/// Chosen antenna (1-based index) plus its rank in the descending sort of
/// |h_i|^2 (rank 1 = largest), or a halted transmission.
struct SelectionOutcome {
    bool halted = true;
    int antenna_index = 0;
    int rank = 0;

    static SelectionOutcome selected(int index, int rank) {
        return SelectionOutcome{false, index, rank};
    }
    static SelectionOutcome halt() { return SelectionOutcome{}; }

    bool is_halt() const { return halted; }
};

enum class Method { closed_form, monte_carlo, quadrature };

inline const char* to_string(Method method) {
    switch (method) {
        case Method::closed_form: return "closed_form";
        case Method::monte_carlo: return "monte_carlo";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

/// A metric value with provenance. Exact results carry zero standard error.
struct MetricEstimate {
    double value = 0.0;
    double std_error = 0.0;
    Method method = Method::closed_form;
    std::uint64_t trials = 0;

    static MetricEstimate exact(double value) {
        return MetricEstimate{value, 0.0, Method::closed_form, 0};
    }
};

}  // namespace cras
