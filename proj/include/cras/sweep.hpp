#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cras/analytic.hpp"
#include "cras/config.hpp"
#include "cras/model.hpp"
#include "cras/montecarlo.hpp"

namespace cras::sweep {

struct SweepRow {
    std::string axis_name;
    double axis_value = 0.0;
    std::string scheme;
    std::string metric;
    std::string method;
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

namespace detail {

inline void push_row(std::vector<SweepRow>& rows, const config::SweepSpec& spec,
                     double axis_value, schemes::SchemeId scheme,
                     const std::string& metric, const MetricEstimate& est) {
    rows.push_back(SweepRow{config::to_string(spec.axis), axis_value,
                            schemes::to_string(scheme), metric,
                            cras::to_string(est.method), est.value,
                            est.std_error, est.trials});
}

inline MetricEstimate analytic_estimate(const SystemParams& params,
                                        schemes::SchemeId scheme,
                                        config::Metric metric, int af_order) {
    if (scheme == schemes::SchemeId::single_antenna_pa) {
        if (metric != config::Metric::outage)
            throw std::logic_error(
                "analytic_estimate: sa-pa has a closed form for outage only");
        return MetricEstimate::exact(
            analytic::outage_probability_single_antenna_pa(params));
    }
    switch (metric) {
        case config::Metric::outage:
            return MetricEstimate::exact(analytic::outage_probability(params));
        case config::Metric::af:
            return MetricEstimate::exact(
                analytic::amount_of_fading(params, af_order));
        case config::Metric::capacity:
            return MetricEstimate::exact(analytic::ergodic_capacity(params));
        case config::Metric::rank_hist:
            break;  // expanded per rank by the caller
    }
    throw std::logic_error("analytic_estimate: unreachable");
}

}  // namespace detail

/// Evaluates the sweep grid. Row order is deterministic: axis value first,
/// then scheme, then metric, closed-form rows before Monte-Carlo rows.
inline std::vector<SweepRow> run_sweep(const config::SweepSpec& spec) {
    config::validate(spec);
    std::vector<SweepRow> rows;

    for (const double axis_value : spec.values) {
        const SystemParams params = config::apply_axis(spec, axis_value);
        for (const auto scheme : spec.schemes) {
            montecarlo::SimConfig sim;
            if (spec.sim) {
                sim = *spec.sim;
                sim.master_seed =
                    montecarlo::scheme_seed(sim.master_seed, scheme, spec.crn);
            }
            for (const auto metric : spec.metrics) {
                const bool analytic_row =
                    spec.analytic && config::analytic_supported(scheme, metric);
                const bool mc_row = spec.sim.has_value();

                if (metric == config::Metric::rank_hist) {
                    if (analytic_row) {
                        const double p_phi = analytic::halt_prob(params);
                        for (int k = 1; k <= params.n_antennas; ++k) {
                            detail::push_row(
                                rows, spec, axis_value, scheme,
                                "rank-hist[" + std::to_string(k) + "]",
                                MetricEstimate::exact(
                                    analytic::selection_prob(params, k)));
                        }
                        detail::push_row(rows, spec, axis_value, scheme,
                                         "rank-hist[halt]",
                                         MetricEstimate::exact(p_phi));
                    }
                    if (mc_row) {
                        const auto hist =
                            montecarlo::rank_histogram(params, sim);
                        for (int k = 1; k <= params.n_antennas; ++k) {
                            detail::push_row(
                                rows, spec, axis_value, scheme,
                                "rank-hist[" + std::to_string(k) + "]",
                                MetricEstimate{hist.rank_freq[k - 1],
                                               hist.rank_stderr[k - 1],
                                               Method::monte_carlo,
                                               hist.trials});
                        }
                        detail::push_row(
                            rows, spec, axis_value, scheme, "rank-hist[halt]",
                            MetricEstimate{hist.halt_freq, hist.halt_stderr,
                                           Method::monte_carlo, hist.trials});
                    }
                    continue;
                }

                if (analytic_row) {
                    detail::push_row(rows, spec, axis_value, scheme,
                                     config::to_string(metric),
                                     detail::analytic_estimate(
                                         params, scheme, metric, spec.af_order));
                }
                if (mc_row) {
                    MetricEstimate est;
                    switch (metric) {
                        case config::Metric::outage:
                            est = montecarlo::estimate_outage(params, scheme,
                                                              sim);
                            break;
                        case config::Metric::af:
                            est = montecarlo::estimate_af(params, scheme, sim,
                                                          spec.af_order);
                            break;
                        case config::Metric::capacity:
                            est = montecarlo::estimate_capacity(params, scheme,
                                                                sim);
                            break;
                        case config::Metric::rank_hist:
                            continue;  // handled above
                    }
                    detail::push_row(rows, spec, axis_value, scheme,
                                     config::to_string(metric), est);
                }
            }
        }
    }
    return rows;
}

/// Round-trip-exact float formatting (17 significant digits).
inline std::string format_value(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", x);
    return buffer;
}

inline void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "axis_name,axis_value,scheme,metric,method,value,stderr,trials\n";
    for (const auto& row : rows) {
        out << row.axis_name << ',' << format_value(row.axis_value) << ','
            << row.scheme << ',' << row.metric << ',' << row.method << ','
            << format_value(row.value) << ',' << format_value(row.std_error)
            << ',' << row.trials << '\n';
    }
}

inline std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

}  // namespace cras::sweep
