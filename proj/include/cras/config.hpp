#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cras/model.hpp"
#include "cras/montecarlo.hpp"
#include "cras/schemes.hpp"

namespace cras::config {

/// Raised for malformed config files or invalid sweep specifications;
/// mapped to exit code 2 by the CLI.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Axis { T, P_S, N, xi_T };
enum class AxisScale { linear, db };  // db: values are P_S/N0 in dB
enum class Metric { outage, af, capacity, rank_hist };

inline const char* to_string(Axis axis) {
    switch (axis) {
        case Axis::T: return "T";
        case Axis::P_S: return "P_S";
        case Axis::N: return "N";
        case Axis::xi_T: return "xi_T";
    }
    return "unknown";
}

inline const char* to_string(Metric metric) {
    switch (metric) {
        case Metric::outage: return "outage";
        case Metric::af: return "af";
        case Metric::capacity: return "capacity";
        case Metric::rank_hist: return "rank-hist";
    }
    return "unknown";
}

inline Axis axis_from_string(const std::string& name) {
    if (name == "T") return Axis::T;
    if (name == "P_S") return Axis::P_S;
    if (name == "N") return Axis::N;
    if (name == "xi_T") return Axis::xi_T;
    throw ConfigError("unknown axis: " + name + " (expected T|P_S|N|xi_T)");
}

inline Metric metric_from_string(const std::string& name) {
    if (name == "outage") return Metric::outage;
    if (name == "af") return Metric::af;
    if (name == "capacity") return Metric::capacity;
    if (name == "rank-hist") return Metric::rank_hist;
    throw ConfigError("unknown metric: " + name +
                      " (expected outage|af|capacity|rank-hist)");
}

/// A grid of parameter values plus the metrics/schemes to evaluate on it.
struct SweepSpec {
    SystemParams base;
    Axis axis = Axis::T;
    AxisScale axis_scale = AxisScale::linear;
    std::vector<double> values;
    std::vector<Metric> metrics;
    std::vector<schemes::SchemeId> schemes;
    std::optional<montecarlo::SimConfig> sim;
    bool crn = true;       // common random numbers across schemes
    bool analytic = true;  // emit closed-form rows
    int af_order = 2;
};

/// Applies an axis value to the base parameters.
inline SystemParams apply_axis(const SweepSpec& spec, double value) {
    SystemParams params = spec.base;
    switch (spec.axis) {
        case Axis::T: params.interference_threshold = value; break;
        case Axis::P_S:
            params.st_power = spec.axis_scale == AxisScale::db
                                  ? params.noise * std::pow(10.0, value / 10.0)
                                  : value;
            break;
        case Axis::N: {
            const int n = static_cast<int>(std::llround(value));
            if (static_cast<double>(n) != value || n < 1)
                throw ConfigError("axis N values must be positive integers");
            params.n_antennas = n;
            break;
        }
        case Axis::xi_T: params.outage_threshold = value; break;
    }
    return validate(params);
}

inline bool analytic_supported(schemes::SchemeId scheme, Metric metric) {
    if (scheme == schemes::SchemeId::proposed) return true;
    return scheme == schemes::SchemeId::single_antenna_pa &&
           metric == Metric::outage;
}

/// Full semantic validation of a sweep specification.
inline const SweepSpec& validate(const SweepSpec& spec) {
    cras::validate(spec.base);
    if (spec.values.empty()) throw ConfigError("sweep.values must be non-empty");
    for (std::size_t i = 0; i + 1 < spec.values.size(); ++i) {
        if (!(spec.values[i] < spec.values[i + 1]))
            throw ConfigError("sweep.values must be strictly increasing");
    }
    if (spec.metrics.empty())
        throw ConfigError("sweep.metrics must be non-empty");
    if (spec.schemes.empty())
        throw ConfigError("sweep.schemes must be non-empty");
    if (spec.axis_scale == AxisScale::db && spec.axis != Axis::P_S)
        throw ConfigError("axis_scale = db applies only to axis P_S");
    if (!spec.analytic && !spec.sim)
        throw ConfigError(
            "nothing to evaluate: analytic = off and no [sim] section");
    if (spec.af_order < 2 || spec.af_order > 8)
        throw ConfigError("sweep.af_order must lie in [2, 8]");
    for (const auto scheme : spec.schemes) {
        for (const auto metric : spec.metrics) {
            if (metric == Metric::rank_hist &&
                scheme != schemes::SchemeId::proposed)
                throw ConfigError(
                    std::string("metric rank-hist is only defined for the "
                                "proposed scheme (got ") +
                    schemes::to_string(scheme) + ")");
            if (spec.analytic && !spec.sim &&
                !analytic_supported(scheme, metric))
                throw ConfigError(
                    std::string("no closed form for scheme ") +
                    schemes::to_string(scheme) + ", metric " +
                    to_string(metric) +
                    " (only proposed metrics and sa-pa outage have one); "
                    "add a [sim] section or drop the combination");
        }
    }
    for (const double v : spec.values) apply_axis(spec, v);
    return spec;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> items;
    std::string current;
    for (const char c : s) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                items.push_back(current);
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) items.push_back(current);
    return items;
}

using Section = std::map<std::string, std::string>;
using Sections = std::map<std::string, Section>;

inline Sections parse_sections(std::istream& in, const std::string& origin) {
    Sections sections;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(line_no) +
                                  ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": missing key before '='");
        if (value.empty())
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": empty value for key " + key);
        if (!sections[section].emplace(key, value).second)
            throw ConfigError(origin + ":" + std::to_string(line_no) +
                              ": duplicate key " + key);
    }
    return sections;
}

struct SectionReader {
    const std::string name;
    Section entries;

    std::optional<std::string> take(const std::string& key) {
        const auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        std::string value = it->second;
        entries.erase(it);
        return value;
    }

    std::string require(const std::string& key) {
        auto value = take(key);
        if (!value)
            throw ConfigError("[" + name + "] missing required key " + key);
        return *value;
    }

    double require_double(const std::string& key) {
        return parse_double(key, require(key));
    }

    double take_double(const std::string& key, double fallback) {
        const auto value = take(key);
        return value ? parse_double(key, *value) : fallback;
    }

    bool take_bool(const std::string& key, bool fallback) {
        const auto value = take(key);
        if (!value) return fallback;
        if (*value == "on" || *value == "true" || *value == "1") return true;
        if (*value == "off" || *value == "false" || *value == "0") return false;
        throw ConfigError("[" + name + "] " + key + ": expected on|off");
    }

    std::uint64_t take_u64(const std::string& key, std::uint64_t fallback) {
        const auto value = take(key);
        if (!value) return fallback;
        try {
            std::size_t consumed = 0;
            const std::uint64_t parsed = std::stoull(*value, &consumed);
            if (consumed != value->size()) throw std::invalid_argument("");
            return parsed;
        } catch (const std::exception&) {
            throw ConfigError("[" + name + "] " + key +
                              ": expected an unsigned integer, got " + *value);
        }
    }

    double parse_double(const std::string& key, const std::string& value) {
        try {
            std::size_t consumed = 0;
            const double parsed = std::stod(value, &consumed);
            if (consumed != value.size()) throw std::invalid_argument("");
            return parsed;
        } catch (const std::exception&) {
            throw ConfigError("[" + name + "] " + key +
                              ": expected a number, got " + value);
        }
    }

    void reject_unknown() const {
        if (!entries.empty())
            throw ConfigError("[" + name + "] unknown key " +
                              entries.begin()->first);
    }
};

}  // namespace detail

inline SweepSpec parse_sweep_spec(std::istream& in,
                                  const std::string& origin = "<config>") {
    auto sections = detail::parse_sections(in, origin);
    auto take_section = [&sections](const std::string& name) {
        detail::SectionReader reader{name, {}};
        const auto it = sections.find(name);
        if (it != sections.end()) {
            reader.entries = it->second;
            sections.erase(it);
        }
        return reader;
    };

    SweepSpec spec;

    auto system = take_section("system");
    if (system.entries.empty())
        throw ConfigError(origin + ": missing [system] section");
    spec.base.n_antennas =
        static_cast<int>(system.require_double("n_antennas"));
    spec.base.pt_power = system.require_double("pt_power");
    spec.base.st_power = system.require_double("st_power");
    spec.base.noise = system.require_double("noise");
    spec.base.interference_threshold =
        system.require_double("interference_threshold");
    spec.base.rate_ps = system.require_double("rate_ps");
    spec.base.rate_ss = system.require_double("rate_ss");
    spec.base.rate_sp = system.require_double("rate_sp");
    spec.base.outage_threshold = system.require_double("outage_threshold");
    spec.base.ds_weight = system.take_double("ds_weight", 0.2);
    system.reject_unknown();

    auto sweep = take_section("sweep");
    if (sweep.entries.empty())
        throw ConfigError(origin + ": missing [sweep] section");
    spec.axis = axis_from_string(sweep.require("axis"));
    const auto scale = sweep.take("axis_scale");
    if (scale) {
        if (*scale == "linear") spec.axis_scale = AxisScale::linear;
        else if (*scale == "db") spec.axis_scale = AxisScale::db;
        else throw ConfigError("[sweep] axis_scale: expected linear|db");
    }
    for (const auto& item : detail::split_list(sweep.require("values")))
        spec.values.push_back(sweep.parse_double("values", item));
    for (const auto& item : detail::split_list(sweep.require("metrics")))
        spec.metrics.push_back(metric_from_string(item));
    for (const auto& item : detail::split_list(sweep.require("schemes"))) {
        try {
            spec.schemes.push_back(schemes::scheme_from_string(item));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("[sweep] schemes: ") + e.what());
        }
    }
    spec.analytic = sweep.take_bool("analytic", true);
    spec.af_order = static_cast<int>(sweep.take_double("af_order", 2));
    sweep.reject_unknown();

    if (sections.count("sim")) {
        auto sim_section = take_section("sim");
        montecarlo::SimConfig sim;
        sim.trials = sim_section.take_u64("trials", sim.trials);
        sim.master_seed = sim_section.take_u64("master_seed", sim.master_seed);
        sim.parallel_chunks = static_cast<int>(
            sim_section.take_u64("parallel_chunks",
                                 static_cast<std::uint64_t>(sim.parallel_chunks)));
        spec.crn = sim_section.take_bool("crn", true);
        sim_section.reject_unknown();
        try {
            montecarlo::validate(sim);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("[sim] ") + e.what());
        }
        spec.sim = sim;
    }
    if (!sections.empty())
        throw ConfigError(origin + ": unknown section [" +
                          sections.begin()->first + "]");

    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return spec;
}

inline SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_sweep_spec(in, path);
}

}  // namespace cras::config
