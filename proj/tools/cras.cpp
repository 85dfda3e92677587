// Batch front-end: parameter sweeps to CSV and the self-validation suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "cras/checks.hpp"
#include "cras/config.hpp"
#include "cras/sweep.hpp"

namespace {

int default_chunks() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

struct SweepCli {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> crn;
};

int run_sweep_command(const SweepCli& cli) {
    cras::config::SweepSpec spec = cras::config::load_sweep_spec(cli.config_path);

    if (cli.seed || cli.trials) {
        cras::montecarlo::SimConfig sim =
            spec.sim.value_or(cras::montecarlo::SimConfig{100000, 0x1905C0FFEEULL,
                                                          default_chunks()});
        if (cli.seed) sim.master_seed = *cli.seed;
        if (cli.trials) sim.trials = *cli.trials;
        spec.sim = sim;
    }
    if (cli.crn) {
        if (*cli.crn == "on") spec.crn = true;
        else if (*cli.crn == "off") spec.crn = false;
        else throw cras::config::ConfigError("--crn expects on|off");
    }
    cras::config::validate(spec);

    const auto rows = cras::sweep::run_sweep(spec);
    if (cli.out_path.empty()) {
        cras::sweep::write_csv(std::cout, rows);
    } else {
        std::ofstream out(cli.out_path, std::ios::binary);
        if (!out)
            throw cras::config::ConfigError("cannot open output file: " +
                                            cli.out_path);
        cras::sweep::write_csv(out, rows);
    }

    std::cerr << "# sweep: axis=" << cras::config::to_string(spec.axis)
              << " points=" << spec.values.size()
              << " schemes=" << spec.schemes.size()
              << " metrics=" << spec.metrics.size() << " rows=" << rows.size();
    if (spec.sim)
        std::cerr << " trials=" << spec.sim->trials
                  << " seed=" << spec.sim->master_seed
                  << " crn=" << (spec.crn ? "on" : "off");
    if (!cli.out_path.empty()) std::cerr << " -> " << cli.out_path;
    std::cerr << "\n";
    return 0;
}

int run_validate_command(const cras::checks::SuiteOptions& options) {
    const auto results = cras::checks::run_all(options);
    std::size_t failures = 0;
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                  << "  (measured " << cras::sweep::format_value(r.measured)
                  << ", limit " << cras::sweep::format_value(r.threshold)
                  << ")\n";
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all checks passed"
                                : std::to_string(failures) + " check(s) failed")
              << " (" << results.size() << " total, "
              << (options.quick ? "quick" : "full") << " mode, seed "
              << options.seed << ")\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Transmit antenna selection for underlay cognitive radio: closed-form "
        "metrics cross-validated by Monte-Carlo simulation"};
    app.require_subcommand(1);

    SweepCli sweep_cli;
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "evaluate a parameter sweep from a config file, emit CSV");
    sweep_cmd->add_option("config", sweep_cli.config_path, "config file path")
        ->required();
    sweep_cmd->add_option("--out", sweep_cli.out_path,
                          "CSV output path (default: stdout)");
    std::uint64_t seed_value = 0, trials_value = 0;
    auto* seed_opt = sweep_cmd->add_option("--seed", seed_value,
                                           "override the Monte-Carlo seed");
    auto* trials_opt =
        sweep_cmd->add_option("--trials", trials_value, "override trial count");
    std::string crn_value;
    auto* crn_opt = sweep_cmd->add_option(
        "--crn", crn_value, "common random numbers across schemes: on|off");

    cras::checks::SuiteOptions suite;
    suite.parallel_chunks = default_chunks();
    auto* validate_cmd = app.add_subcommand(
        "validate", "run the analytic-vs-MC consistency suite");
    validate_cmd->add_flag("--quick", suite.quick,
                           "smaller trial counts and grids");
    validate_cmd->add_option("--seed", suite.seed, "master seed");
    validate_cmd->add_option("--trials", suite.trials,
                             "Monte-Carlo trials per grid point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            if (*seed_opt) sweep_cli.seed = seed_value;
            if (*trials_opt) sweep_cli.trials = trials_value;
            if (*crn_opt) sweep_cli.crn = crn_value;
            return run_sweep_command(sweep_cli);
        }
        return run_validate_command(suite);
    } catch (const cras::config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
