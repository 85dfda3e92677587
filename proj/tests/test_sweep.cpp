#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "cras/checks.hpp"
#include "cras/config.hpp"
#include "cras/sweep.hpp"

using namespace cras;
namespace cfg = cras::config;

namespace {

std::string minimal_config(const std::string& sweep_extra = "",
                           const std::string& tail = "") {
    return "# comment line\n"
           "[system]\n"
           "n_antennas = 4\n"
           "pt_power = 1.0\n"
           "st_power = 0.5\n"
           "noise = 0.01\n"
           "interference_threshold = 0.1\n"
           "rate_ps = 10\n"
           "rate_ss = 3\n"
           "rate_sp = 10\n"
           "outage_threshold = 1.0\n"
           "ds_weight = 0.2\n"
           "[sweep]\n"
           "axis = T\n"
           "values = 0.05, 0.1, 0.2\n"
           "metrics = outage\n"
           "schemes = proposed\n" +
           sweep_extra + tail;
}

cfg::SweepSpec parse(const std::string& text) {
    std::istringstream in(text);
    return cfg::parse_sweep_spec(in, "<test>");
}

}  // namespace

TEST_CASE("a minimal config parses into the expected spec") {
    const auto spec = parse(minimal_config());
    CHECK(spec.base.n_antennas == 4);
    CHECK(spec.base.st_power == 0.5);
    CHECK(spec.axis == cfg::Axis::T);
    CHECK(spec.values == std::vector<double>{0.05, 0.1, 0.2});
    CHECK(spec.metrics.size() == 1);
    CHECK(spec.schemes.size() == 1);
    CHECK_FALSE(spec.sim.has_value());
}

TEST_CASE("config errors carry the offending field") {
    // empty metrics
    CHECK_THROWS_WITH(
        parse(minimal_config().substr(0, minimal_config().find("metrics")) +
              "metrics =\nschemes = proposed\n"),
        Catch::Matchers::ContainsSubstring("metrics"));

    // non-increasing axis values
    std::string bad = minimal_config();
    bad.replace(bad.find("0.05, 0.1, 0.2"), 14, "0.2, 0.1, 0.05");
    CHECK_THROWS_WITH(parse(bad),
                      Catch::Matchers::ContainsSubstring("strictly increasing"));

    // unknown keys are rejected
    CHECK_THROWS_WITH(parse(minimal_config("typo_key = 3\n")),
                      Catch::Matchers::ContainsSubstring("typo_key"));

    // analytic-only sweep cannot serve MC-only combinations
    std::string mmi = minimal_config();
    mmi.replace(mmi.find("schemes = proposed"), 18, "schemes = mmi");
    CHECK_THROWS_WITH(parse(mmi),
                      Catch::Matchers::ContainsSubstring("no closed form"));

    // invalid system parameter
    std::string negative = minimal_config();
    negative.replace(negative.find("rate_ss = 3"), 11, "rate_ss = -3");
    CHECK_THROWS_AS(parse(negative), cfg::ConfigError);
}

TEST_CASE("rank-hist is gated to the proposed scheme") {
    std::string text = minimal_config("", "[sim]\ntrials = 1000\n");
    text.replace(text.find("metrics = outage"), 16, "metrics = rank-hist");
    CHECK_NOTHROW(parse(text));

    text.replace(text.find("schemes = proposed"), 18, "schemes = muc");
    CHECK_THROWS_WITH(parse(text),
                      Catch::Matchers::ContainsSubstring("rank-hist"));
}

TEST_CASE("dB axis values convert through the noise floor") {
    std::string text = minimal_config();
    text.replace(text.find("axis = T"), 8, "axis = P_S");
    text.replace(text.find("values = 0.05, 0.1, 0.2"), 23,
                 "values = 10, 20, 30\naxis_scale = db");
    const auto spec = parse(text);
    // 10 dB over N0 = 0.01 -> P_S = 0.1
    const auto params = cfg::apply_axis(spec, 10.0);
    CHECK_THAT(params.st_power, Catch::Matchers::WithinRel(0.1, 1e-12));
    const auto loud = cfg::apply_axis(spec, 30.0);
    CHECK_THAT(loud.st_power, Catch::Matchers::WithinRel(10.0, 1e-12));

    // dB scale is only meaningful for the P_S axis
    std::string bad = minimal_config("axis_scale = db\n");
    CHECK_THROWS_WITH(parse(bad), Catch::Matchers::ContainsSubstring("db"));
}

TEST_CASE("axis N must be integral") {
    std::string text = minimal_config();
    text.replace(text.find("axis = T"), 8, "axis = N");
    text.replace(text.find("values = 0.05, 0.1, 0.2"), 23,
                 "values = 2, 4, 8");
    CHECK_NOTHROW(parse(text));

    text.replace(text.find("values = 2, 4, 8"), 16, "values = 2, 4.5, 8");
    CHECK_THROWS_WITH(parse(text),
                      Catch::Matchers::ContainsSubstring("integers"));
}

TEST_CASE("analytic sweep rows are ordered and exact") {
    auto spec = parse(minimal_config());
    spec.schemes = {schemes::SchemeId::proposed,
                    schemes::SchemeId::single_antenna_pa};
    const auto rows = sweep::run_sweep(spec);
    REQUIRE(rows.size() == 6);  // 3 axis points x 2 schemes x 1 metric
    CHECK(rows[0].axis_value == 0.05);
    CHECK(rows[0].scheme == "proposed");
    CHECK(rows[1].scheme == "sa-pa");
    CHECK(rows[2].axis_value == 0.1);
    for (const auto& row : rows) {
        CHECK(row.method == "closed_form");
        CHECK(row.std_error == 0.0);
        CHECK(row.trials == 0);
    }
}

TEST_CASE("monte-carlo rows follow the closed-form rows") {
    auto spec = parse(minimal_config("", "[sim]\ntrials = 2000\n"
                                         "master_seed = 5\n"));
    const auto rows = sweep::run_sweep(spec);
    REQUIRE(rows.size() == 6);  // per point: closed_form then monte_carlo
    CHECK(rows[0].method == "closed_form");
    CHECK(rows[1].method == "monte_carlo");
    CHECK(rows[1].trials == 2000);
    CHECK(rows[1].std_error > 0.0);
}

TEST_CASE("rank-hist expands into per-rank rows") {
    auto spec = parse(minimal_config());
    spec.metrics = {cfg::Metric::rank_hist};
    const auto rows = sweep::run_sweep(spec);
    REQUIRE(rows.size() == 3u * 5u);  // ranks 1..4 plus halt
    CHECK(rows[0].metric == "rank-hist[1]");
    CHECK(rows[4].metric == "rank-hist[halt]");
    double sum = 0.0;
    for (std::size_t i = 0; i < 5; ++i) sum += rows[i].value;
    CHECK_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("CSV output is byte-identical across runs and chunk counts") {
    checks::SuiteOptions options;
    options.quick = true;
    const auto result = checks::csv_reproducibility(options);
    CHECK(result.pass);
}

TEST_CASE("CSV formatting round-trips doubles") {
    const std::string text = sweep::format_value(0.1);
    CHECK(std::stod(text) == 0.1);
    CHECK(sweep::format_value(1.0) == "1");
    const double awkward = 0.30000000000000004;
    CHECK(std::stod(sweep::format_value(awkward)) == awkward);
}

TEST_CASE("shipped sweep recipes parse and validate") {
    for (const auto* path :
         {"configs/outage_vs_threshold.cfg", "configs/af_vs_threshold.cfg",
          "configs/capacity_vs_power_n2.cfg",
          "configs/capacity_vs_power_n4.cfg",
          "configs/capacity_vs_power_n8.cfg",
          "configs/scheme_comparison.cfg"}) {
        const std::string full = std::string(CRAS_SOURCE_DIR "/") + path;
        INFO(full);
        CHECK_NOTHROW(cfg::load_sweep_spec(full));
    }
}

TEST_CASE("sweep recipes produce their grids (reduced trials)") {
    auto spec = cfg::load_sweep_spec(CRAS_SOURCE_DIR
                                     "/configs/scheme_comparison.cfg");
    REQUIRE(spec.sim.has_value());
    spec.sim->trials = 500;  // keep the unit test fast
    const auto rows = sweep::run_sweep(spec);
    CHECK(rows.size() == spec.values.size() * spec.schemes.size() +
                             spec.values.size());  // MC rows + proposed exact
}
