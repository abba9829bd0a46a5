#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "winfree/config.hpp"
#include "winfree/error.hpp"

#include <cmath>

using namespace winfree;
using nlohmann::json;

namespace {

std::vector<std::string> problems_of(const json& doc) {
    try {
        (void)parse_config(doc);
    } catch (const ConfigError& e) {
        return e.problems();
    }
    return {};
}

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
    for (const auto& p : problems) {
        if (p.find(needle) != std::string::npos) return true;
    }
    return false;
}

json minimal() {
    return json::parse(R"({
        "model": "second_order_det",
        "params": {"n": 3, "nu": [1, 2, 3], "kappa": 0.5, "gamma": 2},
        "initial": {"theta": {"ramp": {"center": 0, "slope": 0.1}}, "omega": [0, 0, 0]},
        "grid": {"dt": 0.01, "steps": 10}
    })");
}

}  // namespace

TEST_CASE("minimal document", "[config]") {
    const auto cfg = parse_config(minimal());
    CHECK(cfg.params.n == 3);
    CHECK(cfg.grid.steps == 10);
    CHECK(cfg.scheme == Scheme::euler);
    CHECK(cfg.output.format == OutputFormat::csv);
    const auto s = cfg.initial_state();
    CHECK(s.theta == std::vector<double>{-0.1, 0.0, 0.1});
}

TEST_CASE("ramp materialization", "[config]") {
    CHECK(materialize(Ramp{128.0, 1e-4}, 21) == oracle::ramp(21, 128.0, 1e-4));
    CHECK(materialize(Ramp{2.0, 1.0}, 1) == std::vector<double>{2.0});
    CHECK_THROWS_AS(materialize(std::vector<double>{1.0, 2.0}, 3), InvalidArgument);
}

TEST_CASE("presets expand to the documented parameters", "[config]") {
    const auto doc = json::parse(R"({"preset": "fig1"})");
    const auto cfg = parse_config(doc);
    CHECK(cfg == figure_preset("fig1"));
    CHECK(cfg.model == ModelKind::second_order_det);
    CHECK(cfg.params.n == 21);
    CHECK(cfg.grid.dt == 0.01);
    CHECK(cfg.grid.steps == 500);
    const SystemParams p = cfg.system();
    CHECK(oracle::mean(p.nu) == Catch::Approx(128.0));
    CHECK(oracle::pairwise_diameter(p.nu) == Catch::Approx(20e-4));
    CHECK(p.kappa == 0.2);
    CHECK(p.gamma == 4.0);
    CHECK(oracle::pairwise_diameter(cfg.initial_state().theta) == Catch::Approx(0.08));

    const auto f3 = figure_preset("fig3");
    CHECK(f3.model == ModelKind::second_order_stoch);
    CHECK(f3.grid.steps == 5000);
    CHECK(*f3.noise == NoiseSpec::hyperbolic(50.0));
    CHECK(f3.monte_carlo->n_paths == 5000);
    CHECK(f3.monte_carlo->threshold == oracle::pairwise_diameter(f3.initial_state().theta));

    for (const char* name : {"fig2a", "fig2c", "fig4a", "fig4b"}) {
        const auto c = figure_preset(name);
        CHECK(oracle::pairwise_diameter(c.initial_state().theta) == Catch::Approx(4.0 * M_PI / 3.0));
    }
    CHECK_THROWS_AS(figure_preset("fig9"), InvalidArgument);
}

TEST_CASE("preset overrides are merged", "[config]") {
    const auto cfg = parse_config(json::parse(R"({"preset": "fig3", "monte_carlo": {"n_paths": 500}, "seed": 7})"));
    CHECK(cfg.monte_carlo->n_paths == 500);
    CHECK(cfg.monte_carlo->threshold == figure_preset("fig3").monte_carlo->threshold);
    CHECK(cfg.seed == 7u);
    CHECK(mentions(problems_of(json::parse(R"({"preset": "fig1", "grid": {"dtt": 1}})")), "grid.dtt"));
    CHECK(mentions(problems_of(json::parse(R"({"preset": "nope"})")), "preset"));
}

TEST_CASE("round trip through the emitted document", "[config]") {
    for (const auto& name : preset_names()) {
        const auto cfg = figure_preset(name);
        CHECK(parse_config(emit_config(cfg)) == cfg);
        CHECK(parse_config_text(emit_config(cfg).dump()) == cfg);
    }
    auto cfg = parse_config(minimal());
    cfg.noise.reset();
    cfg.scheme = Scheme::rk4;
    cfg.output.format = OutputFormat::json;
    CHECK(parse_config(emit_config(cfg)) == cfg);

    auto table = figure_preset("fig3");
    table.noise = NoiseSpec::table({0.0, 1.0, 2.0}, {0.3, 0.1, 0.0});
    CHECK(parse_config(emit_config(table)) == table);
}

TEST_CASE("schema violations name the offending key", "[config]") {
    SECTION("stochastic model without noise") {
        auto doc = minimal();
        doc["model"] = "second_order_stoch";
        CHECK(mentions(problems_of(doc), "noise"));
    }
    SECTION("negative dt") {
        auto doc = minimal();
        doc["grid"]["dt"] = -0.01;
        CHECK(mentions(problems_of(doc), "grid.dt"));
    }
    SECTION("unknown keys") {
        auto doc = minimal();
        doc["params"]["kapa"] = 1;
        doc["extra"] = true;
        const auto problems = problems_of(doc);
        CHECK(mentions(problems, "params.kapa"));
        CHECK(mentions(problems, "extra"));
    }
    SECTION("missing keys are listed together") {
        auto doc = minimal();
        doc["params"].erase("kappa");
        doc["params"].erase("gamma");
        doc.erase("grid");
        const auto problems = problems_of(doc);
        REQUIRE(mentions(problems, "missing required keys"));
        CHECK(mentions(problems, "params.kappa"));
        CHECK(mentions(problems, "params.gamma"));
        CHECK(mentions(problems, "grid"));
    }
    SECTION("vector length") {
        auto doc = minimal();
        doc["params"]["nu"] = {1, 2};
        CHECK(mentions(problems_of(doc), "params.nu"));
    }
    SECTION("monte carlo requires the stochastic model") {
        auto doc = minimal();
        doc["monte_carlo"] = {{"n_paths", 10}, {"threshold", 0.1}};
        CHECK(mentions(problems_of(doc), "monte_carlo"));
    }
    SECTION("noise only with the stochastic model") {
        auto doc = minimal();
        doc["noise"] = {{"family", "zero"}};
        CHECK(mentions(problems_of(doc), "noise"));
    }
    SECTION("unknown noise family") {
        auto doc = minimal();
        doc["model"] = "second_order_stoch";
        doc["noise"] = {{"family", "pink"}};
        CHECK(mentions(problems_of(doc), "noise.family"));
    }
    SECTION("schema version") {
        auto doc = minimal();
        doc["schema_version"] = 2;
        CHECK(mentions(problems_of(doc), "schema_version"));
    }
    SECTION("diagnostic pair out of range") {
        auto doc = minimal();
        doc["analysis"] = {{"diagnostic_pairs", {{1, 4}}}};
        CHECK(mentions(problems_of(doc), "analysis.diagnostic_pairs[0]"));
    }
    SECTION("malformed text") {
        CHECK_THROWS_AS(parse_config_text("{ not json"), ConfigError);
    }
}

TEST_CASE("horizon is converted to a step count", "[config]") {
    auto doc = minimal();
    doc["grid"] = {{"dt", 0.01}, {"horizon", 5.0}};
    CHECK(parse_config(doc).grid.steps == 500);
    doc["grid"]["steps"] = 500;
    CHECK(mentions(problems_of(doc), "grid"));
}
