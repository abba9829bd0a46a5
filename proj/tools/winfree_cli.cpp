#include "winfree/config.hpp"
#include "winfree/error.hpp"
#include "winfree/run.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit : int { ok = 0, usage = 1, aborted = 2, io = 3 };

// A config argument is a path to a JSON document, or a preset name when no
// such file exists.
winfree::ExperimentConfig load(const std::string& arg) {
    namespace fs = std::filesystem;
    if (!fs::exists(arg)) {
        const auto& names = winfree::preset_names();
        if (std::find(names.begin(), names.end(), arg) != names.end()) {
            return winfree::figure_preset(arg);
        }
        throw std::runtime_error("no such config file or preset: " + arg);
    }
    std::ifstream in(arg, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    if (!in) {
        throw std::runtime_error("cannot read " + arg);
    }
    return winfree::parse_config_text(text.str());
}

struct Common {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::size_t threads = 0;
    bool check_only = false;

    void attach(CLI::App* app) {
        app->add_option("--seed", seed, "Seed for the Brownian paths (overrides config and WINFREE_SEED)");
        app->add_option("--out", out, "Output directory (overrides output.dir)");
        app->add_option("--format", format, "Trajectory format")->check(CLI::IsMember({"csv", "json"}));
        app->add_option("--threads", threads, "Monte Carlo worker threads (0 = all cores)");
        app->add_flag("--check-only", check_only, "Only evaluate the theorem conditions");
    }

    [[nodiscard]] winfree::RunOptions options() const {
        winfree::RunOptions o;
        o.seed = seed;
        if (out) o.out_dir = *out;
        if (format) o.format = *format == "csv" ? winfree::OutputFormat::csv : winfree::OutputFormat::json;
        o.threads = threads;
        o.check_only = check_only;
        o.env_seed = std::getenv("WINFREE_SEED");
        return o;
    }
};

void print_report(const winfree::theory::ConditionReport& report) {
    for (const auto& m : report.margins) {
        std::cout << "  " << m.label << " = " << winfree::format_double(m.value)
                  << (m.holds() ? "  ok" : "  violated") << "\n";
    }
    std::cout << "conditions " << (report.satisfied ? "satisfied" : "not satisfied") << "\n";
}

void print_files(const winfree::RunArtifacts& art) {
    for (const auto& f : art.files) {
        std::cout << "wrote " << f.string() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Second-order Winfree oscillator simulations and phase-locking checks"};
    app.require_subcommand(1);

    std::string config_arg;
    Common common;

    auto* simulate = app.add_subcommand("simulate", "Integrate one trajectory and write CSV/JSON, analysis and plot script");
    simulate->add_option("config", config_arg, "Config file or preset name")->required();
    common.attach(simulate);

    Common check_common;
    auto* check = app.add_subcommand("check", "Evaluate the phase-locking conditions and write report.json");
    check->add_option("config", config_arg, "Config file or preset name")->required();
    check_common.attach(check);

    Common mc_common;
    auto* montecarlo = app.add_subcommand("montecarlo", "Estimate the probability of a bounded phase diameter");
    montecarlo->add_option("config", config_arg, "Config file or preset name")->required();
    mc_common.attach(montecarlo);

    std::string preset_name;
    bool emit = false;
    auto* preset = app.add_subcommand("preset", "List presets or print one as a config document");
    preset->add_option("name", preset_name, "Preset name");
    preset->add_flag("--emit-config", emit, "Print the full config document");

    auto* version = app.add_subcommand("version", "Print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*version) {
            std::cout << "winfree " << kVersion << "\n";
            return ok;
        }
        if (*preset) {
            if (preset_name.empty()) {
                for (const auto& n : winfree::preset_names()) std::cout << n << "\n";
                return ok;
            }
            const auto cfg = winfree::figure_preset(preset_name);
            if (emit) {
                std::cout << winfree::emit_config(cfg).dump(2) << "\n";
            } else {
                std::cout << preset_name << ": model " << winfree::to_string(cfg.model) << ", N = "
                          << cfg.params.n << ", steps = " << cfg.grid.steps << ", dt = " << cfg.grid.dt
                          << "\n(use --emit-config for the full document)\n";
            }
            return ok;
        }

        const auto cfg = load(config_arg);
        if (*check) {
            const auto art = winfree::run_check(cfg, check_common.options());
            print_report(*art.report);
            print_files(art);
            return ok;
        }
        if (*simulate) {
            const auto art = winfree::run_simulate(cfg, common.options());
            if (art.report) print_report(*art.report);
            print_files(art);
            return ok;
        }
        if (*montecarlo) {
            const auto art = winfree::run_montecarlo(cfg, mc_common.options());
            if (art.report) print_report(*art.report);
            if (art.monte_carlo) {
                const auto& r = *art.monte_carlo;
                std::cout << "bounded " << r.n_bounded << " / " << r.n_paths << "  p = "
                          << winfree::format_double(r.empirical_prob) << "  95% CI ["
                          << winfree::format_double(r.wilson_ci_95.low) << ", "
                          << winfree::format_double(r.wilson_ci_95.high) << "]\n";
                if (r.theoretical_bound) {
                    std::cout << "theoretical lower bound " << winfree::format_double(*r.theoretical_bound) << "\n";
                }
            }
            print_files(art);
            return ok;
        }
    } catch (const winfree::SimulationAborted& e) {
        std::cerr << "error: simulation aborted at step " << e.step() << ": " << e.what() << "\n";
        return aborted;
    } catch (const winfree::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const winfree::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io;
    }
    return ok;
}
