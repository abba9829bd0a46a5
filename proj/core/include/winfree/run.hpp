#pragma once

#include "winfree/config.hpp"
#include "winfree/experiments.hpp"
#include "winfree/integrate.hpp"
#include "winfree/theory.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace winfree {

/// Shortest text with 17 significant digits in scientific notation, e.g.
/// "1.0000000000000000e-02". Locale independent.
[[nodiscard]] std::string format_double(double value);

/// Seed priority: command line, then the config document, then the
/// WINFREE_SEED environment value, then 0. Throws InvalidArgument when the
/// environment value is not an unsigned 64-bit integer.
[[nodiscard]] std::uint64_t resolve_seed(std::optional<std::uint64_t> cli,
                                         std::optional<std::uint64_t> config, const char* env_value);

/// Columns: t, theta_1..theta_N, omega_1..omega_N, diameter_theta,
/// diameter_omega, theta_c, omega_c.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
[[nodiscard]] nlohmann::json trajectory_json(const Trajectory& traj);

/// Evaluate the theorem conditions for the config's model. Requires a
/// `theorem` block (and `theorem.delta` for the stochastic model).
[[nodiscard]] theory::ConditionReport check_config(const ExperimentConfig& config);
[[nodiscard]] nlohmann::json report_json(const ExperimentConfig& config,
                                         const theory::ConditionReport& report);

[[nodiscard]] nlohmann::json montecarlo_json(const ExperimentConfig& config, const MonteCarloResult& result);

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<std::filesystem::path> out_dir;
    std::optional<OutputFormat> format;
    /// Monte Carlo workers; 0 selects all available cores.
    std::size_t threads = 0;
    bool check_only = false;
    /// Value of WINFREE_SEED, if set.
    const char* env_seed = nullptr;
};

struct RunArtifacts {
    std::filesystem::path dir;
    std::vector<std::filesystem::path> files;
    std::optional<theory::ConditionReport> report;
    std::optional<Trajectory> trajectory;
    std::optional<MonteCarloResult> monte_carlo;
};

/// `check`: writes report.json.
RunArtifacts run_check(const ExperimentConfig& config, const RunOptions& options);

/// `simulate`: integrates one path and writes trajectory.{csv,json},
/// analysis.json, report.json (when a theorem block is present) and
/// plot.gp. With check_only set, behaves as run_check. Throws
/// SimulationAborted on a non-finite state.
RunArtifacts run_simulate(const ExperimentConfig& config, const RunOptions& options);

/// `montecarlo`: writes montecarlo.json, sample_paths.csv, report.json
/// (when a theorem block is present) and plot.gp.
RunArtifacts run_montecarlo(const ExperimentConfig& config, const RunOptions& options);

}  // namespace winfree
