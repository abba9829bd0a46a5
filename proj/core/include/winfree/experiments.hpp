#pragma once

#include "winfree/integrate.hpp"
#include "winfree/model.hpp"
#include "winfree/noise.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace winfree {

/// Finite-horizon estimates of ρ^i = lim θ^i_t / t.
struct RotationEstimate {
    /// θ^i(T) / T.
    std::vector<double> per_oscillator;
    /// (θ^i(T) - θ^i(T/2)) / (T/2); discards the initial transient.
    std::vector<double> windowed;
    /// max - min of `windowed`.
    double spread = 0.0;
};

[[nodiscard]] RotationEstimate rotation_numbers(const Trajectory& traj);

/// Discrete stopping time T = inf{k : D(Θ_k) > threshold}.
struct ExitReport {
    double threshold = 0.0;
    std::optional<std::size_t> exit_step;
    bool exited = false;
};

[[nodiscard]] ExitReport first_exit(const Trajectory& traj, double threshold);

struct DiagnosticPoint {
    /// R^{ij} = ω^{ij} + γ θ^{ij}.
    double r = 0.0;
    /// Q^{ij} = Y ω^{ij} + γ θ^{ij}, present when a Y path is supplied.
    std::optional<double> q;
};

/// Per-grid-point comparison quantities for the pair (i, j), 0-based.
[[nodiscard]] std::vector<DiagnosticPoint> diagnostic_series(
    const Trajectory& traj, const SystemParams& params, std::size_t i, std::size_t j,
    std::optional<std::span<const double>> y_path = std::nullopt);

/// Wilson score interval for a binomial proportion.
struct Interval {
    double low = 0.0;
    double high = 1.0;
};

[[nodiscard]] Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct MonteCarloOptions {
    std::size_t n_paths = 1;
    std::uint64_t master_seed = 0;
    /// A path counts as bounded when D(Θ_k) <= threshold at every grid point.
    double threshold = 0.0;
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    std::size_t threads = 0;
    /// When set, the theoretical bound 1 - 2exp(-δ²/2‖σ‖₂²) is attached and
    /// the event sup_t |∫σ dB| < δ is counted per path.
    std::optional<double> delta;
};

struct MonteCarloResult {
    std::size_t n_paths = 0;
    std::size_t n_bounded = 0;
    double empirical_prob = 0.0;
    Interval wilson_ci_95;
    std::optional<double> theoretical_bound;
    std::uint64_t master_seed = 0;
    /// Paths whose integration hit a non-finite state; counted as exited.
    std::vector<std::size_t> aborted_paths;
    /// Per path: sup_k D(Θ_k) over the horizon for bounded paths, or the
    /// diameter at the first exit step for exited ones (integration stops
    /// there). NaN for aborted paths.
    std::vector<double> peak_diameter;
    /// Number of paths on which sup_k |Σ_{j<k} σ(t_j) dB_j| < δ, when δ is set.
    std::optional<std::size_t> n_in_a_delta;
};

/// Path k is driven by generate_brownian(master_seed, grid, k). Results do
/// not depend on the thread count.
[[nodiscard]] MonteCarloResult monte_carlo_locking(const SystemParams& params, const State& initial,
                                                   const TimeGrid& grid, const NoiseSpec& noise,
                                                   const MonteCarloOptions& options);

}  // namespace winfree
