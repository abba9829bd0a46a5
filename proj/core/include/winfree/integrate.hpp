#pragma once

#include "winfree/model.hpp"
#include "winfree/noise.hpp"
#include "winfree/random.hpp"
#include "winfree/time_grid.hpp"

#include <functional>
#include <vector>

namespace winfree {

enum class Scheme { euler, rk4 };

struct Trajectory {
    TimeGrid grid;
    std::vector<State> states;
    std::vector<Observables> observables;
};

/// Called once per grid point (k = 0..steps) with the state at t_k. Returning
/// false stops the integration early.
using StepObserver = std::function<bool(std::size_t k, const State& state)>;

/// Explicit Euler for the second-order system; the drift is evaluated once
/// at the pre-step state. Only dt > 0 and sizes are checked, so callers may
/// pass γ = 0 for testing.
[[nodiscard]] State euler_step(const SystemParams& params, const State& state, double dt);

/// Classical four-stage Runge–Kutta. Reference integrator for convergence
/// studies.
[[nodiscard]] State rk4_step(const SystemParams& params, const State& state, double dt);

/// One Euler–Maruyama step with a common scalar increment dB:
///   θ ← θ + dt ω
///   ω^i ← ω^i + dt f^i(Θ, Ω) + σ_t (ω^i - ω^c) dB
/// with every coefficient taken at the pre-step state.
[[nodiscard]] State euler_maruyama_step(const SystemParams& params, const State& state,
                                        double sigma_t, double dt, double dB);

/// Explicit Euler for the first-order model dθ^i = (ν^i - κ I_c sin θ^i) dt.
[[nodiscard]] std::vector<double> first_order_euler_step(const SystemParams& params,
                                                         std::span<const double> theta, double dt);

/// Stream the deterministic second-order solution through `observer`.
/// Throws SimulationAborted at the first non-finite state.
void integrate_deterministic(const SystemParams& params, const State& initial,
                             const TimeGrid& grid, Scheme scheme, const StepObserver& observer);

/// Stream an Euler–Maruyama path; σ is sampled at the left end of each step.
void integrate_stochastic(const SystemParams& params, const State& initial, const TimeGrid& grid,
                          const NoiseSpec& noise, const BrownianPath& path,
                          const StepObserver& observer);

[[nodiscard]] Trajectory simulate_deterministic(const SystemParams& params, const State& initial,
                                                const TimeGrid& grid, Scheme scheme = Scheme::euler);

[[nodiscard]] Trajectory simulate_stochastic(const SystemParams& params, const State& initial,
                                             const TimeGrid& grid, const NoiseSpec& noise,
                                             const BrownianPath& path);

/// First-order model. The stored omega is the instantaneous phase velocity.
[[nodiscard]] Trajectory simulate_first_order(const SystemParams& params,
                                              std::span<const double> theta0, const TimeGrid& grid);

struct YProcessPaths {
    std::vector<double> em;
    std::vector<double> exact;
};

/// The auxiliary process dY = σ²/2 Y dt - σ Y dB, Y_0 = y0, integrated by
/// Euler–Maruyama and evaluated through Y_t = Y_0 exp(-Σ σ(t_j) dB_j) with the
/// same increments. Both sequences have grid.steps + 1 entries.
[[nodiscard]] YProcessPaths simulate_y_process(const NoiseSpec& noise, const BrownianPath& path,
                                               double y0, const TimeGrid& grid);

}  // namespace winfree
