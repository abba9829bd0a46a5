#include "winfree/integrate.hpp"

#include "winfree/error.hpp"

#include <cmath>
#include <sstream>

namespace winfree {

namespace {

void require_dt(double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument("time step dt must be positive and finite");
    }
}

[[noreturn]] void abort_at(std::size_t step, const TimeGrid& grid) {
    std::ostringstream msg;
    msg << "non-finite state at step " << step << " (t = " << grid.time(step) << ")";
    throw SimulationAborted(step, msg.str());
}

// In-place Euler–Maruyama update; with sigma_t == 0 this is exactly the
// explicit Euler update.
void em_update(const SystemParams& params, State& s, std::vector<double>& drift, double sigma_t,
               double dt, double dB) {
    const std::size_t n = s.theta.size();
    drift.resize(n);
    detail::frequency_drift_into(params, s.theta, s.omega, drift);
    if (sigma_t != 0.0) {
        const double omega_c = mean(s.omega);
        const double amp = sigma_t * dB;
        for (std::size_t i = 0; i < n; ++i) {
            const double w = s.omega[i];
            s.theta[i] += dt * w;
            s.omega[i] = w + dt * drift[i] + amp * (w - omega_c);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const double w = s.omega[i];
            s.theta[i] += dt * w;
            s.omega[i] = w + dt * drift[i];
        }
    }
}

struct Rk4Workspace {
    State stage;
    std::vector<double> k1w, k2w, k3w, k4w;
    std::vector<double> k1t, k2t, k3t, k4t;
};

void rk4_update(const SystemParams& params, State& s, Rk4Workspace& ws, double dt) {
    const std::size_t n = s.theta.size();
    for (auto* v : {&ws.k1w, &ws.k2w, &ws.k3w, &ws.k4w}) {
        v->resize(n);
    }
    ws.stage.theta.resize(n);
    ws.stage.omega.resize(n);

    ws.k1t = s.omega;
    detail::frequency_drift_into(params, s.theta, s.omega, ws.k1w);

    auto advance = [&](const std::vector<double>& kt, const std::vector<double>& kw, double h) {
        for (std::size_t i = 0; i < n; ++i) {
            ws.stage.theta[i] = s.theta[i] + h * kt[i];
            ws.stage.omega[i] = s.omega[i] + h * kw[i];
        }
    };

    advance(ws.k1t, ws.k1w, 0.5 * dt);
    ws.k2t = ws.stage.omega;
    detail::frequency_drift_into(params, ws.stage.theta, ws.stage.omega, ws.k2w);

    advance(ws.k2t, ws.k2w, 0.5 * dt);
    ws.k3t = ws.stage.omega;
    detail::frequency_drift_into(params, ws.stage.theta, ws.stage.omega, ws.k3w);

    advance(ws.k3t, ws.k3w, dt);
    ws.k4t = ws.stage.omega;
    detail::frequency_drift_into(params, ws.stage.theta, ws.stage.omega, ws.k4w);

    const double w6 = dt / 6.0;
    for (std::size_t i = 0; i < n; ++i) {
        s.theta[i] += w6 * (ws.k1t[i] + 2.0 * ws.k2t[i] + 2.0 * ws.k3t[i] + ws.k4t[i]);
        s.omega[i] += w6 * (ws.k1w[i] + 2.0 * ws.k2w[i] + 2.0 * ws.k3w[i] + ws.k4w[i]);
    }
}

void check_initial(const SystemParams& params, const State& initial, const TimeGrid& grid) {
    params.validate();
    grid.validate();
    detail::check_sizes(params, initial);
    if (!initial.all_finite()) {
        abort_at(0, grid);
    }
}

Trajectory record(const SystemParams& params, const TimeGrid& grid,
                  const std::function<void(const StepObserver&)>& drive) {
    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(grid.points());
    traj.observables.reserve(grid.points());
    drive([&](std::size_t, const State& s) {
        traj.states.push_back(s);
        traj.observables.push_back(observables(s, params));
        return true;
    });
    return traj;
}

}  // namespace

State euler_step(const SystemParams& params, const State& state, double dt) {
    require_dt(dt);
    detail::check_sizes(params, state);
    State next = state;
    std::vector<double> drift;
    em_update(params, next, drift, 0.0, dt, 0.0);
    if (!next.all_finite()) {
        throw SimulationAborted(1, "euler_step produced a non-finite state");
    }
    return next;
}

State rk4_step(const SystemParams& params, const State& state, double dt) {
    require_dt(dt);
    detail::check_sizes(params, state);
    State next = state;
    Rk4Workspace ws;
    rk4_update(params, next, ws, dt);
    if (!next.all_finite()) {
        throw SimulationAborted(1, "rk4_step produced a non-finite state");
    }
    return next;
}

State euler_maruyama_step(const SystemParams& params, const State& state, double sigma_t,
                          double dt, double dB) {
    require_dt(dt);
    detail::check_sizes(params, state);
    if (!(sigma_t >= 0.0)) {
        throw InvalidArgument("euler_maruyama_step: sigma_t must be nonnegative");
    }
    State next = state;
    std::vector<double> drift;
    em_update(params, next, drift, sigma_t, dt, dB);
    if (!next.all_finite()) {
        throw SimulationAborted(1, "euler_maruyama_step produced a non-finite state");
    }
    return next;
}

std::vector<double> first_order_euler_step(const SystemParams& params,
                                           std::span<const double> theta, double dt) {
    require_dt(dt);
    auto v = drift_first_order(params, theta);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = theta[i] + dt * v[i];
    }
    return v;
}

void integrate_deterministic(const SystemParams& params, const State& initial,
                             const TimeGrid& grid, Scheme scheme, const StepObserver& observer) {
    check_initial(params, initial, grid);
    State s = initial;
    if (!observer(0, s)) {
        return;
    }
    std::vector<double> drift;
    Rk4Workspace ws;
    for (std::size_t k = 0; k < grid.steps; ++k) {
        if (scheme == Scheme::euler) {
            em_update(params, s, drift, 0.0, grid.dt, 0.0);
        } else {
            rk4_update(params, s, ws, grid.dt);
        }
        if (!s.all_finite()) {
            abort_at(k + 1, grid);
        }
        if (!observer(k + 1, s)) {
            return;
        }
    }
}

void integrate_stochastic(const SystemParams& params, const State& initial, const TimeGrid& grid,
                          const NoiseSpec& noise, const BrownianPath& path,
                          const StepObserver& observer) {
    check_initial(params, initial, grid);
    noise.validate();
    if (path.steps() != grid.steps) {
        throw InvalidArgument("integrate_stochastic: Brownian path has " +
                              std::to_string(path.steps()) + " increments, grid has " +
                              std::to_string(grid.steps) + " steps");
    }
    State s = initial;
    if (!observer(0, s)) {
        return;
    }
    std::vector<double> drift;
    for (std::size_t k = 0; k < grid.steps; ++k) {
        const double sigma_t = noise(grid.time(k));
        em_update(params, s, drift, sigma_t, grid.dt, path.increments[k]);
        if (!s.all_finite()) {
            abort_at(k + 1, grid);
        }
        if (!observer(k + 1, s)) {
            return;
        }
    }
}

Trajectory simulate_deterministic(const SystemParams& params, const State& initial,
                                  const TimeGrid& grid, Scheme scheme) {
    return record(params, grid, [&](const StepObserver& obs) {
        integrate_deterministic(params, initial, grid, scheme, obs);
    });
}

Trajectory simulate_stochastic(const SystemParams& params, const State& initial,
                               const TimeGrid& grid, const NoiseSpec& noise,
                               const BrownianPath& path) {
    return record(params, grid, [&](const StepObserver& obs) {
        integrate_stochastic(params, initial, grid, noise, path, obs);
    });
}

Trajectory simulate_first_order(const SystemParams& params, std::span<const double> theta0,
                                const TimeGrid& grid) {
    params.validate();
    grid.validate();
    if (theta0.size() != params.n) {
        throw InvalidArgument("simulate_first_order: length mismatch");
    }
    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(grid.points());
    traj.observables.reserve(grid.points());
    State s;
    s.theta.assign(theta0.begin(), theta0.end());
    for (std::size_t k = 0;; ++k) {
        s.omega = drift_first_order(params, s.theta);
        if (!s.all_finite()) {
            abort_at(k, grid);
        }
        traj.states.push_back(s);
        traj.observables.push_back(observables(s, params));
        if (k == grid.steps) {
            break;
        }
        for (std::size_t i = 0; i < params.n; ++i) {
            s.theta[i] += grid.dt * s.omega[i];
        }
    }
    return traj;
}

YProcessPaths simulate_y_process(const NoiseSpec& noise, const BrownianPath& path, double y0,
                                 const TimeGrid& grid) {
    if (!(y0 > 0.0)) {
        throw InvalidArgument("simulate_y_process: y0 must be positive");
    }
    grid.validate();
    noise.validate();
    if (path.steps() != grid.steps) {
        throw InvalidArgument("simulate_y_process: path and grid lengths differ");
    }
    YProcessPaths out;
    out.em.resize(grid.points());
    out.exact.resize(grid.points());
    out.em[0] = y0;
    out.exact[0] = y0;
    double y = y0;
    double integral = 0.0;
    for (std::size_t k = 0; k < grid.steps; ++k) {
        const double sigma = noise(grid.time(k));
        const double dB = path.increments[k];
        y += 0.5 * sigma * sigma * y * grid.dt - sigma * y * dB;
        integral += sigma * dB;
        out.em[k + 1] = y;
        out.exact[k + 1] = y0 * std::exp(-integral);
        if (!std::isfinite(y) || !std::isfinite(out.exact[k + 1])) {
            abort_at(k + 1, grid);
        }
    }
    return out;
}

}  // namespace winfree
