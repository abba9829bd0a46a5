#include "winfree/experiments.hpp"

#include "winfree/error.hpp"
#include "winfree/theory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace winfree {

RotationEstimate rotation_numbers(const Trajectory& traj) {
    const TimeGrid& grid = traj.grid;
    if (traj.states.size() != grid.points() || grid.steps < 2) {
        throw InvalidArgument("rotation_numbers: trajectory needs at least two steps");
    }
    const double t_end = grid.end();
    const std::size_t mid = grid.steps / 2;
    const double t_mid = grid.time(mid);
    if (!(t_end > 0.0) || !(t_end > t_mid)) {
        throw InvalidArgument("rotation_numbers: zero-length horizon");
    }
    const State& last = traj.states.back();
    const State& half = traj.states[mid];
    RotationEstimate est;
    est.per_oscillator.resize(last.size());
    est.windowed.resize(last.size());
    for (std::size_t i = 0; i < last.size(); ++i) {
        est.per_oscillator[i] = last.theta[i] / t_end;
        est.windowed[i] = (last.theta[i] - half.theta[i]) / (t_end - t_mid);
    }
    est.spread = diameter(est.windowed);
    return est;
}

ExitReport first_exit(const Trajectory& traj, double threshold) {
    if (!(threshold > 0.0)) {
        throw InvalidArgument("first_exit: threshold must be positive");
    }
    ExitReport rep;
    rep.threshold = threshold;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        if (diameter(traj.states[k].theta) > threshold) {
            rep.exit_step = k;
            rep.exited = true;
            break;
        }
    }
    return rep;
}

std::vector<DiagnosticPoint> diagnostic_series(const Trajectory& traj, const SystemParams& params,
                                               std::size_t i, std::size_t j,
                                               std::optional<std::span<const double>> y_path) {
    if (i >= params.n || j >= params.n) {
        throw InvalidArgument("diagnostic_series: oscillator index out of range");
    }
    if (y_path && y_path->size() != traj.states.size()) {
        throw InvalidArgument("diagnostic_series: Y path is not aligned with the trajectory grid");
    }
    const double gamma = normalize_inertia(params).gamma;
    std::vector<DiagnosticPoint> out(traj.states.size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const State& s = traj.states[k];
        const double w = s.omega[i] - s.omega[j];
        const double th = s.theta[i] - s.theta[j];
        out[k].r = w + gamma * th;
        if (y_path) {
            out[k].q = (*y_path)[k] * w + gamma * th;
        }
    }
    return out;
}

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (trials == 0 || successes > trials) {
        throw InvalidArgument("wilson_interval: need 0 <= successes <= trials, trials > 0");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    // At p = 0 or 1 one end equals p exactly in real arithmetic; keep p
    // inside the interval despite rounding.
    return {std::clamp(centre - half, 0.0, p), std::clamp(centre + half, p, 1.0)};
}

namespace {

struct PathOutcome {
    bool bounded = false;
    bool aborted = false;
    bool in_a_delta = false;
    double peak = 0.0;
};

PathOutcome run_path(const SystemParams& params, const State& initial, const TimeGrid& grid,
                     const NoiseSpec& noise, const MonteCarloOptions& opt, std::size_t index) {
    const BrownianPath path = generate_brownian(opt.master_seed, grid, index);
    PathOutcome out;
    if (opt.delta) {
        double integral = 0.0;
        double sup = 0.0;
        for (std::size_t k = 0; k < grid.steps; ++k) {
            integral += noise(grid.time(k)) * path.increments[k];
            sup = std::max(sup, std::abs(integral));
        }
        out.in_a_delta = sup < *opt.delta;
    }
    double peak = 0.0;
    bool exited = false;
    try {
        integrate_stochastic(params, initial, grid, noise, path,
                             [&](std::size_t, const State& s) {
                                 const double d = diameter(s.theta);
                                 peak = std::max(peak, d);
                                 if (d > opt.threshold) {
                                     exited = true;
                                     return false;
                                 }
                                 return true;
                             });
    } catch (const SimulationAborted&) {
        out.aborted = true;
        out.peak = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.bounded = !exited;
    out.peak = peak;
    return out;
}

}  // namespace

MonteCarloResult monte_carlo_locking(const SystemParams& params, const State& initial,
                                     const TimeGrid& grid, const NoiseSpec& noise,
                                     const MonteCarloOptions& options) {
    if (options.n_paths < 1) {
        throw InvalidArgument("monte_carlo_locking: n_paths must be >= 1");
    }
    if (!(options.threshold > 0.0)) {
        throw InvalidArgument("monte_carlo_locking: threshold must be positive");
    }
    params.validate();
    grid.validate();
    noise.validate();
    detail::check_sizes(params, initial);

    std::optional<double> bound;
    if (options.delta) {
        const NoiseNorms norms = noise_norms(noise);
        if (norms.l2_finite()) {
            bound = theory::prob_lower_bound(*options.delta, norms.l2);
        }
    }

    std::vector<PathOutcome> outcomes(options.n_paths);
    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, options.n_paths);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t k = next++; k < options.n_paths; k = next++) {
                outcomes[k] = run_path(params, initial, grid, noise, options, k);
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            next = options.n_paths;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Aggregate in path-index order.
    MonteCarloResult res;
    res.n_paths = options.n_paths;
    res.master_seed = options.master_seed;
    res.theoretical_bound = bound;
    res.peak_diameter.reserve(options.n_paths);
    std::size_t in_a_delta = 0;
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
        const PathOutcome& o = outcomes[k];
        res.n_bounded += o.bounded ? 1 : 0;
        in_a_delta += o.in_a_delta ? 1 : 0;
        if (o.aborted) {
            res.aborted_paths.push_back(k);
        }
        res.peak_diameter.push_back(o.peak);
    }
    if (options.delta) {
        res.n_in_a_delta = in_a_delta;
    }
    res.empirical_prob = static_cast<double>(res.n_bounded) / static_cast<double>(res.n_paths);
    res.wilson_ci_95 = wilson_interval(res.n_bounded, res.n_paths);
    return res;
}

}  // namespace winfree
