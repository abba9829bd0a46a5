#include "winfree/model.hpp"

#include "winfree/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace winfree {

namespace {

bool finite(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace

void SystemParams::validate() const {
    if (n < 1) {
        throw InvalidArgument("SystemParams: n must be >= 1");
    }
    if (nu.size() != n) {
        throw InvalidArgument("SystemParams: nu has " + std::to_string(nu.size()) +
                              " entries, expected " + std::to_string(n));
    }
    if (!finite(nu)) {
        throw InvalidArgument("SystemParams: nu must be finite");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidArgument("SystemParams: gamma must be positive");
    }
    if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
        throw InvalidArgument("SystemParams: kappa must be nonnegative");
    }
    if (!(inertia > 0.0) || !std::isfinite(inertia)) {
        throw InvalidArgument("SystemParams: inertia must be positive");
    }
}

bool State::all_finite() const noexcept { return finite(theta) && finite(omega); }

SystemParams normalize_inertia(const SystemParams& params) {
    if (!(params.inertia > 0.0)) {
        throw InvalidArgument("normalize_inertia: inertia must be positive");
    }
    params.validate();
    if (params.inertia == 1.0) {
        return params;
    }
    SystemParams out = params;
    const double m = params.inertia;
    out.gamma = params.gamma / m;
    out.kappa = params.kappa / m;
    for (double& v : out.nu) {
        v /= m;
    }
    out.inertia = 1.0;
    return out;
}

double mean(std::span<const double> x) {
    if (x.empty()) {
        throw InvalidArgument("mean: empty vector");
    }
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    return sum / static_cast<double>(x.size());
}

double diameter(std::span<const double> x) {
    if (x.empty()) {
        throw InvalidArgument("diameter: empty vector");
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

double interaction_mean(std::span<const double> theta) {
    if (theta.empty()) {
        throw InvalidArgument("interaction_mean: empty vector");
    }
    double sum = 0.0;
    for (double v : theta) {
        sum += 1.0 + std::cos(v);
    }
    return sum / static_cast<double>(theta.size());
}

std::vector<double> drift_first_order(const SystemParams& params, std::span<const double> theta) {
    if (theta.size() != params.n || params.nu.size() != params.n) {
        throw InvalidArgument("drift_first_order: length mismatch");
    }
    const double coupling = params.effective_kappa() * interaction_mean(theta);
    std::vector<double> out(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        out[i] = params.nu[i] - coupling * std::sin(theta[i]);
    }
    return out;
}

namespace detail {

void check_sizes(const SystemParams& params, const State& state) {
    if (state.theta.size() != params.n || state.omega.size() != params.n ||
        params.nu.size() != params.n) {
        throw InvalidArgument("state length does not match oscillator count " +
                              std::to_string(params.n));
    }
}

void frequency_drift_into(const SystemParams& params, std::span<const double> theta,
                          std::span<const double> omega, std::span<double> out) {
    const std::size_t n = theta.size();
    double ic = 0.0;
    for (double v : theta) {
        ic += 1.0 + std::cos(v);
    }
    ic /= static_cast<double>(n);
    const double coupling = params.effective_kappa() * ic;
    const double m = params.inertia;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (-params.gamma * omega[i] + params.nu[i] - coupling * std::sin(theta[i])) / m;
    }
}

}  // namespace detail

SecondOrderDrift drift_second_order(const SystemParams& params, const State& state) {
    detail::check_sizes(params, state);
    SecondOrderDrift out;
    out.phase_velocity = state.omega;
    out.frequency_velocity.resize(params.n);
    detail::frequency_drift_into(params, state.theta, state.omega, out.frequency_velocity);
    return out;
}

std::vector<double> diffusion_coefficient(const State& state, double sigma_t) {
    if (!(sigma_t >= 0.0)) {
        throw InvalidArgument("diffusion_coefficient: sigma_t must be nonnegative");
    }
    const double omega_c = mean(state.omega);
    std::vector<double> out(state.omega.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = sigma_t * (state.omega[i] - omega_c);
    }
    return out;
}

Observables observables(const State& state, const SystemParams& params) {
    detail::check_sizes(params, state);
    Observables o;
    o.theta_c = mean(state.theta);
    o.omega_c = mean(state.omega);
    o.nu_c = mean(params.nu);
    o.diameter_theta = diameter(state.theta);
    o.diameter_omega = diameter(state.omega);
    o.i_c = interaction_mean(state.theta);
    return o;
}

}  // namespace winfree
