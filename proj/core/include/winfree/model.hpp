#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace winfree {

/// Parameters of the all-to-all Winfree system with inertia.
///
/// The frequency equation reads
///   m dω^i = [-γ ω^i + ν^i - κ I_c(Θ) sin θ^i] dt
/// with the interaction mean I_c(Θ) = (1/N) Σ_j (1 + cos θ^j).
struct SystemParams {
    std::size_t n = 0;
    std::vector<double> nu;
    double kappa = 0.0;
    double gamma = 1.0;
    double inertia = 1.0;
    /// Use κ Σ_j (1 + cos θ^j) instead of κ I_c(Θ), i.e. scale the coupling
    /// by N. This is the literal form of the printed stochastic system.
    bool unnormalized_coupling = false;

    /// Throws InvalidArgument unless n >= 1, nu.size() == n, gamma > 0,
    /// kappa >= 0, inertia > 0 and every value is finite.
    void validate() const;

    /// Coupling actually multiplying I_c(Θ) sin θ^i in the drift.
    [[nodiscard]] double effective_kappa() const noexcept {
        return unnormalized_coupling ? kappa * static_cast<double>(n) : kappa;
    }

    bool operator==(const SystemParams&) const = default;
};

/// Phases are kept unwrapped; nothing is ever reduced mod 2π.
struct State {
    std::vector<double> theta;
    std::vector<double> omega;

    [[nodiscard]] std::size_t size() const noexcept { return theta.size(); }
    [[nodiscard]] bool all_finite() const noexcept;

    bool operator==(const State&) const = default;
};

struct Observables {
    double theta_c = 0.0;
    double omega_c = 0.0;
    double nu_c = 0.0;
    double diameter_theta = 0.0;
    double diameter_omega = 0.0;
    double i_c = 0.0;
};

struct SecondOrderDrift {
    std::vector<double> phase_velocity;
    std::vector<double> frequency_velocity;
};

/// Rescale to unit inertia: γ/m, ν/m, κ/m.
[[nodiscard]] SystemParams normalize_inertia(const SystemParams& params);

[[nodiscard]] double mean(std::span<const double> x);

/// D(x) = max_{i,j} |x^i - x^j|, computed as max - min.
[[nodiscard]] double diameter(std::span<const double> x);

/// I_c(Θ) = (1/N) Σ (1 + cos θ^i), always in [0, 2].
[[nodiscard]] double interaction_mean(std::span<const double> theta);

/// Classical first-order Winfree vector field ν^i - κ I_c(Θ) sin θ^i.
[[nodiscard]] std::vector<double> drift_first_order(const SystemParams& params,
                                                    std::span<const double> theta);

[[nodiscard]] SecondOrderDrift drift_second_order(const SystemParams& params, const State& state);

/// Multiplicative common-noise amplitude σ_t (ω^i - ω^c).
[[nodiscard]] std::vector<double> diffusion_coefficient(const State& state, double sigma_t);

[[nodiscard]] Observables observables(const State& state, const SystemParams& params);

namespace detail {

// Allocation-free kernel shared by every stepper so that the Euler and
// Euler–Maruyama paths stay bit-identical when σ = 0.
void frequency_drift_into(const SystemParams& params, std::span<const double> theta,
                          std::span<const double> omega, std::span<double> out);

void check_sizes(const SystemParams& params, const State& state);

}  // namespace detail

}  // namespace winfree
