#pragma once

#include "winfree/model.hpp"
#include "winfree/noise.hpp"

#include <string>
#include <variant>
#include <vector>

namespace winfree::theory {

/// β(r) = κ/ν^c cos r (1 + cos r), the periodic damping of the comparison
/// equation in the rescaled time r = θ^c.
[[nodiscard]] double beta(double r, double kappa, double nu_c);

struct BetaIntegrals {
    double total = 0.0;     ///< ∫₀^{2π} β   = κπ/ν^c
    double positive = 0.0;  ///< ∫₀^{2π} β⁺  = (4+π)κ/(2ν^c)
    double negative = 0.0;  ///< ∫₀^{2π} β⁻  = (4-π)κ/(2ν^c)
};

[[nodiscard]] BetaIntegrals beta_integrals(double kappa, double nu_c);

/// Lower and upper multipliers of the unique positive 2π-periodic solution
/// of dx/dr = α - β(r) x: 2παL <= x <= 2παR.
struct ComparisonBounds {
    double big_l = 0.0;
    double big_r = 0.0;
};

/// Throws ComparisonInapplicable when κ = 0 (∫β = 0).
[[nodiscard]] ComparisonBounds comparison_bounds(double kappa, double nu_c);

/// m₀ = max{D(Ω₀), (D(ν) + 2κD)/γ}: bound on the frequency diameter while
/// the phase diameter stays below D.
[[nodiscard]] double det_m0(const SystemParams& params, double d_omega0, double big_d);

/// Affine drift level α_D of the deterministic comparison inequality.
/// Requires ν^c > 2κ.
[[nodiscard]] double det_alpha(const SystemParams& params, double m0, double big_d);

/// c₀ = max{D(Ω₀), (D(ν) + 2κD) exp(‖σ‖₂²/2 + δ)/γ} / cosh δ.
/// Throws InvalidArgument for ‖σ‖₂ = ∞ or δ <= 0.
[[nodiscard]] double stoch_c0(const SystemParams& params, double d_omega0, double big_d,
                              double delta, const NoiseSpec& noise);

/// Stochastic α_D (two-term formula with the 9κ/4γ and 17κ/4γ coefficients).
[[nodiscard]] double stoch_alpha(const SystemParams& params, double c0, double big_d, double delta);

/// 1 - 2 exp(-δ² / (2‖σ‖₂²)). Not clamped: a negative value is a vacuous
/// bound. ‖σ‖₂ = 0 gives 1.
[[nodiscard]] double prob_lower_bound(double delta, double l2_norm);

struct DetConstants {
    double m0 = 0.0;
    double alpha_d = 0.0;
    double big_l = 0.0;
    double big_r = 0.0;
    double int_beta = 0.0;
    double int_beta_plus = 0.0;
    double int_beta_minus = 0.0;
};

struct StochConstants {
    double c0 = 0.0;
    double alpha_d = 0.0;
    double delta = 0.0;
    double big_l = 0.0;
    double big_r = 0.0;
    double sigma_l2 = 0.0;
    double sigma_sup = 0.0;
    double prob_lower_bound = 0.0;
};

/// Required sign of a margin for its condition to hold.
enum class Relation { less, less_equal, greater, greater_equal };

struct Margin {
    std::string label;
    double value = 0.0;
    Relation required = Relation::less_equal;

    [[nodiscard]] bool holds() const;
};

struct ConditionReport {
    std::variant<DetConstants, StochConstants> constants;
    std::vector<Margin> margins;
    bool satisfied = false;

    /// Throws InvalidArgument if no margin carries this label.
    [[nodiscard]] const Margin& margin(const std::string& label) const;
};

/// Deterministic phase-locking conditions. Margins, in order:
///   nu_c_minus_2kappa                 ν^c - 2κ                    > 0
///   gamma_omega_c0_lower              γω^c₀ - (ν^c - 2κ)          >= 0
///   gamma_omega_c0_upper              (ν^c + 2κ) - γω^c₀          >= 0
///   comparison_upper                  2πRα_D - γD                 < 0
///   initial_phase_diameter            D(Θ₀) - D                   < 0
///   initial_r_diameter                D(Ω₀ + γΘ₀) - 2πLα_D        <= 0
/// When ν^c <= 2κ the α_D-dependent margins are +inf.
[[nodiscard]] ConditionReport check_det_theorem(const SystemParams& params, const State& initial,
                                                double big_d);

/// Stochastic phase-locking conditions. Margins, in order:
///   sigma_sup                         ‖σ‖_∞ - sqrt(4κ/γ)          <= 0
///   nu_c_minus_2kappa, gamma_omega_c0_lower, gamma_omega_c0_upper,
///   initial_phase_diameter            (as above)
///   initial_q_diameter                max_ij(ω₀^ij/cosh δ + γθ₀^ij) - 2πLα_D  <= 0
///   comparison_upper                  2πRα_D + c₀ e^δ sinh δ - γD  < 0
/// Throws InvalidArgument when ‖σ‖₂ = ∞.
[[nodiscard]] ConditionReport check_stoch_theorem(const SystemParams& params, const State& initial,
                                                  double big_d, double delta,
                                                  const NoiseSpec& noise);

}  // namespace winfree::theory
