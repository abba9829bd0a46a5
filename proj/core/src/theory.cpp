#include "winfree/theory.hpp"

#include "winfree/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace winfree::theory {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nu_c(double nu_c) {
    if (!(nu_c > 0.0)) {
        throw InvalidArgument("mean natural frequency nu_c must be positive");
    }
}

// Unit-inertia parameters with the coupling that actually enters the drift.
struct Reduced {
    double kappa;
    double gamma;
    double nu_c;
    double d_nu;
};

Reduced reduce(const SystemParams& params) {
    const SystemParams p = normalize_inertia(params);
    return {p.effective_kappa(), p.gamma, mean(p.nu), diameter(p.nu)};
}

std::vector<double> affine(std::span<const double> omega, double omega_scale,
                           std::span<const double> theta, double theta_scale) {
    std::vector<double> out(omega.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = omega_scale * omega[i] + theta_scale * theta[i];
    }
    return out;
}

bool all_hold(const std::vector<Margin>& margins) {
    return std::all_of(margins.begin(), margins.end(), [](const Margin& m) { return m.holds(); });
}

}  // namespace

double beta(double r, double kappa, double nu_c) {
    require_nu_c(nu_c);
    const double c = std::cos(r);
    return kappa / nu_c * c * (1.0 + c);
}

BetaIntegrals beta_integrals(double kappa, double nu_c) {
    require_nu_c(nu_c);
    if (!(kappa >= 0.0)) {
        throw InvalidArgument("beta_integrals: kappa must be nonnegative");
    }
    const double s = kappa / nu_c;
    return {kPi * s, (4.0 + kPi) * s / 2.0, (4.0 - kPi) * s / 2.0};
}

ComparisonBounds comparison_bounds(double kappa, double nu_c) {
    require_nu_c(nu_c);
    if (kappa == 0.0) {
        throw ComparisonInapplicable(
            "comparison bounds undefined at kappa = 0: the integral of beta over a period vanishes");
    }
    if (!(kappa > 0.0)) {
        throw InvalidArgument("comparison_bounds: kappa must be positive");
    }
    const BetaIntegrals ints = beta_integrals(kappa, nu_c);
    // 1 - exp(-x) without cancellation for small coupling.
    const double denom = -std::expm1(-ints.total);
    return {std::exp(-ints.positive) / denom, std::exp(ints.negative) / denom};
}

double det_m0(const SystemParams& params, double d_omega0, double big_d) {
    if (!(big_d > 0.0)) {
        throw InvalidArgument("det_m0: D must be positive");
    }
    if (!(d_omega0 >= 0.0)) {
        throw InvalidArgument("det_m0: D(Omega_0) must be nonnegative");
    }
    const Reduced p = reduce(params);
    return std::max(d_omega0, (p.d_nu + 2.0 * p.kappa * big_d) / p.gamma);
}

double det_alpha(const SystemParams& params, double m0, double big_d) {
    const Reduced p = reduce(params);
    require_nu_c(p.nu_c);
    if (!(p.nu_c > 2.0 * p.kappa)) {
        throw InvalidArgument("det_alpha: requires nu_c > 2 kappa");
    }
    const double g = p.gamma;
    const double k = p.kappa;
    const double d = big_d;
    const double first = (g * p.d_nu + 2.0 * k * m0 + 3.0 * g * k * d * d) / p.nu_c;
    const double second = (2.0 * g * g * k * p.d_nu + 8.0 * g * k * k * m0 +
                           6.0 * g * g * k * k * d * d + 4.0 * g * g * k * k * d) /
                          (p.nu_c * (p.nu_c - 2.0 * k));
    return first + second;
}

double stoch_c0(const SystemParams& params, double d_omega0, double big_d, double delta,
                const NoiseSpec& noise) {
    if (!(delta > 0.0)) {
        throw InvalidArgument("stoch_c0: delta must be positive");
    }
    if (!(big_d > 0.0)) {
        throw InvalidArgument("stoch_c0: D must be positive");
    }
    const NoiseNorms norms = noise_norms(noise);
    if (!norms.l2_finite()) {
        throw InvalidArgument("stoch_c0: noise intensity is not square integrable (||sigma||_2 = inf)");
    }
    const Reduced p = reduce(params);
    const double grown =
        (p.d_nu + 2.0 * p.kappa * big_d) * std::exp(norms.l2 * norms.l2 / 2.0 + delta) / p.gamma;
    return std::max(d_omega0, grown) / std::cosh(delta);
}

double stoch_alpha(const SystemParams& params, double c0, double big_d, double delta) {
    const Reduced p = reduce(params);
    require_nu_c(p.nu_c);
    if (!(p.nu_c > 2.0 * p.kappa)) {
        throw InvalidArgument("stoch_alpha: requires nu_c > 2 kappa");
    }
    const double g = p.gamma;
    const double k = p.kappa;
    const double d = big_d;
    const double e = std::exp(delta);
    const double ch = std::cosh(delta);
    const double common = g * c0 * e * std::sinh(delta) + e * p.d_nu / ch + 3.0 * k * d * d;
    const double inner1 = common + 2.0 * k * d * std::tanh(delta) + 9.0 * k / (4.0 * g) * c0;
    const double inner2 = common + 2.0 * k * d * e / ch + 17.0 * k / (4.0 * g) * c0;
    return g / p.nu_c * inner1 + 2.0 * g * k / (p.nu_c * (p.nu_c - 2.0 * k)) * inner2;
}

double prob_lower_bound(double delta, double l2_norm) {
    if (!(delta > 0.0)) {
        throw InvalidArgument("prob_lower_bound: delta must be positive");
    }
    if (!(l2_norm >= 0.0) || !std::isfinite(l2_norm)) {
        throw InvalidArgument("prob_lower_bound: ||sigma||_2 must be finite and nonnegative");
    }
    if (l2_norm == 0.0) {
        return 1.0;
    }
    return 1.0 - 2.0 * std::exp(-delta * delta / (2.0 * l2_norm * l2_norm));
}

bool Margin::holds() const {
    switch (required) {
        case Relation::less:
            return value < 0.0;
        case Relation::less_equal:
            return value <= 0.0;
        case Relation::greater:
            return value > 0.0;
        case Relation::greater_equal:
            return value >= 0.0;
    }
    return false;
}

const Margin& ConditionReport::margin(const std::string& label) const {
    const auto it = std::find_if(margins.begin(), margins.end(),
                                 [&](const Margin& m) { return m.label == label; });
    if (it == margins.end()) {
        throw InvalidArgument("ConditionReport: no margin named " + label);
    }
    return *it;
}

ConditionReport check_det_theorem(const SystemParams& params, const State& initial, double big_d) {
    detail::check_sizes(params, initial);
    const Reduced p = reduce(params);
    const double omega_c0 = mean(initial.omega);

    DetConstants c;
    const auto ints = beta_integrals(p.kappa, p.nu_c);
    c.int_beta = ints.total;
    c.int_beta_plus = ints.positive;
    c.int_beta_minus = ints.negative;
    const auto bounds = comparison_bounds(p.kappa, p.nu_c);
    c.big_l = bounds.big_l;
    c.big_r = bounds.big_r;
    c.m0 = det_m0(params, diameter(initial.omega), big_d);
    c.alpha_d = p.nu_c > 2.0 * p.kappa ? det_alpha(params, c.m0, big_d) : kInf;

    const double r0 = diameter(affine(initial.omega, 1.0, initial.theta, p.gamma));
    const double two_pi = 2.0 * kPi;

    ConditionReport report;
    report.margins = {
        {"nu_c_minus_2kappa", p.nu_c - 2.0 * p.kappa, Relation::greater},
        {"gamma_omega_c0_lower", p.gamma * omega_c0 - (p.nu_c - 2.0 * p.kappa), Relation::greater_equal},
        {"gamma_omega_c0_upper", (p.nu_c + 2.0 * p.kappa) - p.gamma * omega_c0, Relation::greater_equal},
        {"comparison_upper", two_pi * c.big_r * c.alpha_d - p.gamma * big_d, Relation::less},
        {"initial_phase_diameter", diameter(initial.theta) - big_d, Relation::less},
        {"initial_r_diameter", std::isfinite(c.alpha_d) ? r0 - two_pi * c.big_l * c.alpha_d : kInf,
         Relation::less_equal},
    };
    report.constants = c;
    report.satisfied = all_hold(report.margins);
    return report;
}

ConditionReport check_stoch_theorem(const SystemParams& params, const State& initial, double big_d,
                                    double delta, const NoiseSpec& noise) {
    detail::check_sizes(params, initial);
    const NoiseNorms norms = noise_norms(noise);
    if (!norms.l2_finite()) {
        throw InvalidArgument("check_stoch_theorem: ||sigma||_2 is infinite for noise family " +
                              noise.family_name());
    }
    const Reduced p = reduce(params);
    const double omega_c0 = mean(initial.omega);

    StochConstants c;
    c.delta = delta;
    c.sigma_l2 = norms.l2;
    c.sigma_sup = norms.sup;
    const auto bounds = comparison_bounds(p.kappa, p.nu_c);
    c.big_l = bounds.big_l;
    c.big_r = bounds.big_r;
    c.c0 = stoch_c0(params, diameter(initial.omega), big_d, delta, noise);
    c.alpha_d = p.nu_c > 2.0 * p.kappa ? stoch_alpha(params, c.c0, big_d, delta) : kInf;
    c.prob_lower_bound = prob_lower_bound(delta, norms.l2);

    const double q0 = diameter(affine(initial.omega, 1.0 / std::cosh(delta), initial.theta, p.gamma));
    const double two_pi = 2.0 * kPi;
    const double y_slack = c.c0 * std::exp(delta) * std::sinh(delta);

    ConditionReport report;
    report.margins = {
        {"sigma_sup", norms.sup - std::sqrt(4.0 * p.kappa / p.gamma), Relation::less_equal},
        {"nu_c_minus_2kappa", p.nu_c - 2.0 * p.kappa, Relation::greater},
        {"gamma_omega_c0_lower", p.gamma * omega_c0 - (p.nu_c - 2.0 * p.kappa), Relation::greater_equal},
        {"gamma_omega_c0_upper", (p.nu_c + 2.0 * p.kappa) - p.gamma * omega_c0, Relation::greater_equal},
        {"initial_phase_diameter", diameter(initial.theta) - big_d, Relation::less},
        {"initial_q_diameter", std::isfinite(c.alpha_d) ? q0 - two_pi * c.big_l * c.alpha_d : kInf,
         Relation::less_equal},
        {"comparison_upper", two_pi * c.big_r * c.alpha_d + y_slack - p.gamma * big_d, Relation::less},
    };
    report.constants = c;
    report.satisfied = all_hold(report.margins);
    return report;
}

}  // namespace winfree::theory
