#pragma once

#include <string>
#include <variant>
#include <vector>

namespace winfree {

/// Time-dependent noise intensity σ(t) >= 0 on t >= 0.
struct NoiseSpec {
    struct Zero {
        bool operator==(const Zero&) const = default;
    };
    /// σ ≡ c.
    struct Constant {
        double c = 0.0;
        bool operator==(const Constant&) const = default;
    };
    /// σ_t = 1 / (a (1 + t)).
    struct Hyperbolic {
        double a = 1.0;
        bool operator==(const Hyperbolic&) const = default;
    };
    /// Piecewise-linear interpolation of (t_k, σ_k); constant extrapolation
    /// outside the knots.
    struct Table {
        std::vector<double> t;
        std::vector<double> sigma;
        bool operator==(const Table&) const = default;
    };

    std::variant<Zero, Constant, Hyperbolic, Table> family = Zero{};

    [[nodiscard]] static NoiseSpec zero() { return {}; }
    [[nodiscard]] static NoiseSpec constant(double c);
    [[nodiscard]] static NoiseSpec hyperbolic(double a);
    [[nodiscard]] static NoiseSpec table(std::vector<double> t, std::vector<double> sigma);

    /// Throws InvalidArgument on negative intensities, a <= 0, or a
    /// malformed table (unsorted knots, size mismatch, empty).
    void validate() const;

    [[nodiscard]] double operator()(double t) const;

    [[nodiscard]] std::string family_name() const;

    bool operator==(const NoiseSpec&) const = default;
};

struct NoiseNorms {
    /// ‖σ‖₂ over [0, ∞); +inf when not square integrable.
    double l2 = 0.0;
    /// ‖σ‖_∞ over [0, ∞).
    double sup = 0.0;
    /// False for the table family, whose norms are those of the sampled
    /// interpolant rather than of an underlying closed form.
    bool exact = true;

    [[nodiscard]] bool l2_finite() const;
};

[[nodiscard]] NoiseNorms noise_norms(const NoiseSpec& noise);

}  // namespace winfree
