#pragma once

#include <cstddef>

namespace winfree {

/// Uniform grid t_k = t0 + k dt, k = 0..steps. Grid points are always
/// recomputed from k, never accumulated.
struct TimeGrid {
    double t0 = 0.0;
    double dt = 0.01;
    std::size_t steps = 1;

    /// Grid covering [t0, t0 + horizon] with steps = round(horizon / dt).
    [[nodiscard]] static TimeGrid over(double horizon, double dt, double t0 = 0.0);

    /// Throws InvalidArgument unless dt > 0, steps >= 1 and both ends finite.
    void validate() const;

    [[nodiscard]] double time(std::size_t k) const noexcept {
        return t0 + static_cast<double>(k) * dt;
    }
    [[nodiscard]] double end() const noexcept { return time(steps); }
    [[nodiscard]] std::size_t points() const noexcept { return steps + 1; }

    bool operator==(const TimeGrid&) const = default;
};

}  // namespace winfree
