#pragma once

#include "winfree/time_grid.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace winfree {

/// Philox4x32-10 counter-based generator, bit-compatible with the one shipped
/// in Random123. Output is a pure function of (key, counter).
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit Philox4x32(Key key) noexcept : key_(key) {}

    [[nodiscard]] Counter operator()(Counter counter) const noexcept;

private:
    Key key_;
};

/// Deterministic standard normal stream. Variate k of stream s under seed S
/// is obtained from the Philox block with key S and counter (k/2, s), mapped
/// through Box–Muller. Any variate can be regenerated independently of the
/// others.
class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) noexcept;

    [[nodiscard]] double operator()(std::uint64_t index) const noexcept;

    /// Fill out[k] = variate(first + k).
    void fill(std::uint64_t first, std::vector<double>& out) const;

private:
    [[nodiscard]] std::array<double, 2> pair(std::uint64_t block) const noexcept;

    Philox4x32 gen_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
};

/// One scalar Brownian path shared by all oscillators (common noise).
struct BrownianPath {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    double dt = 0.0;
    /// increments[k] = B_{t_{k+1}} - B_{t_k} ~ Normal(0, dt).
    std::vector<double> increments;
    /// running_sum[k] = Σ_{j<k} increments[j]; running_sum[0] = 0.
    std::vector<double> running_sum;

    [[nodiscard]] std::size_t steps() const noexcept { return increments.size(); }

    /// Wrap externally produced increments (e.g. a coarsened fine path).
    [[nodiscard]] static BrownianPath from_increments(double dt, std::vector<double> increments);

    /// Sum consecutive groups of `factor` increments: the same Brownian
    /// realisation on a grid with dt * factor.
    [[nodiscard]] BrownianPath coarsen(std::size_t factor) const;
};

/// Increments are sqrt(dt) * NormalStream(seed, stream)(k).
[[nodiscard]] BrownianPath generate_brownian(std::uint64_t seed, const TimeGrid& grid,
                                             std::uint64_t stream = 0);

}  // namespace winfree
