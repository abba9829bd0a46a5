#include "winfree/random.hpp"

#include "winfree/error.hpp"

#include <cmath>
#include <numbers>

namespace winfree {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr int kRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

// 53 random bits from two words.
inline std::uint64_t bits53(std::uint32_t hi, std::uint32_t lo) {
    return ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
}

constexpr double kTwoPow53Inv = 0x1.0p-53;

}  // namespace

Philox4x32::Counter Philox4x32::operator()(Counter ctr) const noexcept {
    Key key = key_;
    for (int round = 0; round < kRounds; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kMul0, ctr[0], hi0, lo0);
        mulhilo(kMul1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

NormalStream::NormalStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : gen_({static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}),
      stream_lo_(static_cast<std::uint32_t>(stream)),
      stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

std::array<double, 2> NormalStream::pair(std::uint64_t block) const noexcept {
    const auto x = gen_({static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
                         stream_lo_, stream_hi_});
    // u1 in (0, 1] keeps the logarithm finite; u2 in [0, 1).
    const double u1 = static_cast<double>(bits53(x[0], x[1]) + 1) * kTwoPow53Inv;
    const double u2 = static_cast<double>(bits53(x[2], x[3])) * kTwoPow53Inv;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

double NormalStream::operator()(std::uint64_t index) const noexcept {
    return pair(index / 2)[index % 2];
}

void NormalStream::fill(std::uint64_t first, std::vector<double>& out) const {
    std::size_t k = 0;
    if (first % 2 == 1 && !out.empty()) {
        out[k++] = (*this)(first);
    }
    for (; k + 1 < out.size(); k += 2) {
        const auto z = pair((first + k) / 2);
        out[k] = z[0];
        out[k + 1] = z[1];
    }
    if (k < out.size()) {
        out[k] = (*this)(first + k);
    }
}

BrownianPath BrownianPath::from_increments(double dt, std::vector<double> increments) {
    if (!(dt > 0.0)) {
        throw InvalidArgument("BrownianPath: dt must be positive");
    }
    BrownianPath path;
    path.dt = dt;
    path.increments = std::move(increments);
    path.running_sum.resize(path.increments.size() + 1);
    path.running_sum[0] = 0.0;
    for (std::size_t k = 0; k < path.increments.size(); ++k) {
        path.running_sum[k + 1] = path.running_sum[k] + path.increments[k];
    }
    return path;
}

BrownianPath BrownianPath::coarsen(std::size_t factor) const {
    if (factor == 0 || increments.size() % factor != 0) {
        throw InvalidArgument("BrownianPath::coarsen: factor must divide the step count");
    }
    std::vector<double> coarse(increments.size() / factor, 0.0);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
        for (std::size_t j = 0; j < factor; ++j) {
            coarse[k] += increments[k * factor + j];
        }
    }
    auto out = from_increments(dt * static_cast<double>(factor), std::move(coarse));
    out.seed = seed;
    out.stream = stream;
    return out;
}

BrownianPath generate_brownian(std::uint64_t seed, const TimeGrid& grid, std::uint64_t stream) {
    grid.validate();
    std::vector<double> inc(grid.steps);
    NormalStream(seed, stream).fill(0, inc);
    const double scale = std::sqrt(grid.dt);
    for (double& v : inc) {
        v *= scale;
    }
    auto path = BrownianPath::from_increments(grid.dt, std::move(inc));
    path.seed = seed;
    path.stream = stream;
    return path;
}

}  // namespace winfree
