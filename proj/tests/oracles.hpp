#pragma once

// Reference implementations written independently of the library, used as
// test oracles.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

// Frequency drift with an explicit double loop over j for every i.
inline std::vector<double> frequency_drift(const std::vector<double>& theta, const std::vector<double>& omega,
                                           const std::vector<double>& nu, double kappa, double gamma) {
    const std::size_t n = theta.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double coupling = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            coupling += (1.0 + std::cos(theta[j])) * std::sin(theta[i]);
        }
        out[i] = -gamma * omega[i] + nu[i] - kappa * coupling / static_cast<double>(n);
    }
    return out;
}

inline double pairwise_diameter(const std::vector<double>& x) {
    double d = 0.0;
    for (double a : x) {
        for (double b : x) {
            d = std::max(d, std::abs(a - b));
        }
    }
    return d;
}

inline double mean(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int k = 1; k < n; ++k) {
        s += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
    }
    return s * h / 3.0;
}

inline std::vector<double> ramp(std::size_t n, double center, double slope) {
    std::vector<double> v(n);
    for (std::size_t i = 1; i <= n; ++i) {
        v[i - 1] = center + slope * (static_cast<double>(i) - (static_cast<double>(n) + 1.0) / 2.0);
    }
    return v;
}

}  // namespace oracle
