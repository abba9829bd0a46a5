#include "winfree/noise.hpp"

#include "winfree/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace winfree {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

NoiseSpec NoiseSpec::constant(double c) {
    NoiseSpec s;
    s.family = Constant{c};
    s.validate();
    return s;
}

NoiseSpec NoiseSpec::hyperbolic(double a) {
    NoiseSpec s;
    s.family = Hyperbolic{a};
    s.validate();
    return s;
}

NoiseSpec NoiseSpec::table(std::vector<double> t, std::vector<double> sigma) {
    NoiseSpec s;
    s.family = Table{std::move(t), std::move(sigma)};
    s.validate();
    return s;
}

void NoiseSpec::validate() const {
    std::visit(overloaded{
                   [](const Zero&) {},
                   [](const Constant& c) {
                       if (!(c.c >= 0.0) || !std::isfinite(c.c)) {
                           throw InvalidArgument("noise: constant intensity must be finite and >= 0");
                       }
                   },
                   [](const Hyperbolic& h) {
                       if (!(h.a > 0.0) || !std::isfinite(h.a)) {
                           throw InvalidArgument("noise: hyperbolic scale a must be positive");
                       }
                   },
                   [](const Table& tab) {
                       if (tab.t.empty() || tab.t.size() != tab.sigma.size()) {
                           throw InvalidArgument("noise: table needs matching, nonempty t and sigma");
                       }
                       if (tab.t.front() < 0.0) {
                           throw InvalidArgument("noise: table knots must lie in [0, inf)");
                       }
                       for (std::size_t k = 0; k < tab.t.size(); ++k) {
                           if (!std::isfinite(tab.t[k]) || !std::isfinite(tab.sigma[k]) ||
                               tab.sigma[k] < 0.0) {
                               throw InvalidArgument("noise: table values must be finite and >= 0");
                           }
                           if (k > 0 && !(tab.t[k] > tab.t[k - 1])) {
                               throw InvalidArgument("noise: table knots must be strictly increasing");
                           }
                       }
                   },
               },
               family);
}

double NoiseSpec::operator()(double t) const {
    return std::visit(overloaded{
                          [](const Zero&) { return 0.0; },
                          [](const Constant& c) { return c.c; },
                          [t](const Hyperbolic& h) { return 1.0 / (h.a * (1.0 + t)); },
                          [t](const Table& tab) {
                              if (t <= tab.t.front()) {
                                  return tab.sigma.front();
                              }
                              if (t >= tab.t.back()) {
                                  return tab.sigma.back();
                              }
                              const auto it = std::upper_bound(tab.t.begin(), tab.t.end(), t);
                              const auto k = static_cast<std::size_t>(it - tab.t.begin());
                              const double w = (t - tab.t[k - 1]) / (tab.t[k] - tab.t[k - 1]);
                              return (1.0 - w) * tab.sigma[k - 1] + w * tab.sigma[k];
                          },
                      },
                      family);
}

std::string NoiseSpec::family_name() const {
    return std::visit(overloaded{
                          [](const Zero&) { return std::string("zero"); },
                          [](const Constant&) { return std::string("constant"); },
                          [](const Hyperbolic&) { return std::string("hyperbolic"); },
                          [](const Table&) { return std::string("table"); },
                      },
                      family);
}

bool NoiseNorms::l2_finite() const { return std::isfinite(l2); }

NoiseNorms noise_norms(const NoiseSpec& noise) {
    noise.validate();
    return std::visit(
        overloaded{
            [](const NoiseSpec::Zero&) { return NoiseNorms{0.0, 0.0, true}; },
            [](const NoiseSpec::Constant& c) {
                return NoiseNorms{c.c > 0.0 ? kInf : 0.0, c.c, true};
            },
            // ∫₀^∞ (a(1+t))⁻² dt = 1/a², sup attained at t = 0.
            [](const NoiseSpec::Hyperbolic& h) { return NoiseNorms{1.0 / h.a, 1.0 / h.a, true}; },
            [](const NoiseSpec::Table& tab) {
                // Squared integral of each linear piece: h (a² + ab + b²) / 3.
                // The head [0, t_0] and tail [t_n, ∞) are constant.
                double sq = tab.t.front() * tab.sigma.front() * tab.sigma.front();
                for (std::size_t k = 1; k < tab.t.size(); ++k) {
                    const double a = tab.sigma[k - 1];
                    const double b = tab.sigma[k];
                    sq += (tab.t[k] - tab.t[k - 1]) * (a * a + a * b + b * b) / 3.0;
                }
                if (tab.sigma.back() > 0.0) {
                    sq = kInf;
                }
                const double sup = *std::max_element(tab.sigma.begin(), tab.sigma.end());
                return NoiseNorms{std::sqrt(sq), sup, false};
            },
        },
        noise.family);
}

}  // namespace winfree
