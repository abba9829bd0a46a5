#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "winfree/error.hpp"
#include "winfree/model.hpp"

#include <random>

using namespace winfree;

namespace {

SystemParams random_params(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    SystemParams p;
    p.n = n;
    p.nu.resize(n);
    for (double& v : p.nu) v = 10.0 + u(rng);
    p.kappa = 1.0 + std::abs(u(rng));
    p.gamma = 2.0 + std::abs(u(rng));
    return p;
}

State random_state(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    State s;
    s.theta.resize(n);
    s.omega.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.theta[i] = u(rng);
        s.omega[i] = u(rng);
    }
    return s;
}

}  // namespace

TEST_CASE("second-order drift matches the double-loop oracle", "[model]") {
    std::mt19937_64 rng(1);
    for (std::size_t n : {1u, 2u, 7u, 21u, 64u}) {
        const SystemParams p = random_params(rng, n);
        const State s = random_state(rng, n);
        const auto drift = drift_second_order(p, s);
        const auto expect = oracle::frequency_drift(s.theta, s.omega, p.nu, p.kappa, p.gamma);
        REQUIRE(drift.phase_velocity == s.omega);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(drift.frequency_velocity[i] == Catch::Approx(expect[i]).epsilon(1e-13).margin(1e-12));
        }
    }
}

TEST_CASE("unnormalized coupling scales kappa by N", "[model]") {
    std::mt19937_64 rng(2);
    SystemParams p = random_params(rng, 9);
    const State s = random_state(rng, 9);
    p.unnormalized_coupling = true;
    const auto drift = drift_second_order(p, s);
    const auto expect = oracle::frequency_drift(s.theta, s.omega, p.nu, 9.0 * p.kappa, p.gamma);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(drift.frequency_velocity[i] == Catch::Approx(expect[i]).epsilon(1e-13));
    }
}

TEST_CASE("inertia divides the frequency equation", "[model]") {
    std::mt19937_64 rng(3);
    SystemParams p = random_params(rng, 5);
    const State s = random_state(rng, 5);
    const auto unit = drift_second_order(p, s);
    p.inertia = 4.0;
    const auto heavy = drift_second_order(p, s);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(heavy.frequency_velocity[i] == Catch::Approx(unit.frequency_velocity[i] / 4.0).epsilon(1e-14));
    }
    const SystemParams q = normalize_inertia(p);
    CHECK(q.inertia == 1.0);
    CHECK(q.gamma == Catch::Approx(p.gamma / 4.0));
    CHECK(q.kappa == Catch::Approx(p.kappa / 4.0));
}

TEST_CASE("first-order drift", "[model]") {
    std::mt19937_64 rng(4);
    const SystemParams p = random_params(rng, 11);
    const State s = random_state(rng, 11);
    const auto f = drift_first_order(p, s.theta);
    const std::vector<double> zero(11, 0.0);
    // The first-order field equals the second-order one at ω = 0 with γ ignored.
    const auto expect = oracle::frequency_drift(s.theta, zero, p.nu, p.kappa, p.gamma);
    for (std::size_t i = 0; i < 11; ++i) {
        CHECK(f[i] == Catch::Approx(expect[i]).epsilon(1e-13).margin(1e-12));
    }
}

TEST_CASE("diameter and interaction mean", "[model]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const State s = random_state(rng, 1 + trial);
        CHECK(diameter(s.theta) == oracle::pairwise_diameter(s.theta));
        const double ic = interaction_mean(s.theta);
        CHECK(ic >= 0.0);
        CHECK(ic <= 2.0);
    }
    CHECK(diameter(std::vector<double>{3.0}) == 0.0);
    CHECK(interaction_mean(std::vector<double>{0.0, 0.0}) == 2.0);
    CHECK(interaction_mean(std::vector<double>{M_PI}) == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("observables", "[model]") {
    std::mt19937_64 rng(6);
    const SystemParams p = random_params(rng, 8);
    const State s = random_state(rng, 8);
    const Observables o = observables(s, p);
    CHECK(o.theta_c == Catch::Approx(oracle::mean(s.theta)));
    CHECK(o.omega_c == Catch::Approx(oracle::mean(s.omega)));
    CHECK(o.nu_c == Catch::Approx(oracle::mean(p.nu)));
    CHECK(o.diameter_theta == oracle::pairwise_diameter(s.theta));
    CHECK(o.diameter_omega == oracle::pairwise_diameter(s.omega));
}

TEST_CASE("diffusion coefficient sums to zero", "[model]") {
    std::mt19937_64 rng(7);
    const State s = random_state(rng, 21);
    const auto g = diffusion_coefficient(s, 0.3);
    double sum = 0.0;
    double scale = 0.0;
    for (double v : g) {
        sum += v;
        scale = std::max(scale, std::abs(v));
    }
    CHECK(std::abs(sum) <= 21 * 0x1p-52 * scale);
    CHECK_THROWS_AS(diffusion_coefficient(s, -0.1), InvalidArgument);
}

TEST_CASE("parameter validation", "[model]") {
    SystemParams p;
    p.n = 2;
    p.nu = {1.0, 2.0};
    p.kappa = 1.0;
    p.gamma = 1.0;
    CHECK_NOTHROW(p.validate());

    auto bad = p;
    bad.nu = {1.0};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = p;
    bad.gamma = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = p;
    bad.kappa = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = p;
    bad.inertia = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = p;
    bad.nu[0] = std::nan("");
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = p;
    bad.n = 0;
    bad.nu.clear();
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);

    State s{{0.0}, {0.0}};
    CHECK_THROWS_AS(drift_second_order(p, s), InvalidArgument);
}
