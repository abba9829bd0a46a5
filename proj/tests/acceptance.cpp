// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "winfree/config.hpp"
#include "winfree/experiments.hpp"
#include "winfree/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace winfree;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

struct Line {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Line& line, double seconds) {
    failures += line.pass ? 0 : 1;
    char time_buf[64];
    std::snprintf(time_buf, sizeof time_buf, "%.3g s", seconds);
    std::cout << (line.pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << ": " << line.detail << " ("
              << time_buf << ")\n"
              << std::flush;
}

template <class F>
double timed(F&& f) {
    const auto t0 = clock_type::now();
    f();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(double v, int digits = 6) {
    std::ostringstream s;
    s.precision(digits);
    s << v;
    return s.str();
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("winfree_acceptance_" + name);
    fs::remove_all(p);
    return p;
}

double sup_diameter(const Trajectory& traj) {
    double d = 0.0;
    for (const auto& o : traj.observables) d = std::max(d, o.diameter_theta);
    return d;
}

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

// Criterion 1: deterministic conditions for fig1.
void deterministic_conditions() {
    const auto cfg = figure_preset("fig1");
    RunOptions opt;
    opt.out_dir = scratch("c1");
    (void)run_check(cfg, opt);  // warm-up
    RunArtifacts art;
    const double secs = timed([&] { art = run_check(cfg, opt); });
    const double upper = art.report->margin("comparison_upper").value;
    const double initial = art.report->margin("initial_r_diameter").value;
    Line l;
    l.pass = within(upper, -0.0117, 5e-4) && within(initial, -0.0659, 5e-4) && secs < 1e-3;
    l.detail = "2piR*alpha - gamma*D = " + fmt(upper) + " (want -0.0117 +- 5e-4), D(Omega0 + gamma*Theta0) - 2piL*alpha = " +
               fmt(initial) + " (want -0.0659 +- 5e-4), runtime < 1 ms";
    report(1, "fig1 theorem conditions", l, secs);
}

// Criterion 2: fig1 trajectory stays within D(Θ₀) with a common rotation number.
void figure1_dynamics() {
    const auto cfg = figure_preset("fig1");
    RunOptions opt;
    opt.out_dir = scratch("c2");
    RunArtifacts art;
    const double secs = timed([&] { art = run_simulate(cfg, opt); });
    const double sup = sup_diameter(*art.trajectory);
    const double d0 = art.trajectory->observables.front().diameter_theta;
    const double spread = rotation_numbers(*art.trajectory).spread;
    Line l;
    l.pass = sup <= 0.08 && sup <= d0 && spread < 1e-2 && secs < 1.0;
    l.detail = "sup D(Theta) = " + fmt(sup, 17) + " (want <= 0.08 = D(Theta0) = " + fmt(d0, 17) +
               "), rotation spread = " + fmt(spread) + " (want < 1e-2), runtime < 1 s";
    report(2, "fig1 dynamics", l, secs);
}

// Criterion 3: κ = 1 exits 4π/3 with distinct rotation numbers, κ = 50 stays locked.
void figure2_contrast() {
    Trajectory a, c;
    const auto cfg_a = figure_preset("fig2a");
    const auto cfg_c = figure_preset("fig2c");
    const double secs = timed([&] {
        a = simulate_deterministic(cfg_a.system(), cfg_a.initial_state(), cfg_a.grid);
        c = simulate_deterministic(cfg_c.system(), cfg_c.initial_state(), cfg_c.grid);
    });
    const double threshold = *cfg_a.analysis.exit_threshold;
    const auto exit_a = first_exit(a, threshold);
    const double spread_a = rotation_numbers(a).spread;
    const double sup_c = sup_diameter(c);
    const double spread_c = rotation_numbers(c).spread;
    const bool a_ok = exit_a.exited && spread_a > 0.5;
    const bool c_ok = sup_c <= threshold && spread_c < 0.1;
    Line l;
    l.pass = a_ok && c_ok && secs < 2.0;
    l.detail = "kappa=1: exited " + std::string(exit_a.exited ? "yes" : "no") +
               (exit_a.exit_step ? " at t=" + fmt(cfg_a.grid.time(*exit_a.exit_step)) : std::string()) +
               ", spread " + fmt(spread_a) + " (want exit, > 0.5) [" + (a_ok ? "ok" : "not met") +
               "]; kappa=50: sup D = " + fmt(sup_c) + " (want <= 4pi/3 = " + fmt(threshold) + "), spread " +
               fmt(spread_c) + " (want < 0.1) [" + (c_ok ? "ok" : "not met") + "]";
    report(3, "fig2 coupling contrast", l, secs);
}

// Criterion 4: stochastic conditions for fig3.
void stochastic_conditions() {
    const auto cfg = figure_preset("fig3");
    RunOptions opt;
    opt.out_dir = scratch("c4");
    (void)run_check(cfg, opt);
    RunArtifacts art;
    const double secs = timed([&] { art = run_check(cfg, opt); });
    const double q = art.report->margin("initial_q_diameter").value;
    const double upper = art.report->margin("comparison_upper").value;
    const double bound = std::get<theory::StochConstants>(art.report->constants).prob_lower_bound;
    Line l;
    l.pass = within(q, -0.0744, 1e-3) && within(upper, -0.0094, 1e-3) && within(bound, 1.0 / 3.0, 1e-12) &&
             secs < 1e-3;
    l.detail = "initial Q margin = " + fmt(q) + " (want -0.0744 +- 1e-3), comparison margin = " + fmt(upper) +
               " (want -0.0094 +- 1e-3), probability bound = " + fmt(bound, 17) + " (want 1/3 +- 1e-12), runtime < 1 ms";
    report(4, "fig3 theorem conditions", l, secs);
}

MonteCarloResult fig3_mc(std::size_t paths) {
    const auto cfg = figure_preset("fig3");
    MonteCarloOptions opt;
    opt.n_paths = paths;
    opt.master_seed = *cfg.monte_carlo->master_seed;
    opt.threshold = cfg.monte_carlo->threshold;
    opt.delta = cfg.theorem->delta;
    opt.threads = 0;
    return monte_carlo_locking(cfg.system(), cfg.initial_state(), cfg.grid, *cfg.noise, opt);
}

// Criterion 5: fig3 Monte Carlo locking probability.
void figure3_montecarlo() {
    MonteCarloResult full, ci;
    const double secs_full = timed([&] { full = fig3_mc(5000); });
    const double secs_ci = timed([&] { ci = fig3_mc(500); });
    const double bound = *full.theoretical_bound;
    const bool full_ok = full.empirical_prob >= 0.99 && full.empirical_prob >= bound && secs_full < 120.0;
    const bool ci_ok = ci.empirical_prob >= 0.98 && ci.empirical_prob >= bound;
    Line l;
    l.pass = full_ok && ci_ok;
    l.detail = "5000 paths: p = " + fmt(full.empirical_prob) + " (" + std::to_string(full.n_bounded) +
               " bounded, 95% CI [" + fmt(full.wilson_ci_95.low) + ", " + fmt(full.wilson_ci_95.high) +
               "], want >= 0.99 and >= bound " + fmt(bound) + ", " + fmt(secs_full, 3) +
               " s < 120 s); 500 paths: p = " + fmt(ci.empirical_prob) + " (want >= 0.98)";
    report(5, "fig3 Monte Carlo", l, secs_full + secs_ci);
}

// Criterion 6: larger coupling raises the locking probability in the fig4 configuration.
void figure4_contrast() {
    MonteCarloResult weak, strong;
    double total = 0.0;
    for (const auto& [name, out] : {std::pair<const char*, MonteCarloResult*>{"fig4a", &weak},
                                    std::pair<const char*, MonteCarloResult*>{"fig4b", &strong}}) {
        const auto cfg = figure_preset(name);
        MonteCarloOptions opt;
        opt.n_paths = 500;
        opt.master_seed = *cfg.monte_carlo->master_seed;
        opt.threshold = cfg.monte_carlo->threshold;
        opt.threads = 0;
        total += timed([&] {
            *out = monte_carlo_locking(cfg.system(), cfg.initial_state(), cfg.grid, *cfg.noise, opt);
        });
    }
    const double diff = strong.empirical_prob - weak.empirical_prob;
    Line l;
    l.pass = diff > 0.3 && total < 60.0;
    l.detail = "p(kappa=5) - p(kappa=1) = " + fmt(strong.empirical_prob) + " - " + fmt(weak.empirical_prob) + " = " +
               fmt(diff) + " (want > 0.3, threshold 4pi/3, 500 paths each), runtime < 60 s";
    report(6, "fig4 coupling contrast", l, total);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int shell(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return rc;
}

// Criterion 7: invariant-based property suite plus CLI reproducibility.
void property_suite(const std::string& tests_exe, const std::string& cli_exe) {
    Line l;
    int rc = 0;
    bool cli_ok = true;
    const double secs = timed([&] {
        rc = shell("\"" + tests_exe + "\" \"[property]\" --reporter compact > \"" +
                   (fs::temp_directory_path() / "winfree_acceptance_properties.txt").string() + "\" 2>&1");
        if (!cli_exe.empty()) {
            const fs::path dir = scratch("c7");
            fs::create_directories(dir);
            const fs::path cfg = dir / "mc.json";
            std::ofstream(cfg) << R"({"preset": "fig3", "monte_carlo": {"n_paths": 64}, "grid": {"steps": 1000}})";
            std::string outs[3];
            const char* runs[3][2] = {{"1", "t1"}, {"8", "t8"}, {"8", "t8b"}};
            for (int k = 0; k < 3; ++k) {
                const fs::path out = dir / runs[k][1];
                cli_ok = cli_ok && shell("\"" + cli_exe + "\" montecarlo \"" + cfg.string() + "\" --threads " +
                                         runs[k][0] + " --seed 5 --out \"" + out.string() + "\" > /dev/null") == 0;
                outs[k] = slurp(out / "montecarlo.json");
            }
            cli_ok = cli_ok && !outs[0].empty() && outs[0] == outs[1] && outs[1] == outs[2];
        }
    });
    l.pass = rc == 0 && cli_ok && secs < 60.0;
    l.detail = std::string("[property] unit tests ") + (rc == 0 ? "passed" : "FAILED") +
               ", CLI montecarlo.json identical across --threads 1/8 and repeated runs: " +
               (cli_exe.empty() ? "skipped" : (cli_ok ? "yes" : "no")) + ", runtime < 60 s";
    report(7, "property suite", l, secs);
}

}  // namespace

int main(int argc, char** argv) {
    std::string tests_exe = WINFREE_TESTS_EXE;
    std::string cli_exe = WINFREE_CLI_EXE;
    for (int k = 1; k + 1 < argc; k += 2) {
        const std::string flag = argv[k];
        if (flag == "--tests") tests_exe = argv[k + 1];
        if (flag == "--cli") cli_exe = argv[k + 1];
    }
    std::cout << "winfree acceptance suite\n";
    deterministic_conditions();
    figure1_dynamics();
    figure2_contrast();
    stochastic_conditions();
    figure3_montecarlo();
    figure4_contrast();
    property_suite(tests_exe, cli_exe);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures;
}
