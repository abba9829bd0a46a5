#include "winfree/run.hpp"

#include "winfree/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace winfree {

using nlohmann::json;
namespace fs = std::filesystem;

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 16);
    return std::string(buf, res.ptr);
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> cli, std::optional<std::uint64_t> config,
                           const char* env_value) {
    if (cli) {
        return *cli;
    }
    if (config) {
        return *config;
    }
    if (env_value && *env_value) {
        const std::string_view s(env_value);
        std::uint64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw InvalidArgument("WINFREE_SEED is not an unsigned 64-bit integer: " + std::string(s));
        }
        return v;
    }
    return 0;
}

namespace {

// Non-finite values are not representable in JSON; they are emitted as
// null.
json num(double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string_view relation_text(theory::Relation r) {
    switch (r) {
        case theory::Relation::less:
            return "<";
        case theory::Relation::less_equal:
            return "<=";
        case theory::Relation::greater:
            return ">";
        case theory::Relation::greater_equal:
            return ">=";
    }
    return "?";
}

fs::path prepare_dir(const ExperimentConfig& config, const RunOptions& options) {
    const fs::path dir = options.out_dir ? *options.out_dir : fs::path(config.output.dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw std::runtime_error("cannot create output directory " + dir.string() +
                                 (ec ? ": " + ec.message() : ""));
    }
    return dir;
}

fs::path write_text(const fs::path& dir, const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream out(p, std::ios::binary);
    out << text;
    out.close();
    if (!out) {
        throw std::runtime_error("cannot write " + p.string());
    }
    return p;
}

fs::path write_json(const fs::path& dir, const std::string& name, const json& doc) {
    return write_text(dir, name, doc.dump(2) + "\n");
}

OutputFormat format_of(const ExperimentConfig& config, const RunOptions& options) {
    return options.format ? *options.format : config.output.format;
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        out += c == '\'' ? std::string("''") : std::string(1, c);
    }
    return out + "'";
}

// Two panels: D(Θ(t)) over the horizon and θ_i(t)/t for t >= 0.1.
std::string trajectory_plot(const ExperimentConfig& config, std::size_t n) {
    const std::size_t diam_col = 2 * n + 2;
    std::ostringstream gp;
    gp << "# gnuplot script; run from this directory: gnuplot plot.gp\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size 1200,450\n"
       << "set output " << quote(config.name.empty() ? "trajectory.png" : config.name + ".png") << "\n"
       << "set key off\n"
       << "set multiplot layout 1,2\n"
       << "set xlabel 't'\n"
       << "set title 'D(Theta(t))'\n"
       << "plot 'trajectory.csv' every ::1 using 1:" << diam_col << " with lines lw 2\n"
       << "set title 'theta_i(t)/t, t >= 0.1'\n"
       << "plot for [i=2:" << n + 1 << "] 'trajectory.csv' every ::1 using 1:($1 >= 0.1 ? column(i)/$1 : NaN) with lines\n"
       << "unset multiplot\n";
    return gp.str();
}

// Sample paths of D(Θ(t)) over the full horizon and over the first 2.5 time units.
std::string montecarlo_plot(const ExperimentConfig& config, std::size_t m, double threshold, double t_end) {
    std::ostringstream gp;
    gp << "# gnuplot script; run from this directory: gnuplot plot.gp\n"
       << "set datafile separator ','\n"
       << "set terminal pngcairo size 1200,450\n"
       << "set output " << quote(config.name.empty() ? "montecarlo.png" : config.name + ".png") << "\n"
       << "set key off\n"
       << "set multiplot layout 1,2\n"
       << "set xlabel 't'\n"
       << "threshold = " << format_double(threshold) << "\n"
       << "set title 'sample paths of D(Theta(t))'\n"
       << "set xrange [0:" << format_double(t_end) << "]\n"
       << "plot for [i=2:" << m + 1 << "] 'sample_paths.csv' every ::1 using 1:i with lines, threshold dt 2 lc rgb 'black'\n"
       << "set title 'sample paths of D(Theta(t)), t <= 2.5'\n"
       << "set xrange [0:2.5]\n"
       << "plot for [i=2:" << m + 1 << "] 'sample_paths.csv' every ::1 using 1:i with lines, threshold dt 2 lc rgb 'black'\n"
       << "unset multiplot\n";
    return gp.str();
}

json margins_json(const theory::ConditionReport& report) {
    json margins = json::array();
    for (const auto& m : report.margins) {
        margins.push_back({{"label", m.label},
                           {"value", num(m.value)},
                           {"required", std::string(relation_text(m.required)) + " 0"},
                           {"holds", m.holds()}});
    }
    return margins;
}

json constants_json(const theory::ConditionReport& report) {
    if (const auto* d = std::get_if<theory::DetConstants>(&report.constants)) {
        return {{"m0", num(d->m0)},
                {"alpha_d", num(d->alpha_d)},
                {"big_l", num(d->big_l)},
                {"big_r", num(d->big_r)},
                {"int_beta", num(d->int_beta)},
                {"int_beta_plus", num(d->int_beta_plus)},
                {"int_beta_minus", num(d->int_beta_minus)}};
    }
    const auto& s = std::get<theory::StochConstants>(report.constants);
    return {{"c0", num(s.c0)},
            {"alpha_d", num(s.alpha_d)},
            {"delta", num(s.delta)},
            {"big_l", num(s.big_l)},
            {"big_r", num(s.big_r)},
            {"sigma_l2", num(s.sigma_l2)},
            {"sigma_sup", num(s.sigma_sup)},
            {"prob_lower_bound", num(s.prob_lower_bound)}};
}

double y0_for(const ExperimentConfig& config) {
    if (config.theorem && config.theorem->delta) {
        return 1.0 / std::cosh(*config.theorem->delta);
    }
    return 1.0;
}

json analysis_json(const ExperimentConfig& config, const SystemParams& params, const Trajectory& traj,
                   const std::optional<YProcessPaths>& y) {
    json doc;
    if (config.analysis.rotation && traj.grid.steps >= 2) {
        const RotationEstimate est = rotation_numbers(traj);
        json per = json::array();
        json win = json::array();
        for (std::size_t i = 0; i < est.per_oscillator.size(); ++i) {
            per.push_back(num(est.per_oscillator[i]));
            win.push_back(num(est.windowed[i]));
        }
        doc["rotation"] = {{"per_oscillator", per}, {"windowed", win}, {"spread", num(est.spread)}};
    }
    double sup_d = 0.0;
    for (const auto& o : traj.observables) {
        sup_d = std::max(sup_d, o.diameter_theta);
    }
    doc["sup_diameter_theta"] = num(sup_d);
    doc["final_diameter_theta"] = num(traj.observables.back().diameter_theta);
    if (config.analysis.exit_threshold) {
        const ExitReport rep = first_exit(traj, *config.analysis.exit_threshold);
        doc["exit"] = {{"threshold", num(rep.threshold)}, {"exited", rep.exited}};
        if (rep.exit_step) {
            doc["exit"]["exit_step"] = *rep.exit_step;
            doc["exit"]["exit_time"] = num(traj.grid.time(*rep.exit_step));
        } else {
            doc["exit"]["exit_step"] = nullptr;
            doc["exit"]["exit_time"] = nullptr;
        }
    }
    if (!config.analysis.diagnostic_pairs.empty()) {
        json pairs = json::array();
        for (const auto& [i, j] : config.analysis.diagnostic_pairs) {
            std::optional<std::span<const double>> ypath;
            if (y) {
                ypath = std::span<const double>(y->exact);
            }
            const auto series = diagnostic_series(traj, params, i - 1, j - 1, ypath);
            double r_max = -std::numeric_limits<double>::infinity();
            double q_max = r_max;
            json r = json::array();
            json q = json::array();
            for (const auto& p : series) {
                r_max = std::max(r_max, p.r);
                r.push_back(num(p.r));
                if (p.q) {
                    q_max = std::max(q_max, *p.q);
                    q.push_back(num(*p.q));
                }
            }
            json entry = {{"i", i}, {"j", j}, {"r_max", num(r_max)}, {"r", r}};
            if (y) {
                entry["q_max"] = num(q_max);
                entry["q"] = q;
            }
            pairs.push_back(entry);
        }
        doc["diagnostics"] = pairs;
    }
    return doc;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
    std::string line = "t";
    for (std::size_t i = 1; i <= n; ++i) line += ",theta_" + std::to_string(i);
    for (std::size_t i = 1; i <= n; ++i) line += ",omega_" + std::to_string(i);
    line += ",diameter_theta,diameter_omega,theta_c,omega_c\n";
    out << line;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const State& s = traj.states[k];
        const Observables& o = traj.observables[k];
        line = format_double(traj.grid.time(k));
        for (double v : s.theta) line += "," + format_double(v);
        for (double v : s.omega) line += "," + format_double(v);
        line += "," + format_double(o.diameter_theta) + "," + format_double(o.diameter_omega) + "," +
                format_double(o.theta_c) + "," + format_double(o.omega_c) + "\n";
        out << line;
    }
}

json trajectory_json(const Trajectory& traj) {
    json t = json::array();
    json theta = json::array();
    json omega = json::array();
    json d_theta = json::array();
    json d_omega = json::array();
    json theta_c = json::array();
    json omega_c = json::array();
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        t.push_back(traj.grid.time(k));
        theta.push_back(traj.states[k].theta);
        omega.push_back(traj.states[k].omega);
        d_theta.push_back(traj.observables[k].diameter_theta);
        d_omega.push_back(traj.observables[k].diameter_omega);
        theta_c.push_back(traj.observables[k].theta_c);
        omega_c.push_back(traj.observables[k].omega_c);
    }
    return {{"t", t},
            {"theta", theta},
            {"omega", omega},
            {"diameter_theta", d_theta},
            {"diameter_omega", d_omega},
            {"theta_c", theta_c},
            {"omega_c", omega_c}};
}

theory::ConditionReport check_config(const ExperimentConfig& config) {
    if (config.model == ModelKind::first_order) {
        throw InvalidArgument("check: the theorem conditions apply to the second-order model only");
    }
    if (!config.theorem) {
        throw InvalidArgument("check: config has no theorem block");
    }
    const SystemParams params = config.system();
    const State initial = config.initial_state();
    if (config.model == ModelKind::second_order_det) {
        return theory::check_det_theorem(params, initial, config.theorem->big_d);
    }
    if (!config.theorem->delta || !config.noise) {
        throw InvalidArgument("check: the stochastic model needs theorem.delta and a noise block");
    }
    return theory::check_stoch_theorem(params, initial, config.theorem->big_d, *config.theorem->delta,
                                       *config.noise);
}

json report_json(const ExperimentConfig& config, const theory::ConditionReport& report) {
    json doc = {{"name", config.name},
                {"model", std::string(to_string(config.model))},
                {"big_d", num(config.theorem->big_d)},
                {"satisfied", report.satisfied},
                {"margins", margins_json(report)},
                {"constants", constants_json(report)}};
    if (config.theorem->delta) {
        doc["delta"] = num(*config.theorem->delta);
    }
    return doc;
}

json montecarlo_json(const ExperimentConfig& config, const MonteCarloResult& r) {
    json peaks = json::array();
    for (double p : r.peak_diameter) peaks.push_back(num(p));
    json doc = {{"name", config.name},
                {"n_paths", r.n_paths},
                {"n_bounded", r.n_bounded},
                {"empirical_prob", num(r.empirical_prob)},
                {"wilson_ci_95", {num(r.wilson_ci_95.low), num(r.wilson_ci_95.high)}},
                {"theoretical_bound", r.theoretical_bound ? num(*r.theoretical_bound) : json(nullptr)},
                {"master_seed", r.master_seed},
                {"threshold", num(config.monte_carlo->threshold)},
                {"aborted_paths", r.aborted_paths},
                {"peak_diameter", peaks}};
    if (r.n_in_a_delta) {
        doc["n_in_a_delta"] = *r.n_in_a_delta;
    }
    return doc;
}

RunArtifacts run_check(const ExperimentConfig& config, const RunOptions& options) {
    RunArtifacts art;
    art.report = check_config(config);
    art.dir = prepare_dir(config, options);
    art.files.push_back(write_json(art.dir, "report.json", report_json(config, *art.report)));
    return art;
}

RunArtifacts run_simulate(const ExperimentConfig& config, const RunOptions& options) {
    if (options.check_only) {
        return run_check(config, options);
    }
    const SystemParams params = config.system();
    RunArtifacts art;
    if (config.theorem && config.model != ModelKind::first_order) {
        art.report = check_config(config);
    }
    std::optional<YProcessPaths> y;
    switch (config.model) {
        case ModelKind::first_order:
            art.trajectory = simulate_first_order(params, materialize(config.initial.theta, params.n), config.grid);
            break;
        case ModelKind::second_order_det:
            art.trajectory = simulate_deterministic(params, config.initial_state(), config.grid, config.scheme);
            break;
        case ModelKind::second_order_stoch: {
            const std::uint64_t seed = resolve_seed(options.seed, config.seed, options.env_seed);
            const BrownianPath path = generate_brownian(seed, config.grid, 0);
            art.trajectory =
                simulate_stochastic(params, config.initial_state(), config.grid, *config.noise, path);
            y = simulate_y_process(*config.noise, path, y0_for(config), config.grid);
            break;
        }
    }

    art.dir = prepare_dir(config, options);
    const std::size_t n = params.n;
    if (format_of(config, options) == OutputFormat::csv) {
        std::ostringstream csv;
        write_trajectory_csv(csv, *art.trajectory);
        art.files.push_back(write_text(art.dir, "trajectory.csv", csv.str()));
        art.files.push_back(write_text(art.dir, "plot.gp", trajectory_plot(config, n)));
    } else {
        art.files.push_back(write_json(art.dir, "trajectory.json", trajectory_json(*art.trajectory)));
    }
    art.files.push_back(write_json(art.dir, "analysis.json", analysis_json(config, params, *art.trajectory, y)));
    if (art.report) {
        art.files.push_back(write_json(art.dir, "report.json", report_json(config, *art.report)));
    }
    return art;
}

RunArtifacts run_montecarlo(const ExperimentConfig& config, const RunOptions& options) {
    if (options.check_only) {
        return run_check(config, options);
    }
    if (config.model != ModelKind::second_order_stoch || !config.monte_carlo || !config.noise) {
        throw InvalidArgument("montecarlo: config needs the stochastic model and a monte_carlo block");
    }
    const SystemParams params = config.system();
    const State initial = config.initial_state();
    const MonteCarloSpec& spec = *config.monte_carlo;

    RunArtifacts art;
    if (config.theorem) {
        art.report = check_config(config);
    }
    MonteCarloOptions opt;
    opt.n_paths = spec.n_paths;
    opt.master_seed = resolve_seed(options.seed, spec.master_seed ? spec.master_seed : config.seed,
                                   options.env_seed);
    opt.threshold = spec.threshold;
    opt.threads = options.threads;
    if (config.theorem && config.theorem->delta && noise_norms(*config.noise).l2_finite()) {
        opt.delta = config.theorem->delta;
    }
    art.monte_carlo = monte_carlo_locking(params, initial, config.grid, *config.noise, opt);

    // Full diameter series of the first few paths, regenerated from the same streams.
    const std::size_t m = std::min(spec.sample_paths, spec.n_paths);
    std::vector<std::vector<double>> series(m);
    for (std::size_t p = 0; p < m; ++p) {
        const BrownianPath path = generate_brownian(opt.master_seed, config.grid, p);
        series[p].assign(config.grid.points(), std::numeric_limits<double>::quiet_NaN());
        try {
            integrate_stochastic(params, initial, config.grid, *config.noise, path,
                                 [&](std::size_t k, const State& s) {
                                     series[p][k] = diameter(s.theta);
                                     return true;
                                 });
        } catch (const SimulationAborted&) {
            // Remaining points stay NaN.
        }
    }

    art.dir = prepare_dir(config, options);
    art.files.push_back(write_json(art.dir, "montecarlo.json", montecarlo_json(config, *art.monte_carlo)));
    if (m > 0) {
        std::string csv = "t";
        for (std::size_t p = 0; p < m; ++p) csv += ",diameter_path_" + std::to_string(p);
        csv += "\n";
        for (std::size_t k = 0; k < config.grid.points(); ++k) {
            csv += format_double(config.grid.time(k));
            for (std::size_t p = 0; p < m; ++p) csv += "," + format_double(series[p][k]);
            csv += "\n";
        }
        art.files.push_back(write_text(art.dir, "sample_paths.csv", csv));
        art.files.push_back(
            write_text(art.dir, "plot.gp", montecarlo_plot(config, m, spec.threshold, config.grid.end())));
    }
    if (art.report) {
        art.files.push_back(write_json(art.dir, "report.json", report_json(config, *art.report)));
    }
    return art;
}

}  // namespace winfree
