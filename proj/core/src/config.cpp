#include "winfree/config.hpp"

#include "winfree/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace winfree {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

// Collects schema problems while walking the document so they can be
// reported together.
class Reader {
public:
    std::vector<std::string> problems;

    void fail(const std::string& path, const std::string& what) {
        problems.push_back(path + ": " + what);
    }

    // Reject keys outside `allowed`; returns false when `node` is not an object.
    bool object(const json& node, const std::string& path, std::initializer_list<const char*> allowed) {
        if (!node.is_object()) {
            fail(path.empty() ? "<root>" : path, "expected an object");
            return false;
        }
        const std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& [key, _] : node.items()) {
            if (!ok.count(key)) {
                fail(join(path, key), "unknown key");
            }
        }
        return true;
    }

    const json* find(const json& node, const std::string& path, const char* key, bool required) {
        if (const auto it = node.find(key); it != node.end()) {
            return &*it;
        }
        if (required) {
            missing.push_back(join(path, key));
        }
        return nullptr;
    }

    std::optional<double> number(const json& node, const std::string& path, const char* key,
                                 bool required) {
        const json* v = find(node, path, key, required);
        if (!v) {
            return std::nullopt;
        }
        if (!v->is_number()) {
            fail(join(path, key), "expected a number");
            return std::nullopt;
        }
        const double d = v->get<double>();
        if (!std::isfinite(d)) {
            fail(join(path, key), "must be finite");
            return std::nullopt;
        }
        return d;
    }

    std::optional<std::uint64_t> unsigned_int(const json& node, const std::string& path,
                                              const char* key, bool required) {
        const json* v = find(node, path, key, required);
        if (!v) {
            return std::nullopt;
        }
        if (!v->is_number_integer() || (!v->is_number_unsigned() && v->get<std::int64_t>() < 0)) {
            fail(join(path, key), "expected a nonnegative integer");
            return std::nullopt;
        }
        return v->get<std::uint64_t>();
    }

    std::optional<bool> boolean(const json& node, const std::string& path, const char* key) {
        const json* v = find(node, path, key, false);
        if (!v) {
            return std::nullopt;
        }
        if (!v->is_boolean()) {
            fail(join(path, key), "expected true or false");
            return std::nullopt;
        }
        return v->get<bool>();
    }

    std::optional<std::string> string(const json& node, const std::string& path, const char* key,
                                      bool required) {
        const json* v = find(node, path, key, required);
        if (!v) {
            return std::nullopt;
        }
        if (!v->is_string()) {
            fail(join(path, key), "expected a string");
            return std::nullopt;
        }
        return v->get<std::string>();
    }

    std::optional<std::vector<double>> numbers(const json& v, const std::string& path) {
        if (!v.is_array()) {
            fail(path, "expected an array of numbers");
            return std::nullopt;
        }
        std::vector<double> out;
        out.reserve(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_number() || !std::isfinite(v[k].get<double>())) {
                fail(path + "[" + std::to_string(k) + "]", "expected a finite number");
                return std::nullopt;
            }
            out.push_back(v[k].get<double>());
        }
        return out;
    }

    std::optional<VectorSpec> vector_spec(const json& node, const std::string& path, const char* key,
                                          bool required, std::optional<std::size_t> n) {
        const json* v = find(node, path, key, required);
        if (!v) {
            return std::nullopt;
        }
        const std::string here = join(path, key);
        if (v->is_array()) {
            auto values = numbers(*v, here);
            if (values && n && values->size() != *n) {
                fail(here, "has " + std::to_string(values->size()) + " entries, expected " +
                               std::to_string(*n));
                return std::nullopt;
            }
            if (!values) {
                return std::nullopt;
            }
            return VectorSpec{std::move(*values)};
        }
        if (!object(*v, here, {"ramp"})) {
            return std::nullopt;
        }
        const json* ramp = find(*v, here, "ramp", true);
        if (!ramp || !object(*ramp, join(here, "ramp"), {"center", "slope"})) {
            return std::nullopt;
        }
        Ramp r;
        r.center = number(*ramp, join(here, "ramp"), "center", false).value_or(0.0);
        r.slope = number(*ramp, join(here, "ramp"), "slope", false).value_or(0.0);
        return VectorSpec{r};
    }

    void finish() {
        if (!missing.empty()) {
            std::string list;
            for (const auto& m : missing) {
                list += (list.empty() ? "" : ", ") + m;
            }
            problems.push_back("missing required keys: " + list);
        }
        if (!problems.empty()) {
            throw ConfigError(problems);
        }
    }

private:
    std::vector<std::string> missing;
};

std::optional<ModelKind> parse_model(const std::string& s) {
    if (s == "first_order") return ModelKind::first_order;
    if (s == "second_order_det") return ModelKind::second_order_det;
    if (s == "second_order_stoch") return ModelKind::second_order_stoch;
    return std::nullopt;
}

std::optional<NoiseSpec> parse_noise(Reader& rd, const json& node, const std::string& path) {
    if (!rd.object(node, path, {"family", "c", "a", "t", "sigma"})) {
        return std::nullopt;
    }
    const auto family = rd.string(node, path, "family", true);
    if (!family) {
        return std::nullopt;
    }
    auto forbid = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys) {
            if (node.contains(k)) {
                rd.fail(join(path, k), "not used by noise family " + *family);
            }
        }
    };
    NoiseSpec spec;
    if (*family == "zero") {
        forbid({"c", "a", "t", "sigma"});
    } else if (*family == "constant") {
        forbid({"a", "t", "sigma"});
        const auto c = rd.number(node, path, "c", true);
        if (!c) return std::nullopt;
        if (*c < 0.0) {
            rd.fail(join(path, "c"), "must be >= 0");
            return std::nullopt;
        }
        spec.family = NoiseSpec::Constant{*c};
    } else if (*family == "hyperbolic") {
        forbid({"c", "t", "sigma"});
        const auto a = rd.number(node, path, "a", true);
        if (!a) return std::nullopt;
        if (!(*a > 0.0)) {
            rd.fail(join(path, "a"), "must be positive");
            return std::nullopt;
        }
        spec.family = NoiseSpec::Hyperbolic{*a};
    } else if (*family == "table") {
        forbid({"c", "a"});
        const json* t = rd.find(node, path, "t", true);
        const json* s = rd.find(node, path, "sigma", true);
        if (!t || !s) return std::nullopt;
        auto tv = rd.numbers(*t, join(path, "t"));
        auto sv = rd.numbers(*s, join(path, "sigma"));
        if (!tv || !sv) return std::nullopt;
        spec.family = NoiseSpec::Table{std::move(*tv), std::move(*sv)};
        try {
            spec.validate();
        } catch (const InvalidArgument& e) {
            rd.fail(path, e.what());
            return std::nullopt;
        }
    } else {
        rd.fail(join(path, "family"), "unknown noise family '" + *family +
                                          "' (expected zero, constant, hyperbolic or table)");
        return std::nullopt;
    }
    return spec;
}

json emit_vector(const VectorSpec& v) {
    return std::visit(overloaded{
                          [](const std::vector<double>& x) { return json(x); },
                          [](const Ramp& r) {
                              return json{{"ramp", {{"center", r.center}, {"slope", r.slope}}}};
                          },
                      },
                      v);
}

json emit_noise(const NoiseSpec& n) {
    return std::visit(overloaded{
                          [](const NoiseSpec::Zero&) { return json{{"family", "zero"}}; },
                          [](const NoiseSpec::Constant& c) {
                              return json{{"family", "constant"}, {"c", c.c}};
                          },
                          [](const NoiseSpec::Hyperbolic& h) {
                              return json{{"family", "hyperbolic"}, {"a", h.a}};
                          },
                          [](const NoiseSpec::Table& t) {
                              return json{{"family", "table"}, {"t", t.t}, {"sigma", t.sigma}};
                          },
                      },
                      n.family);
}

ExperimentConfig parse_plain(const json& doc) {
    Reader rd;
    ExperimentConfig cfg;
    if (!rd.object(doc, "", {"schema_version", "name", "model", "params", "initial", "grid", "scheme",
                             "seed", "noise", "theorem", "analysis", "monte_carlo", "output"})) {
        rd.finish();
    }

    if (const auto v = rd.unsigned_int(doc, "", "schema_version", false)) {
        if (*v != static_cast<std::uint64_t>(kSchemaVersion)) {
            rd.fail("schema_version", "unsupported version " + std::to_string(*v) + " (expected 1)");
        }
    }
    cfg.name = rd.string(doc, "", "name", false).value_or("");

    bool model_ok = false;
    if (const auto m = rd.string(doc, "", "model", true)) {
        if (const auto kind = parse_model(*m)) {
            cfg.model = *kind;
            model_ok = true;
        } else {
            rd.fail("model", "unknown model '" + *m +
                                 "' (expected first_order, second_order_det or second_order_stoch)");
        }
    }
    const bool stochastic = model_ok && cfg.model == ModelKind::second_order_stoch;

    std::optional<std::size_t> n;
    if (const json* p = rd.find(doc, "", "params", true);
        p && rd.object(*p, "params", {"n", "nu", "kappa", "gamma", "inertia", "unnormalized_coupling"})) {
        if (const auto v = rd.unsigned_int(*p, "params", "n", true)) {
            if (*v < 1) {
                rd.fail("params.n", "must be >= 1");
            } else {
                n = static_cast<std::size_t>(*v);
                cfg.params.n = *n;
            }
        }
        if (auto v = rd.vector_spec(*p, "params", "nu", true, n)) cfg.params.nu = std::move(*v);
        if (const auto v = rd.number(*p, "params", "kappa", true)) {
            if (*v < 0.0) rd.fail("params.kappa", "must be >= 0");
            cfg.params.kappa = *v;
        }
        if (const auto v = rd.number(*p, "params", "gamma", true)) {
            if (!(*v > 0.0)) rd.fail("params.gamma", "must be positive");
            cfg.params.gamma = *v;
        }
        if (const auto v = rd.number(*p, "params", "inertia", false)) {
            if (!(*v > 0.0)) rd.fail("params.inertia", "must be positive");
            cfg.params.inertia = *v;
        }
        if (const auto v = rd.boolean(*p, "params", "unnormalized_coupling")) {
            cfg.params.unnormalized_coupling = *v;
        }
    }

    const bool needs_omega = !model_ok || cfg.model != ModelKind::first_order;
    if (const json* p = rd.find(doc, "", "initial", true);
        p && rd.object(*p, "initial", {"theta", "omega"})) {
        if (auto v = rd.vector_spec(*p, "initial", "theta", true, n)) cfg.initial.theta = std::move(*v);
        if (auto v = rd.vector_spec(*p, "initial", "omega", needs_omega, n)) {
            cfg.initial.omega = std::move(*v);
        }
    }

    if (const json* g = rd.find(doc, "", "grid", true);
        g && rd.object(*g, "grid", {"t0", "dt", "steps", "horizon"})) {
        const auto t0 = rd.number(*g, "grid", "t0", false);
        const auto dt = rd.number(*g, "grid", "dt", true);
        const auto steps = rd.unsigned_int(*g, "grid", "steps", false);
        const auto horizon = rd.number(*g, "grid", "horizon", false);
        cfg.grid.t0 = t0.value_or(0.0);
        if (dt) {
            if (!(*dt > 0.0)) {
                rd.fail("grid.dt", "must be positive");
            }
            cfg.grid.dt = *dt;
        }
        if (steps && horizon) {
            rd.fail("grid", "give either steps or horizon, not both");
        } else if (steps) {
            if (*steps < 1) rd.fail("grid.steps", "must be >= 1");
            cfg.grid.steps = static_cast<std::size_t>(*steps);
        } else if (horizon) {
            if (!(*horizon > 0.0)) {
                rd.fail("grid.horizon", "must be positive");
            } else if (dt && *dt > 0.0) {
                cfg.grid.steps = static_cast<std::size_t>(std::llround(*horizon / *dt));
                if (cfg.grid.steps < 1) rd.fail("grid.horizon", "shorter than one step");
            }
        } else if (g->is_object()) {
            rd.fail("grid", "missing steps or horizon");
        }
    }

    if (const auto s = rd.string(doc, "", "scheme", false)) {
        if (*s == "euler") {
            cfg.scheme = Scheme::euler;
        } else if (*s == "rk4") {
            cfg.scheme = Scheme::rk4;
            if (stochastic) rd.fail("scheme", "rk4 is only available for deterministic models");
        } else {
            rd.fail("scheme", "unknown scheme '" + *s + "' (expected euler or rk4)");
        }
    }

    cfg.seed = rd.unsigned_int(doc, "", "seed", false);

    if (const json* nz = rd.find(doc, "", "noise", stochastic)) {
        if (model_ok && !stochastic) {
            rd.fail("noise", "only allowed with model second_order_stoch");
        } else {
            cfg.noise = parse_noise(rd, *nz, "noise");
        }
    }

    if (const json* t = rd.find(doc, "", "theorem", false);
        t && rd.object(*t, "theorem", {"big_d", "delta"})) {
        TheoremSpec th;
        if (const auto v = rd.number(*t, "theorem", "big_d", true)) {
            if (!(*v > 0.0)) rd.fail("theorem.big_d", "must be positive");
            th.big_d = *v;
        }
        if (const auto v = rd.number(*t, "theorem", "delta", false)) {
            if (!(*v > 0.0)) rd.fail("theorem.delta", "must be positive");
            th.delta = *v;
        }
        if (stochastic && !th.delta) {
            rd.fail("theorem.delta", "required for the stochastic model");
        }
        cfg.theorem = th;
    }

    if (const json* a = rd.find(doc, "", "analysis", false);
        a && rd.object(*a, "analysis", {"rotation", "exit_threshold", "diagnostic_pairs"})) {
        if (const auto v = rd.boolean(*a, "analysis", "rotation")) cfg.analysis.rotation = *v;
        if (const auto v = rd.number(*a, "analysis", "exit_threshold", false)) {
            if (!(*v > 0.0)) rd.fail("analysis.exit_threshold", "must be positive");
            cfg.analysis.exit_threshold = *v;
        }
        if (const json* pairs = rd.find(*a, "analysis", "diagnostic_pairs", false)) {
            const std::string here = "analysis.diagnostic_pairs";
            if (!pairs->is_array()) {
                rd.fail(here, "expected an array of [i, j] pairs");
            } else {
                for (std::size_t k = 0; k < pairs->size(); ++k) {
                    const json& pr = (*pairs)[k];
                    const std::string at = here + "[" + std::to_string(k) + "]";
                    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
                        !pr[1].is_number_integer() || pr[0].get<std::int64_t>() < 1 ||
                        pr[1].get<std::int64_t>() < 1) {
                        rd.fail(at, "expected [i, j] with 1-based oscillator indices");
                        continue;
                    }
                    const auto i = pr[0].get<std::size_t>();
                    const auto j = pr[1].get<std::size_t>();
                    if (i < 1 || j < 1 || (n && (i > *n || j > *n))) {
                        rd.fail(at, "oscillator index out of range");
                        continue;
                    }
                    cfg.analysis.diagnostic_pairs.emplace_back(i, j);
                }
            }
        }
    }

    if (const json* mc = rd.find(doc, "", "monte_carlo", false)) {
        if (model_ok && !stochastic) {
            rd.fail("monte_carlo", "only allowed with model second_order_stoch");
        } else if (rd.object(*mc, "monte_carlo", {"n_paths", "master_seed", "threshold", "sample_paths"})) {
            MonteCarloSpec m;
            if (const auto v = rd.unsigned_int(*mc, "monte_carlo", "n_paths", true)) {
                if (*v < 1) rd.fail("monte_carlo.n_paths", "must be >= 1");
                m.n_paths = static_cast<std::size_t>(*v);
            }
            m.master_seed = rd.unsigned_int(*mc, "monte_carlo", "master_seed", false);
            if (const auto v = rd.number(*mc, "monte_carlo", "threshold", true)) {
                if (!(*v > 0.0)) rd.fail("monte_carlo.threshold", "must be positive");
                m.threshold = *v;
            }
            if (const auto v = rd.unsigned_int(*mc, "monte_carlo", "sample_paths", false)) {
                m.sample_paths = static_cast<std::size_t>(*v);
            }
            cfg.monte_carlo = m;
        }
    }

    if (const json* o = rd.find(doc, "", "output", false);
        o && rd.object(*o, "output", {"dir", "format"})) {
        if (const auto v = rd.string(*o, "output", "dir", false)) cfg.output.dir = *v;
        if (const auto v = rd.string(*o, "output", "format", false)) {
            if (*v == "csv") {
                cfg.output.format = OutputFormat::csv;
            } else if (*v == "json") {
                cfg.output.format = OutputFormat::json;
            } else {
                rd.fail("output.format", "expected csv or json");
            }
        }
    }

    rd.finish();
    return cfg;
}

}  // namespace

std::vector<double> materialize(const VectorSpec& spec, std::size_t n) {
    return std::visit(overloaded{
                          [n](const std::vector<double>& v) {
                              if (v.size() != n) {
                                  throw InvalidArgument("vector has " + std::to_string(v.size()) +
                                                        " entries, expected " + std::to_string(n));
                              }
                              return v;
                          },
                          [n](const Ramp& r) {
                              std::vector<double> v(n);
                              const double mid = (static_cast<double>(n) + 1.0) / 2.0;
                              for (std::size_t i = 0; i < n; ++i) {
                                  v[i] = r.center + r.slope * (static_cast<double>(i + 1) - mid);
                              }
                              return v;
                          },
                      },
                      spec);
}

SystemParams ExperimentConfig::system() const {
    SystemParams p;
    p.n = params.n;
    p.nu = materialize(params.nu, params.n);
    p.kappa = params.kappa;
    p.gamma = params.gamma;
    p.inertia = params.inertia;
    p.unnormalized_coupling = params.unnormalized_coupling;
    p.validate();
    return p;
}

State ExperimentConfig::initial_state() const {
    State s;
    s.theta = materialize(initial.theta, params.n);
    s.omega = materialize(initial.omega, params.n);
    return s;
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::first_order:
            return "first_order";
        case ModelKind::second_order_det:
            return "second_order_det";
        case ModelKind::second_order_stoch:
            return "second_order_stoch";
    }
    return "?";
}

std::string_view to_string(OutputFormat format) {
    return format == OutputFormat::csv ? "csv" : "json";
}

ExperimentConfig parse_config(const json& doc) {
    if (doc.is_object() && doc.contains("preset")) {
        const json& name = doc["preset"];
        if (!name.is_string()) {
            throw ConfigError({"preset: expected a preset name"});
        }
        ExperimentConfig base;
        try {
            base = figure_preset(name.get<std::string>());
        } catch (const InvalidArgument& e) {
            throw ConfigError({std::string("preset: ") + e.what()});
        }
        json merged = emit_config(base);
        json patch = doc;
        patch.erase("preset");
        merged.merge_patch(patch);
        return parse_plain(merged);
    }
    return parse_plain(doc);
}

ExperimentConfig parse_config_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("<document>: ") + e.what()});
    }
    return parse_config(doc);
}

json emit_config(const ExperimentConfig& cfg) {
    json doc;
    doc["schema_version"] = cfg.schema_version;
    if (!cfg.name.empty()) {
        doc["name"] = cfg.name;
    }
    doc["model"] = std::string(to_string(cfg.model));
    doc["params"] = {
        {"n", cfg.params.n},
        {"nu", emit_vector(cfg.params.nu)},
        {"kappa", cfg.params.kappa},
        {"gamma", cfg.params.gamma},
        {"inertia", cfg.params.inertia},
        {"unnormalized_coupling", cfg.params.unnormalized_coupling},
    };
    doc["initial"] = {{"theta", emit_vector(cfg.initial.theta)}};
    if (cfg.model != ModelKind::first_order) {
        doc["initial"]["omega"] = emit_vector(cfg.initial.omega);
    }
    doc["grid"] = {{"t0", cfg.grid.t0}, {"dt", cfg.grid.dt}, {"steps", cfg.grid.steps}};
    doc["scheme"] = cfg.scheme == Scheme::euler ? "euler" : "rk4";
    if (cfg.seed) {
        doc["seed"] = *cfg.seed;
    }
    if (cfg.noise) {
        doc["noise"] = emit_noise(*cfg.noise);
    }
    if (cfg.theorem) {
        doc["theorem"] = {{"big_d", cfg.theorem->big_d}};
        if (cfg.theorem->delta) {
            doc["theorem"]["delta"] = *cfg.theorem->delta;
        }
    }
    json analysis = {{"rotation", cfg.analysis.rotation}};
    if (cfg.analysis.exit_threshold) {
        analysis["exit_threshold"] = *cfg.analysis.exit_threshold;
    }
    if (!cfg.analysis.diagnostic_pairs.empty()) {
        json pairs = json::array();
        for (const auto& [i, j] : cfg.analysis.diagnostic_pairs) {
            pairs.push_back({i, j});
        }
        analysis["diagnostic_pairs"] = pairs;
    }
    doc["analysis"] = analysis;
    if (cfg.monte_carlo) {
        json mc = {{"n_paths", cfg.monte_carlo->n_paths},
                   {"threshold", cfg.monte_carlo->threshold},
                   {"sample_paths", cfg.monte_carlo->sample_paths}};
        if (cfg.monte_carlo->master_seed) {
            mc["master_seed"] = *cfg.monte_carlo->master_seed;
        }
        doc["monte_carlo"] = mc;
    }
    doc["output"] = {{"dir", cfg.output.dir}, {"format", std::string(to_string(cfg.output.format))}};
    return doc;
}

namespace {

constexpr std::size_t kN = 21;
constexpr double kDt = 0.01;

ExperimentConfig base_deterministic(std::string name) {
    ExperimentConfig c;
    c.name = std::move(name);
    c.model = ModelKind::second_order_det;
    c.params.n = kN;
    c.params.gamma = 4.0;
    c.grid = TimeGrid::over(5.0, kDt);
    c.output.dir = "out/" + c.name;
    return c;
}

ExperimentConfig base_stochastic(std::string name) {
    ExperimentConfig c;
    c.name = std::move(name);
    c.model = ModelKind::second_order_stoch;
    c.params.n = kN;
    c.params.gamma = 5.0;
    c.params.nu = Ramp{12.0, 0.0};
    // ω₀ = ν^c/γ on every oscillator.
    c.initial.omega = Ramp{12.0 / 5.0, 0.0};
    c.grid = TimeGrid::over(50.0, kDt);
    c.seed = 1;
    c.output.dir = "out/" + c.name;
    return c;
}

double initial_diameter(const ExperimentConfig& c) {
    return diameter(materialize(c.initial.theta, c.params.n));
}

// Phase ramp spanning D(Θ₀) = 4π/3 across 21 oscillators.
constexpr double kWideSlope = 2.0 * std::numbers::pi / 30.0;

}  // namespace

ExperimentConfig figure_preset(std::string_view name) {
    if (name == "fig1") {
        auto c = base_deterministic("fig1");
        c.params.nu = Ramp{128.0, 1e-4};
        c.params.kappa = 0.2;
        c.initial.theta = Ramp{0.0, 4e-3};
        c.initial.omega = Ramp{32.0, 0.0};
        c.theorem = TheoremSpec{0.1, std::nullopt};
        c.analysis.exit_threshold = 0.1;
        c.analysis.diagnostic_pairs = {{21, 1}};
        return c;
    }
    if (name == "fig2a" || name == "fig2c") {
        auto c = base_deterministic(std::string(name));
        c.params.nu = Ramp{128.0, 8.0};
        c.params.kappa = name == "fig2a" ? 1.0 : 50.0;
        c.initial.theta = Ramp{0.0, kWideSlope};
        c.initial.omega = Ramp{32.0, 0.0};
        c.theorem = TheoremSpec{0.1, std::nullopt};
        c.analysis.exit_threshold = initial_diameter(c);
        return c;
    }
    if (name == "fig3") {
        auto c = base_stochastic("fig3");
        c.params.kappa = 0.1;
        c.initial.theta = Ramp{0.0, 4e-3};
        c.noise = NoiseSpec::hyperbolic(50.0);
        c.theorem = TheoremSpec{0.1, std::sqrt(std::log(9.0)) / 50.0};
        c.analysis.exit_threshold = initial_diameter(c);
        c.analysis.diagnostic_pairs = {{21, 1}};
        c.monte_carlo = MonteCarloSpec{5000, 1, initial_diameter(c), 20};
        return c;
    }
    if (name == "fig4a" || name == "fig4b") {
        auto c = base_stochastic(std::string(name));
        c.params.nu = Ramp{12.0, 0.1};
        c.params.kappa = name == "fig4a" ? 1.0 : 5.0;
        c.initial.theta = Ramp{0.0, kWideSlope};
        c.noise = NoiseSpec::hyperbolic(2.0);
        c.analysis.exit_threshold = initial_diameter(c);
        c.monte_carlo = MonteCarloSpec{5000, 1, initial_diameter(c), 20};
        return c;
    }
    std::string known;
    for (const auto& n : preset_names()) {
        known += (known.empty() ? "" : ", ") + n;
    }
    throw InvalidArgument("unknown preset '" + std::string(name) + "' (known: " + known + ")");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig1", "fig2a", "fig2c", "fig3", "fig4a", "fig4b"};
    return names;
}

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
          std::string msg = "invalid configuration:";
          for (const auto& p : problems) {
              msg += "\n  " + p;
          }
          return msg;
      }()),
      problems_(std::move(problems)) {}

}  // namespace winfree
