#pragma once

#include "winfree/integrate.hpp"
#include "winfree/model.hpp"
#include "winfree/noise.hpp"
#include "winfree/time_grid.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace winfree {

inline constexpr int kSchemaVersion = 1;

enum class ModelKind { first_order, second_order_det, second_order_stoch };

/// value_i = center + slope (i - (N+1)/2) for i = 1..N.
struct Ramp {
    double center = 0.0;
    double slope = 0.0;
    bool operator==(const Ramp&) const = default;
};

/// Either explicit per-oscillator values or a linear ramp.
using VectorSpec = std::variant<std::vector<double>, Ramp>;

[[nodiscard]] std::vector<double> materialize(const VectorSpec& spec, std::size_t n);

struct ParamsSpec {
    std::size_t n = 1;
    VectorSpec nu = Ramp{};
    double kappa = 0.0;
    double gamma = 1.0;
    double inertia = 1.0;
    bool unnormalized_coupling = false;
    bool operator==(const ParamsSpec&) const = default;
};

struct InitialSpec {
    VectorSpec theta = Ramp{};
    VectorSpec omega = Ramp{};
    bool operator==(const InitialSpec&) const = default;
};

/// Constants for the phase-locking condition checks.
struct TheoremSpec {
    double big_d = 0.1;
    std::optional<double> delta;
    bool operator==(const TheoremSpec&) const = default;
};

struct AnalysisSpec {
    bool rotation = true;
    std::optional<double> exit_threshold;
    /// 1-based oscillator pairs for the R^{ij} / Q^{ij} series.
    std::vector<std::pair<std::size_t, std::size_t>> diagnostic_pairs;
    bool operator==(const AnalysisSpec&) const = default;
};

struct MonteCarloSpec {
    std::size_t n_paths = 1;
    std::optional<std::uint64_t> master_seed;
    double threshold = 0.0;
    /// Number of paths written out in full for plotting.
    std::size_t sample_paths = 20;
    bool operator==(const MonteCarloSpec&) const = default;
};

enum class OutputFormat { csv, json };

struct OutputSpec {
    std::string dir = "out";
    OutputFormat format = OutputFormat::csv;
    bool operator==(const OutputSpec&) const = default;
};

struct ExperimentConfig {
    int schema_version = kSchemaVersion;
    std::string name;
    ModelKind model = ModelKind::second_order_det;
    ParamsSpec params;
    InitialSpec initial;
    TimeGrid grid;
    Scheme scheme = Scheme::euler;
    /// Seed of the single Brownian path used by `simulate` on a stochastic model.
    std::optional<std::uint64_t> seed;
    std::optional<NoiseSpec> noise;
    std::optional<TheoremSpec> theorem;
    AnalysisSpec analysis;
    std::optional<MonteCarloSpec> monte_carlo;
    OutputSpec output;

    [[nodiscard]] SystemParams system() const;
    [[nodiscard]] State initial_state() const;

    bool operator==(const ExperimentConfig&) const = default;
};

[[nodiscard]] std::string_view to_string(ModelKind kind);
[[nodiscard]] std::string_view to_string(OutputFormat format);

/// Validate a configuration document against the version-1 schema. A
/// document of the form {"preset": name, ...} starts from that preset and
/// applies the remaining keys as a JSON merge patch. Unknown keys are
/// rejected; all problems are reported together in a ConfigError.
[[nodiscard]] ExperimentConfig parse_config(const nlohmann::json& doc);
[[nodiscard]] ExperimentConfig parse_config_text(std::string_view text);

[[nodiscard]] nlohmann::json emit_config(const ExperimentConfig& config);

/// Built-in figure presets: fig1, fig2a, fig2c, fig3, fig4a, fig4b.
[[nodiscard]] ExperimentConfig figure_preset(std::string_view name);
[[nodiscard]] const std::vector<std::string>& preset_names();

}  // namespace winfree
