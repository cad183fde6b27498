#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

enum class Mode { kOde, kPde };

std::string to_string(Mode m);

/// Built-in incidence family plus its coefficients, as read from a config.
struct IncidenceConfig {
    IncidenceFamily family = IncidenceFamily::kLinear;
    double alpha = 0.0;
    double k = 0.0;

    Incidence build() const;
};

/// Initial data. ODE runs use the scalars; PDE runs parse the expressions in x.
struct InitialData {
    double u = 0.0;
    double v = 0.0;
    std::string u_expr;
    std::string v_expr;
};

struct GridConfig {
    double length = 10.0;
    std::size_t n = 201;
};

struct TimeConfig {
    double t_end = 0.0;
    double dt = 0.0;  // 0 = automatic (PDE) / 1e-3 (ODE)
    double snapshot_every = 0.1;
    std::size_t stride = 100;
};

struct MonitorConfig {
    bool invariant_region = true;
    bool boundedness = true;
    bool lyapunov = true;
    /// Weight of the disease-free functional; empty selects the window's lower end.
    std::optional<double> theta;
    double tolerance = 1e-8;
};

struct OutputConfig {
    std::string dir;
    /// Write every k-th PDE snapshot to CSV.
    std::size_t snapshot_stride = 10;
};

struct ExperimentConfig {
    std::string name = "experiment";
    ModelParams params;
    IncidenceConfig incidence;
    Mode mode = Mode::kOde;
    InitialData initial;
    GridConfig grid;
    TimeConfig time;
    MonitorConfig monitors;
    OutputConfig output;
};

/// Builds a config from a JSON document; throws ConfigError listing every violation.
///
/// Numeric fields accept JSON numbers or fraction strings such as "13/4".
ExperimentConfig parse_config(const nlohmann::json& doc);
/// Parses JSON text; syntax errors report line and column.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// "13/4" -> 3.25, "0.5" -> 0.5. Throws ConfigError otherwise.
double parse_number(const std::string& text);

}  // namespace rdsis
