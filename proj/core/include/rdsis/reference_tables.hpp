#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdsis/config.hpp"
#include "rdsis/equilibria.hpp"
#include "rdsis/stability.hpp"

namespace rdsis {

/// One row of the published simulation tables together with the values
/// printed next to it (R0, equilibrium, θ interval).
struct ReferenceCase {
    int table = 0;  // 1: linear, 2: saturated, 3: half-saturation incidence
    Mode mode = Mode::kOde;
    int set = 0;
    ModelParams params;
    IncidenceConfig incidence;
    std::string u0;  // number (ODE) or expression in x (PDE)
    std::string v0;
    double printed_r0 = 0.0;
    Point printed_equilibrium;
    bool endemic = false;
    std::optional<ThetaWindow> printed_theta;
    std::string printed_theta_text;
    /// Allowed |computed - printed| for the θ upper end.
    double theta_hi_tolerance = 1e-4;
    /// Exact upper end where the printed fraction is only approximate.
    std::optional<double> exact_theta_hi;
    std::string note;

    /// e.g. "T2-pde-4"
    std::string id() const;
};

/// All rows of tables 1-3, ODE rows first within each table.
const std::vector<ReferenceCase>& reference_cases();

/// Throws ConfigError for unknown (table, mode, set).
const ReferenceCase& find_reference(int table, Mode mode, int set);

/// Default run configuration for a row: ODE t_end=200, dt=1e-3; PDE L=10,
/// n=201, t_end=100, automatic dt.
ExperimentConfig to_config(const ReferenceCase& rc);

}  // namespace rdsis
