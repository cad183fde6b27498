#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdsis/config.hpp"
#include "rdsis/csv.hpp"
#include "rdsis/equilibria.hpp"
#include "rdsis/lyapunov.hpp"
#include "rdsis/ode.hpp"
#include "rdsis/pde.hpp"
#include "rdsis/reference_tables.hpp"
#include "rdsis/stability.hpp"

namespace rdsis {

inline constexpr int kSpectralModes = 50;

enum class GlobalVerdict {
    kEndemicGlobal,      // R0 > 1: endemic functional certifies E*
    kDiseaseFreeGlobal,  // R0 <= 1 and θ-window nonempty
    kDiseaseFreeLocal,   // R0 <= 1, θ-window empty
};

std::string verdict_code(GlobalVerdict v);
std::string verdict_text(GlobalVerdict v);

struct Analysis {
    EquilibriumReport equilibria;
    OdeStability ode;
    std::optional<PdeStability> pde;
    std::optional<ThetaWindow> window;
    std::optional<std::string> window_error;
    GlobalVerdict verdict = GlobalVerdict::kDiseaseFreeLocal;
};

/// Equilibria, R0, local ODE/PDE classes, θ-window and the global verdict.
Analysis analyze_model(const ExperimentConfig& cfg);

/// JSON analysis document; identical configs produce identical documents.
nlohmann::json analyze(const ExperimentConfig& cfg);
nlohmann::json to_json(const ExperimentConfig& cfg, const Analysis& a);

struct MonitorResult {
    std::string name;
    bool applicable = true;
    bool pass = true;
    nlohmann::json detail;
};

struct RunResult {
    ExperimentConfig config;
    Analysis analysis;
    std::optional<OdeTrajectory> ode;
    std::vector<PdeSnapshot> pde;
    std::optional<LyapunovSeries> lyapunov;
    /// Predicted attractor: E* if R0 > 1, else E0.
    Point attractor;
    /// Sup-norm distance from the attractor at t_end.
    double final_distance = 0.0;
    bool converged = false;
    std::vector<MonitorResult> monitors;
    double elapsed_seconds = 0.0;

    bool pass() const;
    nlohmann::json summary() const;
};

/// Integrates the configured system and runs every enabled monitor.
RunResult simulate(const ExperimentConfig& cfg);

/// Rows of the ODE CSV (t,u,v,N,V_theta,V_endemic) for a finished ODE run.
std::vector<OdeCsvRow> ode_csv_rows(const RunResult& run);

/// Writes trajectory/snapshot CSV and summary.json into `dir` (created if needed).
void write_run_artifacts(const RunResult& run, const std::string& dir);

struct Comparison {
    std::string quantity;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string note;
};

struct ReproduceResult {
    const ReferenceCase* reference = nullptr;
    RunResult run;
    std::vector<Comparison> comparisons;

    bool pass() const;
    nlohmann::json summary() const;
};

/// Compares computed R0, equilibrium and θ-window with the printed values.
std::vector<Comparison> compare_with_reference(const ReferenceCase& rc, const Analysis& a);

/// Runs one reference row; writes artifacts when `out_dir` is non-empty.
ReproduceResult reproduce(const ReferenceCase& rc, const std::string& out_dir = {});

/// Runs every row concurrently; results in table order. Also writes
/// `out_dir/batch_summary.csv` when `out_dir` is non-empty.
std::vector<ReproduceResult> reproduce_all(const std::string& out_dir = {});

struct SweepRow {
    double value = 0.0;
    Analysis analysis;
};

/// Parameter names accepted by sweep().
const std::vector<std::string>& sweep_parameters();

/// Sets the named parameter (Lambda, mu, lambda, sigma, d1, d2, alpha, k).
/// Throws ConfigError for unknown names.
void set_parameter(ExperimentConfig& cfg, const std::string& name, double value);

/// Analysis at each value of one parameter, run concurrently, rows in input order.
std::vector<SweepRow> sweep(const ExperimentConfig& cfg, const std::string& param, const std::vector<double>& values);

/// Columns: <param>,R0,E0_u,E0_v,Estar_u,Estar_v,ode_E0,ode_Estar,pde_E0,pde_Estar,theta_lo,theta_hi,verdict.
/// Empty cells where a quantity does not exist.
void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows);

struct VerifyResult {
    AdmissibilityReport admissibility;
    RunResult run;
    bool pass() const { return admissibility.pass && run.pass(); }
    nlohmann::json summary() const;
};

/// Admissibility of the incidence plus a full monitored simulation.
VerifyResult verify(const ExperimentConfig& cfg);

/// Worker count from RDSIS_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rdsis
