#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rdsis/equilibria.hpp"
#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

struct OdeState {
    double t = 0.0;
    double u = 0.0;
    double v = 0.0;
};

struct Derivative {
    double du = 0.0;
    double dv = 0.0;
};

/// (Λ - μu - λ u phi(v), -σ v + λ u phi(v))
Derivative rhs_ode(const ModelParams& p, const Incidence& inc, double u, double v);

struct OdeOptions {
    double t_end = 200.0;
    double dt = 1e-3;
    /// Record every `stride`-th step (the final step is always recorded).
    std::size_t stride = 100;
};

struct OdeTrajectory {
    std::vector<OdeState> states;
    /// Euclidean norm of the right-hand side at the final state.
    double final_rhs_norm = 0.0;
};

/// Fixed-step RK4 for the spatially homogeneous system.
///
/// Throws BlowUpError if a component turns NaN or exceeds 1e12.
OdeTrajectory integrate_ode(const ModelParams& p, const Incidence& inc, Point initial, const OdeOptions& opt = {});

struct InvariantRegionReport {
    bool pass = true;
    /// Largest N(t) - envelope(t) observed (negative when strictly inside).
    double worst_excess = -INFINITY;
    double most_negative = 0.0;  // min over u, v
    double tolerance = 0.0;
};

/// N(t) <= Λ/σ0 (1 - e^{-σ0 t}) + N(0) e^{-σ0 t} + tol and u, v >= -tol,
/// with tol = 1e-9 (1 + Λ/σ0).
InvariantRegionReport invariant_region_monitor(const std::vector<OdeState>& traj, const ModelParams& p);

/// max(|u - target.u|, |v - target.v|) < tol over the final 10% of samples.
bool converged_to(const std::vector<OdeState>& traj, Point target, double tol = 1e-3);

}  // namespace rdsis
