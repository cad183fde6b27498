#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rdsis/field.hpp"
#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

struct PdeSnapshot {
    double t = 0.0;
    Field1D u;
    Field1D v;
    double sup_u = 0.0;
    double sup_v = 0.0;
    double mass = 0.0;  // ∫(u + v) dx
};

struct PdeOptions {
    double t_end = 100.0;
    double snapshot_every = 1.0;
    /// 0 selects the diffusive stability step (see stable_time_step).
    double dt = 0.0;
};

/// Largest step in the stability margin: 0.4 dx^2 / (2 max(d1, d2, 1e-12)), capped at 1e-3.
double stable_time_step(const ModelParams& p, double dx);

/// Method of lines with ghost-point Neumann boundaries, stepped by RK4.
///
/// Snapshots are taken at t = 0, every `snapshot_every`, and at t_end; the
/// step is shrunk so that snapshot times are hit exactly.
/// Throws BlowUpError on NaN or sup-norm > 1e12, GridError on mismatched grids
/// or an unusable step.
std::vector<PdeSnapshot> integrate_pde(const ModelParams& p, const Incidence& inc, const Field1D& u0,
                                       const Field1D& v0, const PdeOptions& opt = {});

struct BoundednessReport {
    bool pass = true;
    bool sup_u_ok = true;
    bool mass_ok = true;
    bool nonnegative_ok = true;
    double worst_sup_u_excess = -INFINITY;
    double worst_mass_excess = -INFINITY;
    double most_negative = 0.0;
};

/// sup u(t) <= max(Λ/μ, sup u0); mass(t) below its exponential envelope;
/// u, v >= 0. All with 1e-6 relative slack.
BoundednessReport boundedness_monitor(const std::vector<PdeSnapshot>& snapshots, const ModelParams& p);

}  // namespace rdsis
