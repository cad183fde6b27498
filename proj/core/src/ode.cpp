#include "rdsis/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdsis/errors.hpp"
#include "rdsis/rk4.hpp"

namespace rdsis {

namespace {

constexpr double kBlowUp = 1e12;

void check_finite(double u, double v, double t) {
    if (!std::isfinite(u) || !std::isfinite(v) || std::abs(u) > kBlowUp || std::abs(v) > kBlowUp) {
        throw BlowUpError("ODE solution blew up at t = " + std::to_string(t) + " (step too large?)", t);
    }
}

}  // namespace

Derivative rhs_ode(const ModelParams& p, const Incidence& inc, double u, double v) {
    const double infection = p.transmission * u * inc.phi(v);
    return {p.recruitment - p.mortality * u - infection, infection - p.recovery * v};
}

OdeTrajectory integrate_ode(const ModelParams& p, const Incidence& inc, Point initial, const OdeOptions& opt) {
    if (!(initial.u >= 0.0) || !(initial.v >= 0.0)) throw DomainError("ODE initial data must be nonnegative");
    if (!(opt.dt > 0.0)) throw DomainError("ODE step must be positive");
    if (!(opt.t_end > 0.0)) throw DomainError("ODE end time must be positive");
    const std::size_t stride = std::max<std::size_t>(opt.stride, 1);
    const auto steps = static_cast<std::size_t>(std::ceil(opt.t_end / opt.dt - 1e-9));
    const double dt = opt.t_end / static_cast<double>(steps);

    // RK4 stages may probe v slightly below zero near the disease-free state;
    // the incidence is only defined for v >= 0, so the stage value is clamped
    // for evaluation only. The stored state is never modified.
    auto rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        const double infection = p.transmission * y[0] * inc.phi(std::max(y[1], 0.0));
        dy[0] = p.recruitment - p.mortality * y[0] - infection;
        dy[1] = infection - p.recovery * y[1];
    };

    OdeTrajectory out;
    out.states.reserve(steps / stride + 2);
    std::vector<double> y{initial.u, initial.v};
    out.states.push_back({0.0, y[0], y[1]});
    Rk4Stepper stepper(2);
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t0 = static_cast<double>(k - 1) * dt;
        stepper.step(rhs, t0, dt, y);
        const double t = static_cast<double>(k) * dt;
        check_finite(y[0], y[1], t);
        if (k % stride == 0 || k == steps) out.states.push_back({t, y[0], y[1]});
    }
    const Derivative d = rhs_ode(p, inc, y[0], std::max(y[1], 0.0));
    out.final_rhs_norm = std::hypot(d.du, d.dv);
    return out;
}

InvariantRegionReport invariant_region_monitor(const std::vector<OdeState>& traj, const ModelParams& p) {
    InvariantRegionReport r;
    if (traj.empty()) {
        r.pass = false;
        return r;
    }
    const double s0 = p.sigma0();
    const double bound = p.population_bound();
    r.tolerance = 1e-9 * (1.0 + bound);
    const double n0 = traj.front().u + traj.front().v;
    bool ok = true;
    for (const auto& s : traj) {
        const double decay = std::exp(-s0 * (s.t - traj.front().t));
        const double envelope = bound * (1.0 - decay) + n0 * decay;
        r.worst_excess = std::max(r.worst_excess, s.u + s.v - envelope);
        r.most_negative = std::min({r.most_negative, s.u, s.v});
    }
    ok = r.worst_excess <= r.tolerance && r.most_negative >= -r.tolerance;
    r.pass = ok;
    return r;
}

bool converged_to(const std::vector<OdeState>& traj, Point target, double tol) {
    if (traj.empty()) return false;
    const std::size_t tail = std::max<std::size_t>(1, traj.size() / 10);
    for (std::size_t i = traj.size() - tail; i < traj.size(); ++i) {
        const auto& s = traj[i];
        if (!(std::max(std::abs(s.u - target.u), std::abs(s.v - target.v)) < tol)) return false;
    }
    return true;
}

}  // namespace rdsis
