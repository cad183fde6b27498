#include "rdsis/pde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdsis/errors.hpp"
#include "rdsis/rk4.hpp"

namespace rdsis {

namespace {

constexpr double kBlowUp = 1e12;
constexpr double kMaxStep = 1e-3;

PdeSnapshot make_snapshot(double t, double length, const std::vector<double>& y, std::size_t n) {
    Field1D u(length, std::vector<double>(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n)));
    Field1D v(length, std::vector<double>(y.begin() + static_cast<std::ptrdiff_t>(n), y.end()));
    const double sup_u = u.sup();
    const double sup_v = v.sup();
    std::vector<double> total(n);
    for (std::size_t i = 0; i < n; ++i) total[i] = u[i] + v[i];
    const double mass = trapezoid(total, u.dx());
    return PdeSnapshot{t, std::move(u), std::move(v), sup_u, sup_v, mass};
}

}  // namespace

double stable_time_step(const ModelParams& p, double dx) {
    const double d = std::max({p.diffusion_u, p.diffusion_v, 1e-12});
    return std::min(0.4 * dx * dx / (2.0 * d), kMaxStep);
}

std::vector<PdeSnapshot> integrate_pde(const ModelParams& p, const Incidence& inc, const Field1D& u0,
                                       const Field1D& v0, const PdeOptions& opt) {
    if (!u0.same_grid(v0)) throw GridError("initial u and v must share a grid");
    if (u0.min() < 0.0 || v0.min() < 0.0) throw DomainError("PDE initial data must be nonnegative");
    if (!(opt.t_end > 0.0)) throw DomainError("PDE end time must be positive");
    if (!(opt.snapshot_every > 0.0)) throw DomainError("snapshot interval must be positive");

    const std::size_t n = u0.size();
    const double dx = u0.dx();
    const double dt_max = opt.dt > 0.0 ? opt.dt : stable_time_step(p, dx);
    if (!(dt_max > 1e-300) || !std::isfinite(dt_max)) throw GridError("time step underflow");

    std::vector<double> y(2 * n);
    std::copy(u0.values().begin(), u0.values().end(), y.begin());
    std::copy(v0.values().begin(), v0.values().end(), y.begin() + static_cast<std::ptrdiff_t>(n));

    std::vector<double> lap_u(n), lap_v(n), su(n), sv(n);
    const double d1 = p.diffusion_u;
    const double d2 = p.diffusion_v;
    auto rhs = [&](double, const std::vector<double>& s, std::vector<double>& ds) {
        std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n), su.begin());
        std::copy(s.begin() + static_cast<std::ptrdiff_t>(n), s.end(), sv.begin());
        laplacian_neumann(su, dx, lap_u);
        laplacian_neumann(sv, dx, lap_v);
        for (std::size_t i = 0; i < n; ++i) {
            // Stage values may dip marginally below zero; phi is evaluated at the clamp.
            const double infection = p.transmission * su[i] * inc.phi(std::max(sv[i], 0.0));
            ds[i] = d1 * lap_u[i] + p.recruitment - p.mortality * su[i] - infection;
            ds[n + i] = d2 * lap_v[i] + infection - p.recovery * sv[i];
        }
    };

    std::vector<PdeSnapshot> out;
    out.push_back(make_snapshot(0.0, u0.length(), y, n));

    Rk4Stepper stepper(2 * n);
    const auto intervals = static_cast<std::size_t>(std::ceil(opt.t_end / opt.snapshot_every - 1e-9));
    double t = 0.0;
    for (std::size_t k = 1; k <= intervals; ++k) {
        const double t_next = std::min(static_cast<double>(k) * opt.snapshot_every, opt.t_end);
        const double span = t_next - t;
        const auto substeps = static_cast<std::size_t>(std::ceil(span / dt_max - 1e-9));
        const double dt = span / static_cast<double>(std::max<std::size_t>(substeps, 1));
        for (std::size_t s = 0; s < substeps; ++s) {
            stepper.step(rhs, t + static_cast<double>(s) * dt, dt, y);
        }
        t = t_next;
        for (double x : y) {
            if (!std::isfinite(x) || std::abs(x) > kBlowUp) {
                throw BlowUpError("PDE solution blew up before t = " + std::to_string(t), t);
            }
        }
        out.push_back(make_snapshot(t, u0.length(), y, n));
    }
    return out;
}

BoundednessReport boundedness_monitor(const std::vector<PdeSnapshot>& snapshots, const ModelParams& p) {
    BoundednessReport r;
    if (snapshots.empty()) {
        r.pass = false;
        return r;
    }
    constexpr double kRel = 1e-6;
    const auto& first = snapshots.front();
    const double sup_bound = std::max(p.disease_free_u(), first.sup_u);
    const double s0 = p.sigma0();
    const double mass_cap = p.recruitment * first.u.length() / s0;

    for (const auto& s : snapshots) {
        r.worst_sup_u_excess = std::max(r.worst_sup_u_excess, s.sup_u - sup_bound);
        if (s.sup_u > sup_bound + kRel * std::max(1.0, sup_bound)) r.sup_u_ok = false;

        const double decay = std::exp(-s0 * (s.t - first.t));
        const double envelope = mass_cap * (1.0 - decay) + first.mass * decay;
        r.worst_mass_excess = std::max(r.worst_mass_excess, s.mass - envelope);
        if (s.mass > envelope + kRel * std::max(1.0, envelope)) r.mass_ok = false;

        r.most_negative = std::min({r.most_negative, s.u.min(), s.v.min()});
    }
    r.nonnegative_ok = r.most_negative >= -kRel;
    r.pass = r.sup_u_ok && r.mass_ok && r.nonnegative_ok;
    return r;
}

}  // namespace rdsis
