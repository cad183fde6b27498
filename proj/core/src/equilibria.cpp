#include "rdsis/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "rdsis/errors.hpp"

namespace rdsis {

namespace {

constexpr double kInitialEps = 1e-6;
constexpr int kMaxEpsHalvings = 60;
constexpr int kMaxBisections = 200;
constexpr int kMaxNewton = 20;
constexpr double kResidualTarget = 1e-10;

}  // namespace

double basic_reproduction_number(const ModelParams& p, const Incidence& inc) {
    return p.recruitment * p.transmission * inc.slope_at_zero() / (p.mortality * p.recovery);
}

Point disease_free_equilibrium(const ModelParams& p) { return {p.disease_free_u(), 0.0}; }

double endemic_residual(const ModelParams& p, const Incidence& inc, double v) {
    if (!(v > 0.0)) {
        throw DomainError("endemic residual h(v) requires v > 0");
    }
    // Factored as (λ phi/μ)(Λ/(σ v) - 1) - 1, which equals the textbook form
    // but avoids subtracting two large terms when R0 is large.
    const double pressure = p.transmission * inc.phi(v) / p.mortality;
    return pressure * (p.recruitment / (p.recovery * v) - 1.0) - 1.0;
}

std::optional<EndemicRoot> find_endemic(const ModelParams& p, const Incidence& inc) {
    const double r0 = basic_reproduction_number(p, inc);
    if (threshold_sign(r0) <= 0) {
        return std::nullopt;
    }
    auto h = [&](double v) { return endemic_residual(p, inc, v); };

    double lo = kInitialEps;
    int halvings = 0;
    while (!(h(lo) > 0.0)) {
        if (++halvings > kMaxEpsHalvings) {
            throw ConvergenceError("could not bracket the endemic root: h(eps) stayed nonpositive");
        }
        lo *= 0.5;
    }
    double hi = p.population_bound();
    if (!(h(hi) < 0.0)) {
        throw ConvergenceError("could not bracket the endemic root: h(Lambda/sigma0) is not negative");
    }

    EndemicRoot root;
    root.bracket_lo = lo;
    root.bracket_hi = hi;

    // h is strictly decreasing for admissible incidences.
    double a = lo;
    double b = hi;
    while (root.bisection_steps < kMaxBisections) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        ++root.bisection_steps;
        const double hm = h(mid);
        if (hm == 0.0) {
            a = b = mid;
            break;
        }
        (hm > 0.0 ? a : b) = mid;
        if (b - a <= 1e-13 * b) break;
    }

    double v = 0.5 * (a + b);
    double hv = h(v);
    for (int it = 0; it < kMaxNewton && hv != 0.0; ++it) {
        const double step = 1e-7 * std::max(1.0, v);
        const double lo_probe = std::max(v - step, 0.5 * v);
        const double slope = (h(v + step) - h(lo_probe)) / (v + step - lo_probe);
        if (!(slope < 0.0) || !std::isfinite(slope)) break;
        double next = v - hv / slope;
        if (!(next > 0.0) || next < a || next > b) break;
        const double hn = h(next);
        if (std::abs(hn) >= std::abs(hv)) break;
        ++root.newton_steps;
        v = next;
        hv = hn;
        if (hv > 0.0) a = std::max(a, v);
        else b = std::min(b, v);
    }

    root.residual = std::abs(hv);
    if (!(root.residual <= kResidualTarget)) {
        throw ConvergenceError("endemic root did not reach |h(v*)| <= 1e-10");
    }
    root.point = {p.recovery * v / (p.transmission * inc.phi(v)), v};
    return root;
}

std::optional<Point> closed_form_endemic(const ModelParams& p, const Incidence& inc) {
    if (!inc.is_builtin()) {
        throw UnsupportedFamilyError("no closed-form endemic equilibrium for " + inc.describe());
    }
    const double r0 = basic_reproduction_number(p, inc);
    if (threshold_sign(r0) <= 0) {
        return std::nullopt;
    }
    const double lam = p.transmission;
    const double mu = p.mortality;
    const double sig = p.recovery;
    const auto& spec = inc.variant();
    if (const auto* s = std::get_if<LinearIncidence>(&spec)) {
        return Point{sig / (lam * s->alpha), mu * (r0 - 1.0) / (lam * s->alpha)};
    }
    if (const auto* s = std::get_if<SaturatedIncidence>(&spec)) {
        const double v = mu * (r0 - 1.0) / (lam * s->alpha + s->k * mu);
        return Point{sig * (1.0 + s->k * v) / (lam * s->alpha), v};
    }
    const auto& s = std::get<HalfSaturationIncidence>(spec);
    const double v = mu * s.alpha * (r0 - 1.0) / (lam * s.alpha * s.k + mu);
    return Point{sig * (s.alpha + v) / (lam * s.alpha * s.k), v};
}

EquilibriumReport analyze_equilibria(const ModelParams& p, const Incidence& inc) {
    EquilibriumReport r;
    r.disease_free = disease_free_equilibrium(p);
    r.r0 = basic_reproduction_number(p, inc);
    r.endemic = find_endemic(p, inc);
    return r;
}

}  // namespace rdsis
