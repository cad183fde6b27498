#include "rdsis/stability.hpp"

#include <cmath>
#include <numbers>

#include "rdsis/errors.hpp"

namespace rdsis {

namespace {

StabilityClass classify_by_sign(int sign) {
    if (sign < 0) return StabilityClass::kStable;
    if (sign == 0) return StabilityClass::kNonHyperbolicStable;
    return StabilityClass::kUnstable;
}

StabilityClass routh_hurwitz(double trace, double det) {
    return (trace < 0.0 && det > 0.0) ? StabilityClass::kStable : StabilityClass::kUnstable;
}

}  // namespace

std::string to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::kStable:
            return "stable";
        case StabilityClass::kNonHyperbolicStable:
            return "non_hyperbolic_paper_stable";
        case StabilityClass::kUnstable:
            return "unstable";
    }
    return "unknown";
}

Matrix2 jacobian_at(const ModelParams& p, const Incidence& inc, double u, double v) {
    const double f = inc.phi(v);
    const double df = inc.dphi(v);
    const double lam = p.transmission;
    return {-lam * f - p.mortality, -lam * u * df, lam * f, lam * u * df - p.recovery};
}

OdeStability ode_local_stability(const ModelParams& p, const Incidence& inc) {
    const double r0 = basic_reproduction_number(p, inc);
    const Point e0 = disease_free_equilibrium(p);
    OdeStability out{classify_by_sign(threshold_sign(r0)), std::nullopt,
                     jacobian_at(p, inc, e0.u, e0.v), std::nullopt};
    if (const auto root = find_endemic(p, inc)) {
        const Matrix2 j = jacobian_at(p, inc, root->point.u, root->point.v);
        out.jacobian_endemic = j;
        out.endemic = routh_hurwitz(j.trace(), j.det());
    }
    return out;
}

NeumannSpectrum::NeumannSpectrum(double length, int modes) : length_(length) {
    if (!(length > 0.0)) throw DomainError("spectrum needs a positive interval length");
    if (modes < 0) throw DomainError("spectrum needs a nonnegative mode count");
    eigenvalues_.reserve(static_cast<std::size_t>(modes) + 1);
    for (int i = 0; i <= modes; ++i) {
        const double k = i * std::numbers::pi / length;
        eigenvalues_.push_back(k * k);
    }
}

PdeStability pde_spectral_check(const ModelParams& p, const Incidence& inc, const NeumannSpectrum& spectrum) {
    const double d1 = p.diffusion_u;
    const double d2 = p.diffusion_v;
    const double r0 = basic_reproduction_number(p, inc);
    const double growth = p.transmission * p.disease_free_u() * inc.slope_at_zero() - p.recovery;

    PdeStability out;
    // r_i2 is largest at λ_0 = 0, where it equals σ(R0 - 1).
    out.disease_free = classify_by_sign(threshold_sign(r0));

    const auto root = find_endemic(p, inc);
    std::optional<Matrix2> j0;
    if (root) {
        const auto [us, vs] = root->point;
        j0 = jacobian_at(p, inc, us, vs);
        out.h0 = -d1 * p.transmission * us * inc.dphi(vs) + d1 * p.recovery +
                 d2 * (p.transmission * inc.phi(vs) + p.mortality);
        out.h0_lower_bound = d2 * p.recruitment / us;
    }

    bool endemic_ok = j0.has_value() && j0->trace() < 0.0;
    for (double ev : spectrum.eigenvalues()) {
        SpectralMode m;
        m.eigenvalue = ev;
        m.r1 = -d1 * ev - p.mortality;
        m.r2 = -d2 * ev + growth;
        if (j0) {
            m.trace_endemic = -ev * (d1 + d2) + j0->trace();
            m.det_endemic = d1 * d2 * ev * ev + ev * *out.h0 + j0->det();
            endemic_ok = endemic_ok && *m.trace_endemic < 0.0 && *m.det_endemic > 0.0;
        }
        out.modes.push_back(m);
    }
    if (j0) {
        // Modes beyond the truncation keep trace_i decreasing and det_i growing
        // whenever H0 > 0, so the finite check extends to the whole spectrum.
        endemic_ok = endemic_ok && *out.h0 > 0.0;
        out.endemic = endemic_ok ? StabilityClass::kStable : StabilityClass::kUnstable;
    }
    return out;
}

double theta_lower_bound(const ModelParams& p) {
    const double d1 = p.diffusion_u;
    const double d2 = p.diffusion_v;
    if (d1 == 0.0 && d2 == 0.0) return 1.0;
    if (d1 == 0.0 || d2 == 0.0) {
        throw DomainError("theta window needs both diffusivities positive (or both zero)");
    }
    if (d1 == d2) return 1.0;
    const double s = d1 + d2;
    return s * s / (4.0 * d1 * d2);
}

double theta_upper_bound(const ModelParams& p, const Incidence& inc) {
    const double mu = p.mortality;
    const double sig = p.recovery;
    const double cap = p.recruitment;
    return (mu / cap) * ((mu + sig) / (p.transmission * inc.slope_at_zero()) - cap / sig);
}

std::optional<ThetaWindow> theta_window(const ModelParams& p, const Incidence& inc) {
    const ThetaWindow w{theta_lower_bound(p), theta_upper_bound(p, inc)};
    if (w.lo <= w.hi) return w;
    return std::nullopt;
}

double gradient_form_discriminant(const ModelParams& p, double theta) {
    const double s = p.diffusion_u + p.diffusion_v;
    return s * s - 4.0 * theta * p.diffusion_u * p.diffusion_v;
}

}  // namespace rdsis
