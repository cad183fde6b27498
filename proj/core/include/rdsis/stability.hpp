#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdsis/equilibria.hpp"
#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

struct Matrix2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    double trace() const noexcept { return a11 + a22; }
    double det() const noexcept { return a11 * a22 - a12 * a21; }
    bool operator==(const Matrix2&) const = default;
};

enum class StabilityClass {
    kStable,
    /// A zero eigenvalue at R0 = 1; linearization is inconclusive but the
    /// disease-free state is still attracting.
    kNonHyperbolicStable,
    kUnstable,
};

std::string to_string(StabilityClass c);

/// Jacobian of the reaction terms at (u, v).
Matrix2 jacobian_at(const ModelParams& p, const Incidence& inc, double u, double v);

struct OdeStability {
    StabilityClass disease_free;
    std::optional<StabilityClass> endemic;
    Matrix2 jacobian_disease_free;
    std::optional<Matrix2> jacobian_endemic;
};

/// Local stability of E0 (eigenvalues -μ and σ(R0 - 1)) and of E* (trace < 0, det > 0).
OdeStability ode_local_stability(const ModelParams& p, const Incidence& inc);

/// Neumann eigenvalues of -Δ on (0, L): λ_i = (iπ/L)^2, i = 0..modes.
class NeumannSpectrum {
public:
    NeumannSpectrum(double length, int modes);

    double length() const noexcept { return length_; }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }

private:
    double length_;
    std::vector<double> eigenvalues_;
};

struct SpectralMode {
    double eigenvalue = 0.0;
    double r1 = 0.0;  // E0 eigenvalues of J_i(E0) (triangular)
    double r2 = 0.0;
    std::optional<double> trace_endemic;  // J_i(E*)
    std::optional<double> det_endemic;
};

struct PdeStability {
    StabilityClass disease_free;
    std::optional<StabilityClass> endemic;
    /// H0 = -d1 λ u* phi'(v*) + d1 σ + d2 (λ phi(v*) + μ), linear coefficient of det_i.
    std::optional<double> h0;
    /// d2 Λ / u*, the lower bound H0 must dominate.
    std::optional<double> h0_lower_bound;
    std::vector<SpectralMode> modes;
};

/// Stability of E0 and E* against every Neumann mode in `spectrum`.
PdeStability pde_spectral_check(const ModelParams& p, const Incidence& inc, const NeumannSpectrum& spectrum);

struct ThetaWindow {
    double lo;
    double hi;
};

/// (d1+d2)^2 / (4 d1 d2) for positive diffusivities, 1 for the ODE case.
/// Throws DomainError if exactly one diffusivity is zero.
double theta_lower_bound(const ModelParams& p);

/// (μ/Λ) ((μ+σ)/(λ phi'(0)) - Λ/σ): the largest weight for which the
/// disease-free Lyapunov functional decreases.
double theta_upper_bound(const ModelParams& p, const Incidence& inc);

/// Admissible weights θ for the disease-free Lyapunov functional; empty if none.
std::optional<ThetaWindow> theta_window(const ModelParams& p, const Incidence& inc);

/// Discriminant (d1+d2)^2 - 4 θ d1 d2 of the gradient quadratic form
/// d1 θ |a|^2 + (d1+d2) a b + d2 |b|^2; nonpositive iff the form is PSD.
double gradient_form_discriminant(const ModelParams& p, double theta);

}  // namespace rdsis
