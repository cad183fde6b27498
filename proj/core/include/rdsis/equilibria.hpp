#pragma once

#include <optional>

#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

/// A spatially constant state (susceptible u, infective v).
struct Point {
    double u = 0.0;
    double v = 0.0;
};

/// Outcome of the endemic root search on h(v).
struct EndemicRoot {
    Point point;
    double bracket_lo = 0.0;  // bisection bracket actually used
    double bracket_hi = 0.0;
    double residual = 0.0;    // |h(v*)|
    int bisection_steps = 0;
    int newton_steps = 0;
};

struct EquilibriumReport {
    Point disease_free;
    double r0 = 0.0;
    std::optional<EndemicRoot> endemic;
};

/// R0 = Λ λ phi'(0) / (μ σ), the spectral radius of the next-generation matrix.
double basic_reproduction_number(const ModelParams& p, const Incidence& inc);

/// (Λ/μ, 0)
Point disease_free_equilibrium(const ModelParams& p);

/// Reduced endemic condition: h(v) = (Λλ/(μσ)) phi(v)/v - (λ/μ) phi(v) - 1.
///
/// Zeros of h for v > 0 are exactly the infective levels of endemic equilibria.
/// Throws DomainError for v <= 0.
double endemic_residual(const ModelParams& p, const Incidence& inc, double v);

/// Locates the endemic equilibrium by bisection on [eps, Λ/σ0] followed by a
/// Newton polish (central-difference slope). Empty when R0 <= 1.
///
/// Throws ConvergenceError if no positive h(eps) is found after 60 halvings of eps.
std::optional<EndemicRoot> find_endemic(const ModelParams& p, const Incidence& inc);

/// Analytic endemic equilibrium for the built-in families; empty when R0 <= 1.
/// Throws UnsupportedFamilyError for custom incidences.
std::optional<Point> closed_form_endemic(const ModelParams& p, const Incidence& inc);

EquilibriumReport analyze_equilibria(const ModelParams& p, const Incidence& inc);

}  // namespace rdsis
