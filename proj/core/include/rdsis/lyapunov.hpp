#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rdsis/equilibria.hpp"
#include "rdsis/field.hpp"
#include "rdsis/incidence.hpp"
#include "rdsis/params.hpp"

namespace rdsis {

/// Volterra function x - 1 - ln x; zero only at x = 1. Throws DomainError for x <= 0.
double volterra(double x);

struct Lemma2Report {
    bool pass = true;
    std::size_t samples = 0;
    double worst_excess = 0.0;  // max of L(phi(v)/phi(v*)) - L(v/v*)
    std::optional<double> first_violation;
};

/// Checks L(phi(v)/phi(v*)) <= L(v/v*) on every sample, absolute slack 1e-12.
Lemma2Report lemma2_check(const Incidence& inc, double v_star, std::span<const double> samples);

/// Integrand of the disease-free functional at a single state:
/// u v + θ/2 (u - Λ/μ)^2 + v^2/2 + (Λ/σ) v.
double v_theta_point(double u, double v, const ModelParams& p, double theta);

/// Integrand of the endemic functional: u* L(u/u*) + v* L(v/v*).
double v_endemic_point(double u, double v, const Point& endemic);

/// Disease-free functional V_θ over the domain (trapezoid). Throws GridError on mismatch.
double v_theta(const Field1D& u, const Field1D& v, const ModelParams& p, double theta);

/// Endemic functional V over the domain (trapezoid).
/// Throws NonPositiveStateError at the first node with u <= 0 or v <= 0.
double v_endemic(const Field1D& u, const Field1D& v, const Point& endemic);

enum class FunctionalKind { kTheta, kEndemic };

struct LyapunovSeries {
    FunctionalKind kind = FunctionalKind::kEndemic;
    double theta = 1.0;  // meaningful for kTheta only
    std::vector<double> times;
    std::vector<double> values;
};

struct MonotonicityReport {
    bool pass = true;
    double max_increase = 0.0;  // largest forward difference (0 if none positive)
    std::size_t worst_step = 0;
    double allowed = 0.0;
};

inline constexpr double kDefaultMonotonicityTolerance = 1e-8;

/// Passes iff every forward difference is at most tol * max(1, max|V|).
MonotonicityReport monotonicity_check(const LyapunovSeries& series,
                                      double tol = kDefaultMonotonicityTolerance);

}  // namespace rdsis
