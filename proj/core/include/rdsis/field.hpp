#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace rdsis {

/// A function sampled at n uniformly spaced nodes x_i = i*dx on [0, L], endpoints included.
class Field1D {
public:
    Field1D(double length, std::vector<double> values);
    /// Samples f at every node.
    static Field1D sample(double length, std::size_t n, const std::function<double(double)>& f);
    static Field1D constant(double length, std::size_t n, double value);

    double length() const noexcept { return length_; }
    std::size_t size() const noexcept { return values_.size(); }
    double dx() const noexcept { return length_ / static_cast<double>(values_.size() - 1); }
    double x(std::size_t i) const noexcept { return static_cast<double>(i) * dx(); }

    const std::vector<double>& values() const noexcept { return values_; }
    std::vector<double>& values() noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    double& operator[](std::size_t i) noexcept { return values_[i]; }

    bool same_grid(const Field1D& other) const noexcept;

    double sup() const;
    double min() const;
    /// Composite trapezoid over [0, L].
    double integral() const;

private:
    double length_;
    std::vector<double> values_;
};

/// Composite trapezoid of samples g with spacing dx.
double trapezoid(const std::vector<double>& g, double dx);

/// Second-order Laplacian with ghost-point reflection at both ends (zero flux).
Field1D laplacian_neumann(const Field1D& f);
/// In-place variant on raw samples; `out` must have the size of `f`.
void laplacian_neumann(const std::vector<double>& f, double dx, std::vector<double>& out);

/// One-sided second-order derivative at x = 0 and x = L.
struct BoundaryFlux {
    double left;
    double right;
};
BoundaryFlux boundary_flux(const Field1D& f);

/// Mean-subtracted L2 variance over the domain (trapezoid weights).
double spatial_variance(const Field1D& f);

}  // namespace rdsis
