#include "rdsis/field.hpp"

#include <algorithm>
#include <cmath>

#include "rdsis/errors.hpp"

namespace rdsis {

Field1D::Field1D(double length, std::vector<double> values) : length_(length), values_(std::move(values)) {
    if (!(length > 0.0)) throw GridError("field needs a positive domain length");
    if (values_.size() < 3) throw GridError("field needs at least 3 grid points");
    for (double x : values_) {
        if (!std::isfinite(x)) throw GridError("field values must be finite");
    }
}

Field1D Field1D::sample(double length, std::size_t n, const std::function<double(double)>& f) {
    if (n < 3) throw GridError("field needs at least 3 grid points");
    std::vector<double> vals(n);
    const double dx = length / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) vals[i] = f(static_cast<double>(i) * dx);
    return Field1D(length, std::move(vals));
}

Field1D Field1D::constant(double length, std::size_t n, double value) {
    return Field1D(length, std::vector<double>(n, value));
}

bool Field1D::same_grid(const Field1D& other) const noexcept {
    return size() == other.size() && length_ == other.length_;
}

double Field1D::sup() const { return *std::max_element(values_.begin(), values_.end()); }

double Field1D::min() const { return *std::min_element(values_.begin(), values_.end()); }

double Field1D::integral() const { return trapezoid(values_, dx()); }

double trapezoid(const std::vector<double>& g, double dx) {
    if (g.size() < 2) return 0.0;
    double s = 0.5 * (g.front() + g.back());
    for (std::size_t i = 1; i + 1 < g.size(); ++i) s += g[i];
    return s * dx;
}

void laplacian_neumann(const std::vector<double>& f, double dx, std::vector<double>& out) {
    const std::size_t n = f.size();
    if (n < 3) throw GridError("Neumann Laplacian needs at least 3 grid points");
    const double inv = 1.0 / (dx * dx);
    // Ghost nodes f[-1] = f[1] and f[n] = f[n-2].
    out[0] = 2.0 * (f[1] - f[0]) * inv;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        out[i] = (f[i - 1] - 2.0 * f[i] + f[i + 1]) * inv;
    }
    out[n - 1] = 2.0 * (f[n - 2] - f[n - 1]) * inv;
}

Field1D laplacian_neumann(const Field1D& f) {
    std::vector<double> out(f.size());
    laplacian_neumann(f.values(), f.dx(), out);
    return Field1D(f.length(), std::move(out));
}

BoundaryFlux boundary_flux(const Field1D& f) {
    const auto& g = f.values();
    const std::size_t n = g.size();
    const double h = f.dx();
    return {(-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h),
            (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * h)};
}

double spatial_variance(const Field1D& f) {
    const double mean = f.integral() / f.length();
    std::vector<double> sq(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = f[i] - mean;
        sq[i] = d * d;
    }
    return trapezoid(sq, f.dx()) / f.length();
}

}  // namespace rdsis
