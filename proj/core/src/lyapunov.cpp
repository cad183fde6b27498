#include "rdsis/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rdsis/errors.hpp"

namespace rdsis {

double volterra(double x) {
    if (!(x > 0.0)) throw DomainError("volterra function needs x > 0");
    const double d = x - 1.0;
    return d - std::log1p(d);
}

Lemma2Report lemma2_check(const Incidence& inc, double v_star, std::span<const double> samples) {
    if (!(v_star > 0.0)) throw DomainError("lemma2_check needs v* > 0");
    Lemma2Report r;
    const double phi_star = inc.phi(v_star);
    r.worst_excess = -INFINITY;
    for (double v : samples) {
        const double excess = volterra(inc.phi(v) / phi_star) - volterra(v / v_star);
        r.worst_excess = std::max(r.worst_excess, excess);
        if (excess > 1e-12 && !r.first_violation) r.first_violation = v;
        ++r.samples;
    }
    r.pass = !r.first_violation.has_value();
    return r;
}

double v_theta_point(double u, double v, const ModelParams& p, double theta) {
    const double du = u - p.disease_free_u();
    return u * v + 0.5 * theta * du * du + 0.5 * v * v + (p.recruitment / p.recovery) * v;
}

double v_endemic_point(double u, double v, const Point& endemic) {
    return endemic.u * volterra(u / endemic.u) + endemic.v * volterra(v / endemic.v);
}

double v_theta(const Field1D& u, const Field1D& v, const ModelParams& p, double theta) {
    if (!u.same_grid(v)) throw GridError("V_theta: u and v live on different grids");
    std::vector<double> g(u.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = v_theta_point(u[i], v[i], p, theta);
    return trapezoid(g, u.dx());
}

double v_endemic(const Field1D& u, const Field1D& v, const Point& endemic) {
    if (!u.same_grid(v)) throw GridError("V_endemic: u and v live on different grids");
    std::vector<double> g(u.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!(u[i] > 0.0) || !(v[i] > 0.0)) {
            throw NonPositiveStateError("V_endemic undefined: nonpositive state at node " + std::to_string(i), i);
        }
        g[i] = v_endemic_point(u[i], v[i], endemic);
    }
    return trapezoid(g, u.dx());
}

MonotonicityReport monotonicity_check(const LyapunovSeries& series, double tol) {
    MonotonicityReport r;
    double scale = 1.0;
    for (double x : series.values) scale = std::max(scale, std::abs(x));
    r.allowed = tol * scale;
    for (std::size_t i = 1; i < series.values.size(); ++i) {
        const double inc = series.values[i] - series.values[i - 1];
        if (inc > r.max_increase) {
            r.max_increase = inc;
            r.worst_step = i;
        }
    }
    r.pass = r.max_increase <= r.allowed;
    return r;
}

}  // namespace rdsis
