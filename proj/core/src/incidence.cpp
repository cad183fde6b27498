#include "rdsis/incidence.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rdsis/errors.hpp"

namespace rdsis {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string("incidence coefficient ") + name + " must be positive and finite");
    }
}

void require_nonnegative_argument(double v) {
    if (!(v >= 0.0)) {
        throw DomainError("incidence evaluated at negative infective density");
    }
}

constexpr double kRelSlack = 1e-12;
constexpr double kAbsSlack = 1e-14;

bool leq(double lhs, double rhs) { return lhs <= rhs + kRelSlack * std::abs(rhs) + kAbsSlack; }

}  // namespace

Incidence Incidence::linear(double alpha) {
    require_positive(alpha, "alpha");
    return Incidence(LinearIncidence{alpha});
}

Incidence Incidence::saturated(double alpha, double k) {
    require_positive(alpha, "alpha");
    require_positive(k, "k");
    return Incidence(SaturatedIncidence{alpha, k});
}

Incidence Incidence::half_saturation(double k, double alpha) {
    require_positive(k, "k");
    require_positive(alpha, "alpha");
    return Incidence(HalfSaturationIncidence{k, alpha});
}

Incidence Incidence::custom(std::function<double(double)> phi, std::function<double(double)> dphi,
                            double slope_at_zero, std::string name) {
    if (!phi || !dphi) {
        throw DomainError("custom incidence needs both phi and its derivative");
    }
    return Incidence(CustomIncidence{std::move(phi), std::move(dphi), slope_at_zero, std::move(name)});
}

double Incidence::phi(double v) const {
    require_nonnegative_argument(v);
    return std::visit(Overloaded{
                          [v](const LinearIncidence& s) { return s.alpha * v; },
                          [v](const SaturatedIncidence& s) { return s.alpha * v / (1.0 + s.k * v); },
                          [v](const HalfSaturationIncidence& s) { return s.k * v / (1.0 + v / s.alpha); },
                          [v](const CustomIncidence& s) { return s.phi(v); },
                      },
                      spec_);
}

double Incidence::dphi(double v) const {
    require_nonnegative_argument(v);
    if (v == 0.0) {
        return slope_at_zero();
    }
    return std::visit(Overloaded{
                          [](const LinearIncidence& s) { return s.alpha; },
                          [v](const SaturatedIncidence& s) {
                              const double d = 1.0 + s.k * v;
                              return s.alpha / (d * d);
                          },
                          [v](const HalfSaturationIncidence& s) {
                              const double d = 1.0 + v / s.alpha;
                              return s.k / (d * d);
                          },
                          [v](const CustomIncidence& s) { return s.dphi(v); },
                      },
                      spec_);
}

double Incidence::slope_at_zero() const noexcept {
    return std::visit(Overloaded{
                          [](const LinearIncidence& s) { return s.alpha; },
                          [](const SaturatedIncidence& s) { return s.alpha; },
                          [](const HalfSaturationIncidence& s) { return s.k; },
                          [](const CustomIncidence& s) { return s.slope_at_zero; },
                      },
                      spec_);
}

IncidenceFamily Incidence::family() const noexcept {
    return static_cast<IncidenceFamily>(spec_.index());
}

std::string Incidence::describe() const {
    std::ostringstream os;
    os.precision(17);
    std::visit(Overloaded{
                   [&](const LinearIncidence& s) { os << "linear(alpha=" << s.alpha << ")"; },
                   [&](const SaturatedIncidence& s) {
                       os << "saturated(alpha=" << s.alpha << ", k=" << s.k << ")";
                   },
                   [&](const HalfSaturationIncidence& s) {
                       os << "half_saturation(k=" << s.k << ", alpha=" << s.alpha << ")";
                   },
                   [&](const CustomIncidence& s) { os << s.name; },
               },
               spec_);
    return os.str();
}

std::string to_string(AdmissibilityCondition c) {
    switch (c) {
        case AdmissibilityCondition::kPositiveDerivativeBound:
            return "0 < v*phi'(v) <= phi(v)";
        case AdmissibilityCondition::kSecantBound:
            return "0 < phi(v)/v <= phi'(0)";
        case AdmissibilityCondition::kExponentialBound:
            return "phi(v) < phi'(0)*exp(v)";
    }
    return "unknown";
}

std::vector<double> log_grid(double v_max, std::size_t n) {
    if (!(v_max > 0.0)) {
        throw DomainError("log_grid needs v_max > 0");
    }
    if (n < 2) {
        throw DomainError("log_grid needs at least two samples");
    }
    constexpr double kDecades = 8.0;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(n - 1);
        grid[i] = v_max * std::pow(10.0, -kDecades * (1.0 - s));
    }
    grid.back() = v_max;
    return grid;
}

AdmissibilityReport check_admissible(const Incidence& inc, double v_max, std::size_t n_samples) {
    AdmissibilityReport report;
    const double slope0 = inc.slope_at_zero();
    report.slope_at_zero_ok = slope0 > 0.0 && std::isfinite(slope0);
    report.vanishes_at_zero = std::abs(inc.phi(0.0)) <= kAbsSlack;

    auto record = [&](AdmissibilityCondition c, double v, double lhs, double rhs) {
        ++report.per_condition[static_cast<std::size_t>(c)];
        ++report.violation_count;
        if (!report.first) {
            report.first = AdmissibilityViolation{c, v, lhs, rhs};
        }
    };

    const auto grid = log_grid(v_max, n_samples);
    report.samples = grid.size();
    for (double v : grid) {
        const double f = inc.phi(v);
        const double df = inc.dphi(v);
        const double vdf = v * df;
        if (!(vdf > 0.0) || !leq(vdf, f)) {
            record(AdmissibilityCondition::kPositiveDerivativeBound, v, vdf, f);
        }
        const double secant = f / v;
        if (!(secant > 0.0) || !leq(secant, slope0)) {
            record(AdmissibilityCondition::kSecantBound, v, secant, slope0);
        }
        // exp(v) overflows to +inf for large v, which satisfies the bound trivially.
        const double envelope = slope0 * std::exp(v);
        if (!(f < envelope + kRelSlack * std::abs(envelope))) {
            record(AdmissibilityCondition::kExponentialBound, v, f, envelope);
        }
    }
    report.pass = report.violation_count == 0 && report.vanishes_at_zero && report.slope_at_zero_ok;
    return report;
}

}  // namespace rdsis
