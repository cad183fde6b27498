#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rdsis {

/// phi(v) = alpha * v
struct LinearIncidence {
    double alpha;
};

/// phi(v) = alpha * v / (1 + k v)
struct SaturatedIncidence {
    double alpha;
    double k;
};

/// phi(v) = k v / (1 + v / alpha); the infective density alpha halves the slope.
struct HalfSaturationIncidence {
    double k;
    double alpha;
};

/// User-supplied incidence. The slope at zero is given explicitly so that R0
/// never depends on a finite-difference quotient near v = 0.
struct CustomIncidence {
    std::function<double(double)> phi;
    std::function<double(double)> dphi;
    double slope_at_zero;
    std::string name = "custom";
};

enum class IncidenceFamily { kLinear, kSaturated, kHalfSaturation, kCustom };

/// The per-susceptible infection pressure phi(v) of the transmission term
/// lambda * u * phi(v), together with its derivative.
///
/// Immutable once built; safe to evaluate concurrently.
class Incidence {
public:
    using Variant =
        std::variant<LinearIncidence, SaturatedIncidence, HalfSaturationIncidence, CustomIncidence>;

    static Incidence linear(double alpha);
    static Incidence saturated(double alpha, double k);
    static Incidence half_saturation(double k, double alpha);
    static Incidence custom(std::function<double(double)> phi, std::function<double(double)> dphi,
                            double slope_at_zero, std::string name = "custom");

    /// phi(v); throws DomainError for v < 0.
    double phi(double v) const;
    /// phi'(v); at v = 0 returns slope_at_zero() exactly. Throws DomainError for v < 0.
    double dphi(double v) const;
    /// phi'(0).
    double slope_at_zero() const noexcept;

    IncidenceFamily family() const noexcept;
    bool is_builtin() const noexcept { return family() != IncidenceFamily::kCustom; }
    const Variant& variant() const noexcept { return spec_; }
    std::string describe() const;

private:
    explicit Incidence(Variant spec) : spec_(std::move(spec)) {}
    Variant spec_;
};

enum class AdmissibilityCondition {
    kPositiveDerivativeBound,  // 0 < v phi'(v) <= phi(v)
    kSecantBound,              // 0 < phi(v)/v <= phi'(0)
    kExponentialBound,         // phi(v) < phi'(0) e^v
};

std::string to_string(AdmissibilityCondition c);

struct AdmissibilityViolation {
    AdmissibilityCondition condition;
    double v;
    double lhs;
    double rhs;
};

struct AdmissibilityReport {
    bool pass = true;
    bool vanishes_at_zero = true;     // phi(0) == 0
    bool slope_at_zero_ok = true;     // 0 < phi'(0) < inf
    std::size_t samples = 0;
    std::size_t violation_count = 0;
    std::array<std::size_t, 3> per_condition{};
    /// First violating sample, in grid order.
    std::optional<AdmissibilityViolation> first;

    bool violated(AdmissibilityCondition c) const noexcept {
        return per_condition[static_cast<std::size_t>(c)] > 0;
    }
};

/// Log-spaced sample grid on (0, v_max]: n points spanning eight decades below v_max.
std::vector<double> log_grid(double v_max, std::size_t n);

/// Samples the structural conditions an incidence must satisfy.
///
/// Inequalities are checked with relative slack 1e-12 and absolute floor 1e-14.
/// Violations are reported, never thrown.
AdmissibilityReport check_admissible(const Incidence& inc, double v_max, std::size_t n_samples);

}  // namespace rdsis
