#include "rdsis/params.hpp"

#include <algorithm>
#include <cmath>

#include "rdsis/errors.hpp"

namespace rdsis {

double ModelParams::sigma0() const noexcept { return std::min(recovery, mortality); }

double ModelParams::population_bound() const noexcept { return recruitment / sigma0(); }

double ModelParams::disease_free_u() const noexcept { return recruitment / mortality; }

std::vector<std::string> ModelParams::violations() const {
    std::vector<std::string> out;
    auto positive = [&](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x)) out.push_back(std::string(name) + " must be positive");
    };
    auto nonnegative = [&](double x, const char* name) {
        if (!(x >= 0.0) || !std::isfinite(x)) out.push_back(std::string(name) + " must be nonnegative");
    };
    positive(recruitment, "Lambda (recruitment rate)");
    positive(mortality, "mu (natural death rate)");
    positive(transmission, "lambda (transmission rate)");
    positive(recovery, "sigma (recovery rate)");
    nonnegative(diffusion_u, "d1 (susceptible diffusion)");
    nonnegative(diffusion_v, "d2 (infective diffusion)");
    return out;
}

void ModelParams::validate() const {
    const auto v = violations();
    if (!v.empty()) throw DomainError(v.front());
}

int threshold_sign(double r0) noexcept {
    if (std::abs(r0 - 1.0) <= kThresholdTolerance) return 0;
    return r0 < 1.0 ? -1 : 1;
}

}  // namespace rdsis
