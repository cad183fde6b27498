#pragma once

#include <string>
#include <vector>

namespace rdsis {

/// Epidemiological constants and diffusivities of the SIS reaction-diffusion model
///
///   u_t - d_u Δu = recruitment - mortality u - transmission u phi(v)
///   v_t - d_v Δv = transmission u phi(v) - recovery v
struct ModelParams {
    double recruitment = 0.0;   // Λ
    double mortality = 0.0;     // μ
    double transmission = 0.0;  // λ
    double recovery = 0.0;      // σ
    double diffusion_u = 0.0;   // d1, susceptibles
    double diffusion_v = 0.0;   // d2, infectives

    /// min(recovery, mortality): decay rate of the total population bound.
    double sigma0() const noexcept;
    /// Λ / σ0, the upper edge of the invariant region.
    double population_bound() const noexcept;
    /// Disease-free susceptible level Λ/μ.
    double disease_free_u() const noexcept;
    bool has_diffusion() const noexcept { return diffusion_u > 0.0 || diffusion_v > 0.0; }

    /// Human-readable list of violated invariants; empty when valid.
    std::vector<std::string> violations() const;
    /// Throws DomainError naming the first violated invariant.
    void validate() const;
};

/// Relative window around R0 = 1 treated as the threshold itself.
inline constexpr double kThresholdTolerance = 1e-12;

/// -1 below threshold, 0 at threshold (within kThresholdTolerance), +1 above.
int threshold_sign(double r0) noexcept;

}  // namespace rdsis
