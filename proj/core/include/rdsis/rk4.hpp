#pragma once

#include <cstddef>
#include <vector>

namespace rdsis {

/// Classical fourth-order Runge-Kutta on a flat state vector.
///
/// `rhs(t, y, dydt)` writes the derivative into `dydt` (same size as y).
/// Stage buffers are kept between steps, so one stepper per integration.
class Rk4Stepper {
public:
    explicit Rk4Stepper(std::size_t n) : k1_(n), k2_(n), k3_(n), k4_(n), tmp_(n) {}

    template <class Rhs>
    void step(Rhs&& rhs, double t, double dt, std::vector<double>& y) {
        const std::size_t n = y.size();
        rhs(t, y, k1_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k1_[i];
        rhs(t + 0.5 * dt, tmp_, k2_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + 0.5 * dt * k2_[i];
        rhs(t + 0.5 * dt, tmp_, k3_);
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * k3_[i];
        rhs(t + dt, tmp_, k4_);
        const double w = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += w * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
        }
    }

private:
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

}  // namespace rdsis
