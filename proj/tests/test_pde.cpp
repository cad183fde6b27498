#include <gtest/gtest.h>

#include <cmath>

#include "rdsis/errors.hpp"
#include "rdsis/field.hpp"
#include "rdsis/ode.hpp"
#include "rdsis/pde.hpp"

using namespace rdsis;

namespace {

const ModelParams kEx1Set1{8, 1, 1.0 / 3, 2, 3, 1.25};

double laplacian_error(std::size_t n) {
    const double L = 10, k = M_PI / L;
    const auto f = Field1D::sample(L, n, [&](double x) { return std::cos(k * x); });
    const auto lap = laplacian_neumann(f);
    double err = 0;
    for (std::size_t i = 0; i < n; ++i) err = std::max(err, std::abs(lap[i] + k * k * std::cos(k * f.x(i))));
    return err;
}

}  // namespace

TEST(Field, Construction) {
    EXPECT_THROW(Field1D(1.0, {1.0, 2.0}), GridError);
    EXPECT_THROW(Field1D(1.0, {1.0, NAN, 2.0}), GridError);
    const auto f = Field1D::sample(10, 201, [](double x) { return x; });
    EXPECT_DOUBLE_EQ(f.dx(), 0.05);
    EXPECT_DOUBLE_EQ(f.sup(), 10.0);
    EXPECT_NEAR(f.integral(), 50.0, 1e-12);
}

TEST(Laplacian, ConstantGivesZero) {
    const auto lap = laplacian_neumann(Field1D::constant(10, 17, 4.2));
    for (double x : lap.values()) EXPECT_EQ(x, 0.0);
}

TEST(Laplacian, CosineEigenfunction) { EXPECT_LE(laplacian_error(401), 1e-4); }

TEST(Laplacian, SecondOrder) {
    const double e1 = laplacian_error(101), e2 = laplacian_error(201);
    EXPECT_GE(e1 / e2, 3.8);
}

TEST(Laplacian, QuadraticInteriorExactBoundaryReflected) {
    const auto f = Field1D::sample(1, 11, [](double x) { return x * x; });
    const auto lap = laplacian_neumann(f);
    for (std::size_t i = 1; i + 1 < f.size(); ++i) EXPECT_NEAR(lap[i], 2.0, 1e-9);
    const double dx = f.dx();
    EXPECT_NEAR(lap[0], 2 * (f[1] - f[0]) / (dx * dx), 1e-12);
    EXPECT_NEAR(lap[10], 2 * (f[9] - f[10]) / (dx * dx), 1e-9);
    EXPECT_GT(std::abs(lap[10] - 2.0), 1.0);
}

TEST(Laplacian, TooSmallGrid) {
    std::vector<double> out;
    EXPECT_THROW(laplacian_neumann(std::vector<double>{1, 2}, 0.1, out), GridError);
}

TEST(Pde, StableStep) {
    EXPECT_NEAR(stable_time_step(kEx1Set1, 0.05), 0.4 * 0.0025 / 6, 1e-15);
    const ModelParams no_diffusion{8, 1, 1.0 / 3, 2, 0, 0};
    EXPECT_GT(stable_time_step(no_diffusion, 0.05), 0.0);
}

TEST(Pde, SnapshotCadence) {
    const auto u0 = Field1D::constant(10, 21, 4), v0 = Field1D::constant(10, 21, 1);
    const auto snaps = integrate_pde(kEx1Set1, Incidence::linear(3), u0, v0, {1.0, 0.25, 0});
    ASSERT_EQ(snaps.size(), 5u);
    for (std::size_t i = 0; i < snaps.size(); ++i) EXPECT_NEAR(snaps[i].t, 0.25 * i, 1e-12);
}

TEST(Pde, ConstantDataFollowsTheOde) {
    const auto inc = Incidence::saturated(13.0 / 4, 0.5);
    const ModelParams p{33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4, 3, 2};
    const auto snaps =
        integrate_pde(p, inc, Field1D::constant(10, 41, 0.2), Field1D::constant(10, 41, 0.6), {5.0, 0.5, 1e-3});
    const auto ode = integrate_ode(p, inc, {0.2, 0.6}, {5.0, 1e-3, 500});
    ASSERT_EQ(snaps.size(), ode.states.size());
    for (std::size_t k = 0; k < snaps.size(); ++k) {
        for (std::size_t i = 0; i < snaps[k].u.size(); ++i) {
            ASSERT_NEAR(snaps[k].u[i], snaps[k].u[0], 1e-12);
            ASSERT_NEAR(snaps[k].v[i], snaps[k].v[0], 1e-12);
        }
        EXPECT_NEAR(snaps[k].u[0], ode.states[k].u, 1e-8);
        EXPECT_NEAR(snaps[k].v[0], ode.states[k].v, 1e-8);
    }
}

TEST(Pde, Example1Set1ShortRunProperties) {
    const auto inc = Incidence::linear(3);
    const auto u0 = Field1D::sample(10, 201, [](double x) { return 4 + std::cos(x) / 10; });
    const auto v0 = Field1D::sample(10, 201, [](double x) { return 5 + std::sin(x) / 10; });
    const auto snaps = integrate_pde(kEx1Set1, inc, u0, v0, {20.0, 0.01, 0});
    EXPECT_TRUE(boundedness_monitor(snaps, kEx1Set1).pass);

    // Mass balance: d/dt ∫(u+v) = |Ω|Λ − ∫(μu + σv).
    for (std::size_t k = 1; k + 1 < snaps.size(); ++k) {
        const double dt = snaps[k + 1].t - snaps[k - 1].t;
        const double lhs = (snaps[k + 1].mass - snaps[k - 1].mass) / dt;
        std::vector<double> loss(snaps[k].u.size());
        for (std::size_t i = 0; i < loss.size(); ++i) loss[i] = 1.0 * snaps[k].u[i] + 2.0 * snaps[k].v[i];
        const double rhs = 10 * 8 - trapezoid(loss, snaps[k].u.dx());
        // Central differences in time: error O(Δt²) relative to the rate.
        ASSERT_NEAR(lhs, rhs, 1e-3 * (1 + std::abs(rhs))) << "t=" << snaps[k].t;
    }

    // Homogenization and zero flux once the initial layer has relaxed.
    double prev = INFINITY;
    for (const auto& s : snaps) {
        const double var = spatial_variance(s.u) + spatial_variance(s.v);
        ASSERT_LE(var, prev * (1 + 1e-9) + 1e-20) << "t=" << s.t;
        prev = var;
        if (s.t >= 1.0) {
            const auto fu = boundary_flux(s.u), fv = boundary_flux(s.v);
            ASSERT_LT(std::max({std::abs(fu.left), std::abs(fu.right), std::abs(fv.left), std::abs(fv.right)}), 1e-6)
                << "t=" << s.t;
        }
    }
}

TEST(Pde, RejectsBadInput) {
    const auto inc = Incidence::linear(3);
    const auto good = Field1D::constant(10, 21, 1.0);
    EXPECT_THROW(integrate_pde(kEx1Set1, inc, good, Field1D::constant(10, 22, 1.0)), GridError);
    EXPECT_THROW(integrate_pde(kEx1Set1, inc, good, Field1D::constant(10, 21, -1.0)), DomainError);
}

TEST(Boundedness, DiseaseFreeConstantIsTight) {
    const ModelParams p{6, 4, 2, 1.5, 3, 1.25};
    const auto snaps =
        integrate_pde(p, Incidence::linear(1.0 / 3), Field1D::constant(10, 21, 1.5), Field1D::constant(10, 21, 0.0),
                      {2.0, 0.5, 0});
    const auto rep = boundedness_monitor(snaps, p);
    EXPECT_TRUE(rep.pass);
    EXPECT_NEAR(rep.worst_sup_u_excess, 0.0, 1e-14);
}

TEST(Boundedness, StartAboveCarryingCapacity) {
    const auto inc = Incidence::linear(3);
    const auto u0 = Field1D::sample(10, 51, [](double x) { return 14 + 2 * std::cos(x); });
    const auto v0 = Field1D::sample(10, 51, [](double x) { return 2 + std::sin(x); });
    const auto snaps = integrate_pde(kEx1Set1, inc, u0, v0, {40.0, 0.5, 0});
    EXPECT_TRUE(boundedness_monitor(snaps, kEx1Set1).pass);
    EXPECT_LE(snaps.back().sup_u, 8.0 + 1e-2);
}

TEST(Boundedness, DetectsGrowth) {
    const ModelParams p{6, 4, 2, 1.5, 3, 1.25};
    std::vector<PdeSnapshot> fake;
    fake.push_back({0, Field1D::constant(10, 5, 1.0), Field1D::constant(10, 5, 0.1), 1.0, 0.1, 11.0});
    fake.push_back({1, Field1D::constant(10, 5, 9.0), Field1D::constant(10, 5, 0.1), 9.0, 0.1, 91.0});
    EXPECT_FALSE(boundedness_monitor(fake, p).pass);
}
