#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rdsis/errors.hpp"
#include "rdsis/lyapunov.hpp"
#include "rdsis/ode.hpp"

using namespace rdsis;

TEST(Volterra, Values) {
    EXPECT_EQ(volterra(1.0), 0.0);
    EXPECT_NEAR(volterra(std::exp(1.0)), std::exp(1.0) - 2, 1e-15);
    EXPECT_NEAR(volterra(0.5), std::log(2.0) - 0.5, 1e-15);
    EXPECT_NEAR(volterra(0.5), 0.19315, 1e-5);
}

TEST(Volterra, DomainError) {
    EXPECT_THROW(volterra(0.0), DomainError);
    EXPECT_THROW(volterra(-2.0), DomainError);
}

TEST(Volterra, PositiveAwayFromOne) {
    for (double x : {1e-300, 1e-8, 0.999999, 1.000001, 3.0, 1e8}) EXPECT_GT(volterra(x), 0.0) << x;
}

TEST(Volterra, ConvexOnRandomPairs) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> expo(std::log(1e-3), std::log(1e3));
    for (int i = 0; i < 5000; ++i) {
        const double x = std::exp(expo(rng)), y = std::exp(expo(rng));
        const double tangent = volterra(y) + (1 - 1 / y) * (x - y);
        EXPECT_GE(volterra(x), tangent - 1e-12 * (1 + std::abs(tangent))) << x << " " << y;
    }
}

TEST(Lemma2, LinearIsEquality) {
    const auto grid = log_grid(100, 1000);
    const auto rep = lemma2_check(Incidence::linear(2.5), 1.7, grid);
    EXPECT_TRUE(rep.pass);
    EXPECT_LE(std::abs(rep.worst_excess), 1e-13);
}

TEST(Lemma2, SaturatedPasses) {
    const auto grid = log_grid(100, 1000);
    const auto rep = lemma2_check(Incidence::saturated(13.0 / 4, 0.5), 2.2617, grid);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.samples, 1000u);
}

TEST(Lemma2, BothSidesVanishAtTheEquilibrium) {
    const std::vector<double> at{2.2617};
    const auto rep = lemma2_check(Incidence::saturated(13.0 / 4, 0.5), 2.2617, at);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.worst_excess, 0.0);
}

TEST(Lemma2, SquareViolates) {
    const auto sq = Incidence::custom([](double v) { return v * v; }, [](double v) { return 2 * v; }, 0.0);
    EXPECT_FALSE(lemma2_check(sq, 1.0, log_grid(10, 200)).pass);
}

TEST(VTheta, VanishesAtDiseaseFree) {
    const ModelParams p{6, 4, 2, 1.5, 3, 1.25};
    EXPECT_EQ(v_theta(Field1D::constant(10, 21, 1.5), Field1D::constant(10, 21, 0.0), p, 1.3), 0.0);
}

TEST(VTheta, ConstantInfectives) {
    const ModelParams p{6, 4, 2, 1.5, 3, 1.25};
    const double c = 0.8;
    const double expected = 10 * (c * 6 / 4 + c * c / 2 + c * 6 / 1.5);
    EXPECT_NEAR(v_theta(Field1D::constant(10, 33, 1.5), Field1D::constant(10, 33, c), p, 2.0), expected, 1e-12);
}

TEST(VTheta, PointFormula) {
    const ModelParams p{6, 4, 2, 1.5, 0, 0};
    const double u = 2.2, v = 0.3, th = 1.7;
    EXPECT_NEAR(v_theta_point(u, v, p, th), u * v + th / 2 * (u - 1.5) * (u - 1.5) + v * v / 2 + 4 * v, 1e-14);
}

TEST(VEndemic, ZeroOnlyAtEquilibrium) {
    const Point e{2, 3};
    EXPECT_EQ(v_endemic(Field1D::constant(10, 11, 2), Field1D::constant(10, 11, 3), e), 0.0);
    auto u = Field1D::constant(10, 11, 2);
    u[5] = 2 + 1e-6;
    EXPECT_GT(v_endemic(u, Field1D::constant(10, 11, 3), e), 0.0);
}

TEST(VEndemic, DoubledSusceptibles) {
    const double got = v_endemic(Field1D::constant(10, 51, 4), Field1D::constant(10, 51, 3), Point{2, 3});
    EXPECT_NEAR(got, 20 * (1 - std::log(2.0)), 1e-12);
    EXPECT_NEAR(got, 6.1371, 1e-4);
}

TEST(VEndemic, NonpositiveStateNamesThePoint) {
    auto v = Field1D::constant(10, 11, 3);
    v[7] = 0.0;
    try {
        v_endemic(Field1D::constant(10, 11, 2), v, Point{2, 3});
        FAIL() << "expected NonPositiveStateError";
    } catch (const NonPositiveStateError& e) {
        EXPECT_EQ(e.index(), 7u);
    }
}

TEST(VEndemic, GridMismatch) {
    EXPECT_THROW(v_endemic(Field1D::constant(10, 11, 2), Field1D::constant(10, 12, 3), Point{2, 3}), GridError);
}

TEST(Quadrature, SecondOrderOnSmoothFields) {
    const ModelParams p{6, 4, 2, 1.5, 3, 1.25};
    auto value = [&](std::size_t n) {
        const auto u = Field1D::sample(10, n, [](double x) { return 1.5 + 0.4 * std::sin(0.7 * x); });
        const auto v = Field1D::sample(10, n, [](double x) { return 0.5 + 0.2 * std::sin(1.3 * x + 0.2); });
        return std::pair{v_theta(u, v, p, 1.25), v_endemic(u, v, Point{1.4, 0.6})};
    };
    const auto a = value(41), b = value(81), c = value(161);
    const double order_theta = std::log2(std::abs(a.first - b.first) / std::abs(b.first - c.first));
    const double order_endemic = std::log2(std::abs(a.second - b.second) / std::abs(b.second - c.second));
    EXPECT_GE(order_theta, 1.9);
    EXPECT_GE(order_endemic, 1.9);
}

TEST(Monotonicity, ConstantSeriesPasses) {
    const LyapunovSeries s{FunctionalKind::kEndemic, 1.0, {0, 1, 2, 3}, {5, 5, 5, 5}};
    const auto rep = monotonicity_check(s);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.max_increase, 0.0);
}

TEST(Monotonicity, IncreasingSeriesFails) {
    const LyapunovSeries s{FunctionalKind::kEndemic, 1.0, {0, 1, 2}, {1, 2, 3}};
    const auto rep = monotonicity_check(s);
    EXPECT_FALSE(rep.pass);
    EXPECT_EQ(rep.max_increase, 1.0);
}

TEST(Monotonicity, ToleranceIsRelative) {
    const LyapunovSeries s{FunctionalKind::kTheta, 1.0, {0, 1, 2}, {1e4, 1e4 + 5e-5, 9e3}};
    EXPECT_TRUE(monotonicity_check(s, 1e-8).pass);
    EXPECT_FALSE(monotonicity_check(s, 1e-10).pass);
}

TEST(LyapunovProperty, EndemicFunctionalDecreasesAlongOdeTrajectories) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> expo(std::log(0.1), std::log(10.0));
    auto draw = [&] { return std::exp(expo(rng)); };
    int tested = 0;
    while (tested < 20) {
        const ModelParams p{draw(), draw(), draw(), draw(), 0, 0};
        const Incidence inc = tested % 3 == 0   ? Incidence::linear(draw())
                              : tested % 3 == 1 ? Incidence::saturated(draw(), draw())
                                                : Incidence::half_saturation(draw(), draw());
        const auto e = find_endemic(p, inc);
        if (!e) continue;
        const Point x0{draw(), draw()};
        // Keep RK4 inside its stability region: dt times a Jacobian bound stays below 1/2.
        const double n_max = std::max(x0.u + x0.v, p.population_bound());
        const double rate = p.transmission * inc.dphi(0.0) * n_max + p.transmission * inc.phi(n_max) + p.mortality +
                            p.recovery;
        const double dt = std::min(1e-3, 0.5 / rate);
        const auto traj = integrate_ode(p, inc, x0, {20.0, dt, static_cast<std::size_t>(0.01 / dt) + 1});
        LyapunovSeries s{FunctionalKind::kEndemic, 1.0, {}, {}};
        for (const auto& st : traj.states) {
            s.times.push_back(st.t);
            s.values.push_back(v_endemic_point(st.u, st.v, e->point));
        }
        EXPECT_TRUE(monotonicity_check(s).pass) << p.recruitment << " " << inc.describe();
        ++tested;
    }
}
