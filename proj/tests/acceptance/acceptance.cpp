// Acceptance suite: one pass/fail line per criterion.
//   rdsis_acceptance [--criterion N]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "rdsis/equilibria.hpp"
#include "rdsis/experiment.hpp"
#include "rdsis/field.hpp"
#include "rdsis/lyapunov.hpp"
#include "rdsis/ode.hpp"
#include "rdsis/pde.hpp"
#include "rdsis/reference_tables.hpp"
#include "rdsis/stability.hpp"

using namespace rdsis;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Incidence incidence_of(const ReferenceCase& rc) { return rc.incidence.build(); }

// Printed reproduction numbers, keyed by row id.
const std::map<std::string, double> kPrintedR0{
    {"T1-ode-1", 4},      {"T1-ode-2", 0.8333}, {"T1-pde-1", 4},      {"T1-pde-2", 0.8333},
    {"T2-ode-1", 5.5611}, {"T2-ode-2", 0.8333}, {"T2-ode-3", 5.5611}, {"T2-ode-4", 0.8333},
    {"T2-pde-1", 5.5611}, {"T2-pde-2", 5.5611}, {"T2-pde-3", 0.8333}, {"T2-pde-4", 0.8333},
    {"T3-ode-1", 12},     {"T3-ode-2", 0.5833}, {"T3-ode-3", 8},      {"T3-ode-4", 0.42},
    {"T3-pde-1", 12},     {"T3-pde-2", 12},     {"T3-pde-3", 8},      {"T3-pde-4", 0.5833},
    {"T3-pde-5", 0.42}};

Outcome ac1() {
    Outcome o;
    double worst = 0, slowest = 0;
    for (const auto& rc : reference_cases()) {
        const auto inc = incidence_of(rc);
        const auto t0 = Clock::now();
        const double r0 = basic_reproduction_number(rc.params, inc);
        const double dt = seconds_since(t0);
        const double err = std::abs(r0 - kPrintedR0.at(rc.id()));
        worst = std::max(worst, err);
        slowest = std::max(slowest, dt);
        if (err > 1e-4) o.fail(fmt("%s: R0 = %.10g, printed %.4f", rc.id().c_str(), r0, kPrintedR0.at(rc.id())));
        if (dt >= 1e-3) o.fail(fmt("%s: %.3g s", rc.id().c_str(), dt));
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + fmt("worst error %.3g, slowest %.2g s", worst, slowest);
    return o;
}

Outcome ac2() {
    Outcome o;
    struct Expect {
        int table;
        Mode mode;
        int set;
        Point printed;
    };
    const std::vector<Expect> endemic{{1, Mode::kOde, 1, {2, 3}},
                                      {2, Mode::kOde, 1, {2.5289, 2.2617}},
                                      {2, Mode::kPde, 2, {4.7823, 1.0098}},
                                      {3, Mode::kOde, 1, {2.7692, 1.6923}},
                                      {3, Mode::kOde, 3, {3, 2}}};
    const std::vector<Expect> disease_free{{1, Mode::kOde, 2, {1.5, 0}},
                                           {2, Mode::kOde, 2, {1.25, 0}},
                                           {3, Mode::kOde, 2, {1.75, 0}},
                                           {3, Mode::kOde, 4, {1.4, 0}}};
    double worst_printed = 0, worst_closed = 0, slowest = 0;
    for (const auto& e : endemic) {
        const auto& rc = find_reference(e.table, e.mode, e.set);
        const auto inc = incidence_of(rc);
        const auto t0 = Clock::now();
        const auto root = find_endemic(rc.params, inc);
        const double dt = seconds_since(t0);
        slowest = std::max(slowest, dt);
        const auto closed = closed_form_endemic(rc.params, inc);
        if (!root || !closed) {
            o.fail(rc.id() + ": no endemic equilibrium");
            continue;
        }
        const double dp = std::max(std::abs(root->point.u - e.printed.u), std::abs(root->point.v - e.printed.v));
        const double dc = std::max(std::abs(root->point.u - closed->u), std::abs(root->point.v - closed->v));
        worst_printed = std::max(worst_printed, dp);
        worst_closed = std::max(worst_closed, dc);
        if (dp > 1e-3) o.fail(fmt("%s: (%.6f, %.6f) vs printed", rc.id().c_str(), root->point.u, root->point.v));
        if (dc > 1e-8) o.fail(fmt("%s: closed form differs by %.3g", rc.id().c_str(), dc));
        if (dt >= 1e-2) o.fail(fmt("%s: %.3g s", rc.id().c_str(), dt));
    }
    for (const auto& e : disease_free) {
        const auto& rc = find_reference(e.table, e.mode, e.set);
        const auto e0 = disease_free_equilibrium(rc.params);
        // Exact means the correctly rounded Λ/μ; printed decimals such as 1.4 need not be representable.
        const bool exact = e0.u == rc.params.recruitment / rc.params.mortality && e0.v == 0.0;
        if (!exact || std::abs(e0.u - e.printed.u) > 1e-12) {
            o.fail(fmt("%s: E0 = (%.17g, %g)", rc.id().c_str(), e0.u, e0.v));
        }
        if (find_endemic(rc.params, incidence_of(rc))) o.fail(rc.id() + ": unexpected endemic equilibrium");
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + fmt("printed %.2g, closed form %.2g, slowest %.2g s", worst_printed,
                                                     worst_closed, slowest);
    return o;
}

Outcome ac3() {
    Outcome o;
    struct Expect {
        int set_table, set;
        double lo;
        std::optional<double> hi;
        std::optional<double> exact_hi;
        double hi_tol;
    };
    const std::vector<Expect> rows{{1, 2, 289.0 / 240, 17.0 / 6, std::nullopt, 1e-4},
                                   {2, 3, 25.0 / 24, 2.0, std::nullopt, 1e-4},
                                   {2, 4, 361.0 / 280, 2.0, std::nullopt, 1e-4},
                                   {3, 5, 441.0 / 416, 1831.0 / 684, std::nullopt, 1e-4},
                                   {3, 4, 289.0 / 240, 394.0 / 211, 183.0 / 98, 5e-5}};
    std::string note;
    for (const auto& e : rows) {
        const auto& rc = find_reference(e.set_table, Mode::kPde, e.set);
        const auto w = theta_window(rc.params, incidence_of(rc));
        if (!w) {
            o.fail(rc.id() + ": empty window");
            continue;
        }
        if (std::abs(w->lo - e.lo) > 1e-9) o.fail(fmt("%s: lo %.12g vs %.12g", rc.id().c_str(), w->lo, e.lo));
        if (e.exact_hi && std::abs(w->hi - *e.exact_hi) > 1e-9) {
            o.fail(fmt("%s: hi %.12g vs exact %.12g", rc.id().c_str(), w->hi, *e.exact_hi));
        }
        if (e.hi && std::abs(w->hi - *e.hi) > e.hi_tol) {
            o.fail(fmt("%s: hi %.8g vs printed %.8g", rc.id().c_str(), w->hi, *e.hi));
        }
        if (e.exact_hi) note = fmt("%s upper end %.8g, printed %.8g (diff %.2g)", rc.id().c_str(), w->hi, *e.hi,
                                   std::abs(w->hi - *e.hi));
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + note;
    return o;
}

Outcome ac4() {
    Outcome o;
    double worst = 0, slowest = 0;
    for (const auto& rc : reference_cases()) {
        if (rc.mode != Mode::kOde) continue;
        const auto run = simulate(to_config(rc));
        worst = std::max(worst, run.final_distance);
        slowest = std::max(slowest, run.elapsed_seconds);
        if (!run.converged) o.fail(fmt("%s: distance %.3g", rc.id().c_str(), run.final_distance));
        if (run.elapsed_seconds >= 1.0) o.fail(fmt("%s: %.2f s", rc.id().c_str(), run.elapsed_seconds));
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + fmt("worst final distance %.2g, slowest %.3f s", worst, slowest);
    return o;
}

Outcome ac5() {
    Outcome o;
    double worst = 0, slowest = 0;
    for (const auto& rc : reference_cases()) {
        if (rc.mode != Mode::kPde) continue;
        const auto cfg = to_config(rc);
        if (cfg.grid.n != 201 || cfg.grid.length != 10 || cfg.time.t_end != 100) o.fail(rc.id() + ": wrong geometry");
        const auto run = simulate(cfg);
        worst = std::max(worst, run.final_distance);
        slowest = std::max(slowest, run.elapsed_seconds);
        if (!(run.final_distance < 1e-2)) o.fail(fmt("%s: sup distance %.3g", rc.id().c_str(), run.final_distance));
        if (run.elapsed_seconds >= 30.0) o.fail(fmt("%s: %.1f s", rc.id().c_str(), run.elapsed_seconds));
        std::printf("  %s distance %.3g in %.2f s\n", rc.id().c_str(), run.final_distance, run.elapsed_seconds);
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + fmt("worst sup distance %.2g, slowest %.1f s", worst, slowest);
    return o;
}

Outcome ac6() {
    Outcome o;
    int checked = 0;
    double worst = 0;
    for (const auto& rc : reference_cases()) {
        const auto run = simulate(to_config(rc));
        const auto& a = run.analysis;
        const bool expect_endemic = a.equilibria.r0 > 1;
        if (!run.lyapunov) {
            if (expect_endemic || a.window) o.fail(rc.id() + ": no Lyapunov series");
            continue;
        }
        const auto& s = *run.lyapunov;
        const auto want = expect_endemic ? FunctionalKind::kEndemic : FunctionalKind::kTheta;
        if (s.kind != want) o.fail(rc.id() + ": wrong functional");
        if (!expect_endemic && a.window && s.theta != a.window->lo) o.fail(rc.id() + ": theta is not the lower end");
        const auto rep = monotonicity_check(s, 1e-8);
        worst = std::max(worst, rep.max_increase / rep.allowed);
        ++checked;
        if (!rep.pass) o.fail(fmt("%s: increase %.3g > %.3g", rc.id().c_str(), rep.max_increase, rep.allowed));
    }
    o.detail = (o.pass ? "" : o.detail + "; ") +
               fmt("%d trajectories, worst increase/allowance %.2g", checked, worst);
    return o;
}

Outcome ac7() {
    Outcome o;
    int runs = 0;
    for (const auto& rc : reference_cases()) {
        const auto run = simulate(to_config(rc));
        ++runs;
        for (const auto& m : run.monitors) {
            if ((m.name == "invariant_region" || m.name == "boundedness") && !(m.applicable && m.pass)) {
                o.fail(rc.id() + ": " + m.name);
            }
        }
        if (rc.mode != Mode::kOde) continue;
        // Same system started at N(0) = 2Λ/σ0, outside the invariant region.
        const double n0 = 2 * rc.params.population_bound();
        const auto traj = integrate_ode(rc.params, incidence_of(rc), {0.5 * n0, 0.5 * n0});
        const auto rep = invariant_region_monitor(traj.states, rc.params);
        ++runs;
        if (!rep.pass) o.fail(rc.id() + ": Gronwall envelope violated from outside start");
        const auto& last = traj.states.back();
        if (last.u + last.v > rc.params.population_bound() + 1e-6) o.fail(rc.id() + ": did not enter the region");
    }
    {
        const auto& rc = find_reference(1, Mode::kPde, 1);
        const double n0 = 2 * rc.params.population_bound();
        const auto u0 = Field1D::sample(10, 201, [&](double x) { return 0.5 * n0 + std::cos(x); });
        const auto v0 = Field1D::sample(10, 201, [&](double x) { return 0.5 * n0 + std::sin(x); });
        const auto snaps = integrate_pde(rc.params, incidence_of(rc), u0, v0, {40.0, 0.1, 0.0});
        ++runs;
        if (!boundedness_monitor(snaps, rc.params).pass) o.fail("outside-start PDE run: boundedness");
    }
    o.detail = (o.pass ? "" : o.detail + "; ") + fmt("%d runs including outside starts", runs);
    return o;
}

Outcome ac8() {
    Outcome o;
    const auto& rc = find_reference(1, Mode::kOde, 1);
    const auto inc = incidence_of(rc);
    auto final_state = [&](double dt) {
        const auto tr = integrate_ode(rc.params, inc, {6, 1.5}, {10.0, dt, 1u << 30});
        return tr.states.back();
    };
    const double dt = 0.2;
    const auto ref = final_state(dt / 16), a = final_state(dt), b = final_state(dt / 2);
    const double rk_order = std::log2(std::hypot(a.u - ref.u, a.v - ref.v) / std::hypot(b.u - ref.u, b.v - ref.v));
    if (!(rk_order >= 3.8)) o.fail(fmt("RK4 order %.3f", rk_order));

    auto lap_err = [](std::size_t n) {
        const double k = M_PI / 10;
        const auto f = Field1D::sample(10, n, [&](double x) { return std::cos(k * x); });
        const auto lap = laplacian_neumann(f);
        double e = 0;
        for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(lap[i] + k * k * std::cos(k * f.x(i))));
        return e;
    };
    const double lap_order = std::log2(lap_err(101) / lap_err(201));
    if (!(lap_order >= 1.9)) o.fail(fmt("Laplacian order %.3f", lap_order));

    const auto& pr = find_reference(2, Mode::kPde, 1);
    const auto pinc = incidence_of(pr);
    const auto snaps = integrate_pde(pr.params, pinc, Field1D::constant(10, 201, 0.2), Field1D::constant(10, 201, 0.6),
                                     {10.0, 1.0, 1e-4});
    const auto ode = integrate_ode(pr.params, pinc, {0.2, 0.6}, {10.0, 1e-4, 10000});
    double gap = 0;
    for (std::size_t k = 0; k < snaps.size() && k < ode.states.size(); ++k) {
        for (std::size_t i = 0; i < snaps[k].u.size(); ++i) {
            gap = std::max({gap, std::abs(snaps[k].u[i] - ode.states[k].u), std::abs(snaps[k].v[i] - ode.states[k].v)});
        }
    }
    if (snaps.size() != ode.states.size()) o.fail("snapshot/state count mismatch");
    if (!(gap <= 1e-8)) o.fail(fmt("ODE/PDE gap %.3g", gap));
    o.detail = (o.pass ? "" : o.detail + "; ") +
               fmt("RK4 order %.3f, Laplacian order %.3f, ODE/PDE gap %.2g", rk_order, lap_order, gap);
    return o;
}

Outcome ac9() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> expo(std::log(0.1), std::log(10.0));
    auto draw = [&] { return std::exp(expo(rng)); };
    double worst = 0;
    int endemic = 0;
    for (int family = 0; family < 3; ++family) {
        for (int i = 0; i < 200; ++i) {
            const ModelParams p{draw(), draw(), draw(), draw(), 0, 0};
            const Incidence inc = family == 0   ? Incidence::linear(draw())
                                  : family == 1 ? Incidence::saturated(draw(), draw())
                                                : Incidence::half_saturation(draw(), draw());
            const double r0 = basic_reproduction_number(p, inc);
            const auto root = find_endemic(p, inc);
            const auto closed = closed_form_endemic(p, inc);
            if (root.has_value() != closed.has_value()) {
                o.fail(fmt("%s R0=%.6g: root finder and closed form disagree on existence", inc.describe().c_str(), r0));
                continue;
            }
            if (root) {
                ++endemic;
                const double d = std::max(std::abs(root->point.u - closed->u), std::abs(root->point.v - closed->v));
                worst = std::max(worst, d);
                if (d > 1e-8) o.fail(fmt("%s R0=%.6g: difference %.3g", inc.describe().c_str(), r0, d));
            }
            const auto s = ode_local_stability(p, inc);
            const int sign = threshold_sign(r0);
            const bool ok = sign < 0   ? s.disease_free == StabilityClass::kStable && !s.endemic
                            : sign > 0 ? s.disease_free == StabilityClass::kUnstable && s.endemic &&
                                             *s.endemic == StabilityClass::kStable
                                       : s.disease_free == StabilityClass::kNonHyperbolicStable;
            if (!ok) o.fail(fmt("%s R0=%.6g: stability classes inconsistent", inc.describe().c_str(), r0));
        }
    }
    o.detail = (o.pass ? "" : o.detail + "; ") +
               fmt("600 sets, %d endemic, worst root/closed-form gap %.2g", endemic, worst);
    return o;
}

Outcome ac10() {
    Outcome o;
    struct Family {
        Incidence inc;
        double v_star;
    };
    const std::vector<Family> families{{Incidence::linear(3), 3.0},
                                       {Incidence::saturated(13.0 / 4, 0.5), 2.2617},
                                       {Incidence::half_saturation(2, 2), 1.6923}};
    const auto grid = log_grid(100, 10000);
    for (const auto& f : families) {
        const auto adm = check_admissible(f.inc, 100, 10000);
        if (!adm.pass || adm.samples != 10000) o.fail(f.inc.describe() + ": admissibility");
        const auto lem = lemma2_check(f.inc, f.v_star, grid);
        if (!lem.pass || lem.samples != 10000) o.fail(f.inc.describe() + ": Volterra comparison");
    }
    const auto square = Incidence::custom([](double v) { return v * v; }, [](double v) { return 2 * v; }, 0.0, "v^2");
    const auto rep = check_admissible(square, 10, 10000);
    if (rep.pass || !rep.violated(AdmissibilityCondition::kPositiveDerivativeBound)) {
        o.fail("v^2 was not rejected by the derivative bound");
    }
    o.detail = (o.pass ? "" : o.detail + "; ") +
               fmt("3 families x 10000 samples; v^2 rejected with %zu violations", rep.violation_count);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"R0 reproduction", ac1},
        {"equilibrium reproduction", ac2},
        {"theta-window reproduction", ac3},
        {"ODE convergence", ac4},
        {"PDE convergence", ac5},
        {"Lyapunov monotonicity", ac6},
        {"invariant region and boundedness", ac7},
        {"numerical order", ac8},
        {"oracle equivalence", ac9},
        {"admissibility suite", ac10}};
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "unknown criterion %d\n", only);
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i) + 1 != only) continue;
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        std::printf("AC%zu %s: %s (%s)\n", i + 1, out.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    out.detail.c_str());
        std::fflush(stdout);
        all = all && out.pass;
    }
    return all ? 0 : 1;
}
