#include "rdsis/reference_tables.hpp"

#include "rdsis/errors.hpp"

namespace rdsis {

namespace {

ModelParams params(double cap, double mu, double lam, double sig, double d1 = 0.0, double d2 = 0.0) {
    return ModelParams{cap, mu, lam, sig, d1, d2};
}

IncidenceConfig linear(double alpha) { return {IncidenceFamily::kLinear, alpha, 0.0}; }
IncidenceConfig saturated(double alpha, double k) { return {IncidenceFamily::kSaturated, alpha, k}; }
IncidenceConfig half_saturation(double k, double alpha) { return {IncidenceFamily::kHalfSaturation, alpha, k}; }

std::vector<ReferenceCase> build() {
    std::vector<ReferenceCase> rows;
    auto add = [&](int table, Mode mode, int set, ModelParams p, IncidenceConfig inc, std::string u0, std::string v0,
                   double r0, Point eq, bool endemic) -> ReferenceCase& {
        ReferenceCase rc;
        rc.table = table;
        rc.mode = mode;
        rc.set = set;
        rc.params = p;
        rc.incidence = inc;
        rc.u0 = std::move(u0);
        rc.v0 = std::move(v0);
        rc.printed_r0 = r0;
        rc.printed_equilibrium = eq;
        rc.endemic = endemic;
        rows.push_back(std::move(rc));
        return rows.back();
    };
    const auto ode = Mode::kOde;
    const auto pde = Mode::kPde;

    // Table 1, phi(v) = alpha v.
    add(1, ode, 1, params(8, 1, 1.0 / 3, 2), linear(3), "6", "1.5", 4, {2, 3}, true);
    add(1, ode, 2, params(6, 4, 2, 1.5), linear(1.0 / 3), "6", "1.5", 0.8333, {1.5, 0}, false);
    add(1, pde, 1, params(8, 1, 1.0 / 3, 2, 3, 1.25), linear(3), "4 + cos(x)/10", "5 + sin(x)/10", 4, {2, 3}, true);
    {
        auto& rc = add(1, pde, 2, params(6, 4, 2, 1.5, 3, 1.25), linear(1.0 / 3), "4 + cos(x)/10", "5 + sin(x)/10",
                       0.8333, {1.5, 0}, false);
        rc.printed_theta = ThetaWindow{289.0 / 240, 17.0 / 6};
        rc.printed_theta_text = "[289/240, 17/6]";
    }

    // Table 2, phi(v) = alpha v / (1 + k v).
    add(2, ode, 1, params(33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4), saturated(13.0 / 4, 0.5), "0.2", "4.3", 5.5611,
        {2.5289, 2.2617}, true);
    add(2, ode, 2, params(5, 4, 2, 1), saturated(1.0 / 3, 7), "0.2", "4.3", 0.8333, {1.25, 0}, false);
    add(2, ode, 3, params(33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4), saturated(13.0 / 4, 0.5), "8", "10", 5.5611,
        {2.5289, 2.2617}, true);
    add(2, ode, 4, params(5, 4, 2, 1), saturated(1.0 / 3, 7), "8", "10", 0.8333, {1.25, 0}, false);
    add(2, pde, 1, params(33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4, 3, 2), saturated(13.0 / 4, 0.5), "0.2 + cos(x)/10",
        "0.6 + sin(x)/10", 5.5611, {2.5289, 2.2617}, true);
    add(2, pde, 2, params(33.0 / 4, 5.0 / 4, 7.0 / 12, 9.0 / 4, 3, 2), saturated(13.0 / 4, 3), "4 + cos(x)/10",
        "5 + sin(x)/10", 5.5611, {4.7823, 1.0098}, true);
    {
        auto& rc = add(2, pde, 3, params(5, 4, 2, 1, 3, 2), saturated(1.0 / 3, 2.0 / 3), "0.2 + cos(x)/10",
                       "0.6 + sin(x)/10", 0.8333, {1.25, 0}, false);
        rc.printed_theta = ThetaWindow{25.0 / 24, 2};
        rc.printed_theta_text = "[25/24, 2]";
    }
    {
        auto& rc = add(2, pde, 4, params(5, 4, 2, 1, 3.5, 1.25), saturated(1.0 / 3, 7), "0.2 + cos(x)/10",
                       "0.6 + sin(x)/10", 0.8333, {1.25, 0}, false);
        rc.printed_theta = ThetaWindow{361.0 / 280, 2};
        rc.printed_theta_text = "[361/280, 2]";
    }

    // Table 3, phi(v) = k v / (1 + v / alpha). Its printed caption names
    // example 2, but the rows parameterize the half-saturation system.
    add(3, ode, 1, params(6, 1.0 / 3, 1, 3), half_saturation(2, 2), "0.8", "1.2", 12, {2.7692, 1.6923}, true);
    add(3, ode, 2, params(0.75, 3.0 / 7, 0.5, 2), half_saturation(4.0 / 3, 1), "0.4", "6", 0.5833, {1.75, 0}, false);
    add(3, ode, 3, params(8, 2.0 / 3, 1, 3), half_saturation(2, 2), "0.2", "4", 8, {3, 2}, true);
    add(3, ode, 4, params(0.6, 3.0 / 7, 0.5, 2), half_saturation(1.2, 1), "0.2", "3", 0.42, {1.4, 0}, false);
    add(3, pde, 1, params(6, 1.0 / 3, 1, 3, 3, 1.25), half_saturation(2, 2), "4 + cos(x)/10", "5 + sin(x)/10", 12,
        {2.7692, 1.6923}, true);
    add(3, pde, 2, params(6, 1.0 / 3, 1, 3, 5, 2), half_saturation(2, 2), "0.6 + cos(x)/7", "0.4 + sin(x)/8", 12,
        {2.7692, 1.6923}, true);
    add(3, pde, 3, params(8, 2.0 / 3, 1, 3, 2, 1), half_saturation(2, 2), "2.6 + cos(x)/7", "2.4 + sin(x)/8", 8,
        {3, 2}, true);
    {
        auto& rc = add(3, pde, 4, params(0.75, 3.0 / 7, 0.5, 2, 3, 1.25), half_saturation(4.0 / 3, 1),
                       "4 + cos(x)/10", "5 + sin(x)/10", 0.5833, {1.75, 0}, false);
        rc.printed_theta = ThetaWindow{289.0 / 240, 394.0 / 211};
        rc.printed_theta_text = "[289/240, 394/211]";
        rc.exact_theta_hi = 183.0 / 98;
        rc.theta_hi_tolerance = 5e-5;
        rc.note = "printed upper end 394/211 differs from the exact 183/98 by 4.8e-5";
    }
    {
        auto& rc = add(3, pde, 5, params(0.6, 3.0 / 7, 0.5, 2, 3.25, 2), half_saturation(1.2, 1), "0.6 + cos(x)/7",
                       "0.4 + sin(x)/8", 0.42, {1.4, 0}, false);
        rc.printed_theta = ThetaWindow{441.0 / 416, 1831.0 / 684};
        rc.printed_theta_text = "[441/416, 1831/684]";
        rc.exact_theta_hi = 787.0 / 294;
        rc.note = "printed upper end 1831/684 differs from the exact 787/294 by 3.0e-5";
    }
    return rows;
}

}  // namespace

std::string ReferenceCase::id() const {
    return "T" + std::to_string(table) + "-" + to_string(mode) + "-" + std::to_string(set);
}

const std::vector<ReferenceCase>& reference_cases() {
    static const std::vector<ReferenceCase> rows = build();
    return rows;
}

const ReferenceCase& find_reference(int table, Mode mode, int set) {
    for (const auto& rc : reference_cases()) {
        if (rc.table == table && rc.mode == mode && rc.set == set) return rc;
    }
    throw ConfigError({"no reference row for table " + std::to_string(table) + ", " + to_string(mode) + " set " +
                       std::to_string(set)});
}

ExperimentConfig to_config(const ReferenceCase& rc) {
    ExperimentConfig cfg;
    cfg.name = rc.id();
    cfg.params = rc.params;
    cfg.incidence = rc.incidence;
    cfg.mode = rc.mode;
    if (rc.mode == Mode::kOde) {
        cfg.initial.u = parse_number(rc.u0);
        cfg.initial.v = parse_number(rc.v0);
        cfg.time.t_end = 200.0;
        cfg.time.dt = 1e-3;
        cfg.time.stride = 100;
    } else {
        cfg.initial.u_expr = rc.u0;
        cfg.initial.v_expr = rc.v0;
        cfg.grid = {10.0, 201};
        cfg.time.t_end = 100.0;
        cfg.time.dt = 0.0;
        cfg.time.snapshot_every = 0.1;
    }
    return cfg;
}

}  // namespace rdsis
