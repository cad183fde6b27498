#include "rdsis/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "rdsis/errors.hpp"
#include "rdsis/expression.hpp"

namespace rdsis {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return {{"u", p.u}, {"v", p.v}}; }

json matrix_json(const Matrix2& m) { return json::array({{m.a11, m.a12}, {m.a21, m.a22}}); }

json window_json(const std::optional<ThetaWindow>& w) {
    if (!w) return nullptr;
    return {{"lo", w->lo}, {"hi", w->hi}};
}

double theta_for(const ExperimentConfig& cfg, const Analysis& a) {
    if (cfg.monitors.theta) return *cfg.monitors.theta;
    return a.window ? a.window->lo : 1.0;
}

/// Which functional the Lyapunov monitor tracks, if any.
std::optional<FunctionalKind> tracked_functional(const Analysis& a) {
    if (a.equilibria.endemic) return FunctionalKind::kEndemic;
    if (a.window) return FunctionalKind::kTheta;
    return std::nullopt;
}

void write_json(const json& doc, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path.string() + "' for writing");
    os << doc.dump(2) << '\n';
}

std::filesystem::path ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory '" + dir + "': " + ec.message());
    return dir;
}

}  // namespace

std::string verdict_code(GlobalVerdict v) {
    switch (v) {
        case GlobalVerdict::kEndemicGlobal: return "endemic_global";
        case GlobalVerdict::kDiseaseFreeGlobal: return "disease_free_global";
        case GlobalVerdict::kDiseaseFreeLocal: return "disease_free_local";
    }
    return "unknown";
}

std::string verdict_text(GlobalVerdict v) {
    switch (v) {
        case GlobalVerdict::kEndemicGlobal:
            return "E* globally asymptotically stable (R0 > 1, endemic Volterra functional)";
        case GlobalVerdict::kDiseaseFreeGlobal:
            return "E0 globally asymptotically stable (R0 <= 1, theta-window nonempty)";
        case GlobalVerdict::kDiseaseFreeLocal:
            return "E0 locally stable; theta-window condition not met";
    }
    return "unknown";
}

Analysis analyze_model(const ExperimentConfig& cfg) {
    cfg.params.validate();
    const Incidence inc = cfg.incidence.build();
    Analysis a;
    a.equilibria = analyze_equilibria(cfg.params, inc);
    a.ode = ode_local_stability(cfg.params, inc);
    if (cfg.mode == Mode::kPde) {
        a.pde = pde_spectral_check(cfg.params, inc, NeumannSpectrum(cfg.grid.length, kSpectralModes));
        try {
            a.window = theta_window(cfg.params, inc);
        } catch (const DomainError& e) {
            a.window_error = e.what();
        }
    } else {
        ModelParams well_mixed = cfg.params;
        well_mixed.diffusion_u = well_mixed.diffusion_v = 0.0;
        a.window = theta_window(well_mixed, inc);
    }
    if (a.equilibria.endemic) a.verdict = GlobalVerdict::kEndemicGlobal;
    else if (a.window) a.verdict = GlobalVerdict::kDiseaseFreeGlobal;
    else a.verdict = GlobalVerdict::kDiseaseFreeLocal;
    return a;
}

json to_json(const ExperimentConfig& cfg, const Analysis& a) {
    json doc;
    doc["name"] = cfg.name;
    doc["mode"] = to_string(cfg.mode);
    doc["config"] = to_json(cfg);
    doc["R0"] = a.equilibria.r0;
    doc["disease_free"] = point_json(a.equilibria.disease_free);
    if (const auto& e = a.equilibria.endemic) {
        doc["endemic"] = {{"u", e->point.u},
                          {"v", e->point.v},
                          {"residual", e->residual},
                          {"bracket", {e->bracket_lo, e->bracket_hi}}};
    } else {
        doc["endemic"] = nullptr;
    }
    doc["ode_stability"] = {{"disease_free", to_string(a.ode.disease_free)},
                            {"endemic", a.ode.endemic ? json(to_string(*a.ode.endemic)) : json(nullptr)},
                            {"jacobian_disease_free", matrix_json(a.ode.jacobian_disease_free)},
                            {"jacobian_endemic",
                             a.ode.jacobian_endemic ? matrix_json(*a.ode.jacobian_endemic) : json(nullptr)}};
    if (a.pde) {
        json modes = json::array();
        for (const auto& m : a.pde->modes) {
            json row{{"eigenvalue", m.eigenvalue}, {"r1", m.r1}, {"r2", m.r2}};
            if (m.trace_endemic) row["trace"] = *m.trace_endemic;
            if (m.det_endemic) row["det"] = *m.det_endemic;
            modes.push_back(std::move(row));
        }
        doc["pde_stability"] = {{"disease_free", to_string(a.pde->disease_free)},
                                {"endemic", a.pde->endemic ? json(to_string(*a.pde->endemic)) : json(nullptr)},
                                {"H0", a.pde->h0 ? json(*a.pde->h0) : json(nullptr)},
                                {"H0_lower_bound", a.pde->h0_lower_bound ? json(*a.pde->h0_lower_bound) : json(nullptr)},
                                {"modes", std::move(modes)}};
    } else {
        doc["pde_stability"] = nullptr;
    }
    doc["theta_window"] = window_json(a.window);
    if (a.window_error) doc["theta_window_error"] = *a.window_error;
    doc["global_verdict"] = {{"code", verdict_code(a.verdict)}, {"text", verdict_text(a.verdict)}};
    return doc;
}

json analyze(const ExperimentConfig& cfg) { return to_json(cfg, analyze_model(cfg)); }

bool RunResult::pass() const {
    return std::all_of(monitors.begin(), monitors.end(), [](const MonitorResult& m) { return !m.applicable || m.pass; });
}

json RunResult::summary() const {
    json mons = json::array();
    for (const auto& m : monitors) {
        mons.push_back({{"name", m.name}, {"applicable", m.applicable}, {"pass", m.pass}, {"detail", m.detail}});
    }
    return {{"name", config.name},
            {"analysis", to_json(config, analysis)},
            {"attractor", point_json(attractor)},
            {"final_distance", final_distance},
            {"converged", converged},
            {"monitors", std::move(mons)},
            {"elapsed_seconds", elapsed_seconds},
            {"pass", pass()}};
}

RunResult simulate(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    RunResult run;
    run.config = cfg;
    run.analysis = analyze_model(cfg);
    const Incidence inc = cfg.incidence.build();
    const ModelParams& p = cfg.params;
    const Analysis& a = run.analysis;
    run.attractor = a.equilibria.endemic ? a.equilibria.endemic->point : a.equilibria.disease_free;
    const double theta = theta_for(cfg, a);
    const auto functional = tracked_functional(a);

    LyapunovSeries series;
    series.kind = functional.value_or(FunctionalKind::kEndemic);
    series.theta = theta;
    bool lyapunov_defined = functional.has_value();
    std::string lyapunov_note;

    auto attempt = [&](double t, auto&& eval) {
        if (!lyapunov_defined) return;
        try {
            series.values.push_back(eval());
            series.times.push_back(t);
        } catch (const NonPositiveStateError& e) {
            lyapunov_defined = false;
            lyapunov_note = e.what();
        }
    };

    if (cfg.mode == Mode::kOde) {
        run.ode = integrate_ode(p, inc, {cfg.initial.u, cfg.initial.v},
                                OdeOptions{cfg.time.t_end, cfg.time.dt, cfg.time.stride});
        for (const auto& s : run.ode->states) {
            attempt(s.t, [&] {
                if (series.kind == FunctionalKind::kTheta) return v_theta_point(s.u, s.v, p, theta);
                if (!(s.u > 0.0) || !(s.v > 0.0)) throw NonPositiveStateError("nonpositive state on trajectory", 0);
                return v_endemic_point(s.u, s.v, run.attractor);
            });
        }
        const auto& last = run.ode->states.back();
        run.final_distance = std::max(std::abs(last.u - run.attractor.u), std::abs(last.v - run.attractor.v));
        run.converged = converged_to(run.ode->states, run.attractor, 1e-3);

        MonitorResult region{"invariant_region", cfg.monitors.invariant_region, true, {}};
        if (region.applicable) {
            const auto rep = invariant_region_monitor(run.ode->states, p);
            region.pass = rep.pass;
            region.detail = {{"worst_excess", rep.worst_excess},
                             {"most_negative", rep.most_negative},
                             {"tolerance", rep.tolerance}};
        }
        run.monitors.push_back(std::move(region));
        run.monitors.push_back({"convergence", true, run.converged,
                                {{"final_distance", run.final_distance}, {"tolerance", 1e-3}}});
    } else {
        const auto ue = Expression::parse(cfg.initial.u_expr);
        const auto ve = Expression::parse(cfg.initial.v_expr);
        const Field1D u0 = Field1D::sample(cfg.grid.length, cfg.grid.n, [&](double x) { return ue(x); });
        const Field1D v0 = Field1D::sample(cfg.grid.length, cfg.grid.n, [&](double x) { return ve(x); });
        run.pde = integrate_pde(p, inc, u0, v0, PdeOptions{cfg.time.t_end, cfg.time.snapshot_every, cfg.time.dt});
        for (const auto& s : run.pde) {
            attempt(s.t, [&] {
                if (series.kind == FunctionalKind::kTheta) return v_theta(s.u, s.v, p, theta);
                return v_endemic(s.u, s.v, run.attractor);
            });
        }
        const auto& last = run.pde.back();
        double dist = 0.0;
        for (std::size_t i = 0; i < last.u.size(); ++i) {
            dist = std::max({dist, std::abs(last.u[i] - run.attractor.u), std::abs(last.v[i] - run.attractor.v)});
        }
        run.final_distance = dist;
        run.converged = dist < 1e-2;

        MonitorResult bounded{"boundedness", cfg.monitors.boundedness, true, {}};
        if (bounded.applicable) {
            const auto rep = boundedness_monitor(run.pde, p);
            bounded.pass = rep.pass;
            bounded.detail = {{"sup_u_ok", rep.sup_u_ok},
                              {"mass_ok", rep.mass_ok},
                              {"nonnegative_ok", rep.nonnegative_ok},
                              {"worst_sup_u_excess", rep.worst_sup_u_excess},
                              {"worst_mass_excess", rep.worst_mass_excess},
                              {"most_negative", rep.most_negative}};
        }
        run.monitors.push_back(std::move(bounded));
        run.monitors.push_back({"convergence", true, run.converged,
                                {{"final_distance", run.final_distance}, {"tolerance", 1e-2}}});
    }

    MonitorResult lyap{"lyapunov", cfg.monitors.lyapunov && lyapunov_defined, true, {}};
    if (lyapunov_defined) run.lyapunov = series;
    if (lyap.applicable) {
        const auto rep = monotonicity_check(series, cfg.monitors.tolerance);
        lyap.pass = rep.pass;
        lyap.detail = {{"functional", series.kind == FunctionalKind::kTheta ? "V_theta" : "V_endemic"},
                       {"max_increase", rep.max_increase},
                       {"allowed", rep.allowed},
                       {"initial", series.values.front()},
                       {"final", series.values.back()}};
        if (series.kind == FunctionalKind::kTheta) lyap.detail["theta"] = theta;
    } else {
        lyap.detail = {{"reason", !functional ? "no admissible functional (R0 <= 1 with empty theta-window)"
                                  : !lyapunov_note.empty() ? lyapunov_note
                                                           : "disabled"}};
    }
    run.monitors.push_back(std::move(lyap));

    run.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return run;
}

std::vector<OdeCsvRow> ode_csv_rows(const RunResult& run) {
    std::vector<OdeCsvRow> rows;
    if (!run.ode) return rows;
    const auto& a = run.analysis;
    const double theta = theta_for(run.config, a);
    for (const auto& s : run.ode->states) {
        OdeCsvRow r{s.t, s.u, s.v, std::nullopt, std::nullopt};
        if (a.window) r.v_theta = v_theta_point(s.u, s.v, run.config.params, theta);
        if (a.equilibria.endemic && s.u > 0.0 && s.v > 0.0) {
            r.v_endemic = v_endemic_point(s.u, s.v, a.equilibria.endemic->point);
        }
        rows.push_back(r);
    }
    return rows;
}

void write_run_artifacts(const RunResult& run, const std::string& dir) {
    const auto root = ensure_dir(dir);
    if (run.ode) {
        write_ode_csv((root / "trajectory.csv").string(), ode_csv_rows(run));
    } else {
        write_pde_csv((root / "snapshots.csv").string(), run.pde, run.config.output.snapshot_stride);
        if (run.lyapunov) {
            CsvTable t{{"t", run.lyapunov->kind == FunctionalKind::kTheta ? "V_theta" : "V_endemic"}, {}};
            for (std::size_t i = 0; i < run.lyapunov->times.size(); ++i) {
                t.rows.push_back({run.lyapunov->times[i], run.lyapunov->values[i]});
            }
            write_table_csv((root / "lyapunov.csv").string(), t);
        }
    }
    write_json(to_json(run.config, run.analysis), root / "analysis.json");
    write_json(run.summary(), root / "summary.json");
}

std::vector<Comparison> compare_with_reference(const ReferenceCase& rc, const Analysis& a) {
    std::vector<Comparison> out;
    auto check = [&](std::string q, double computed, double expected, double tol, std::string note = {}) {
        out.push_back({std::move(q), computed, expected, tol, std::abs(computed - expected) <= tol, std::move(note)});
    };
    check("R0", a.equilibria.r0, rc.printed_r0, 1e-4);
    if (rc.endemic) {
        if (a.equilibria.endemic) {
            check("Estar.u", a.equilibria.endemic->point.u, rc.printed_equilibrium.u, 1e-3);
            check("Estar.v", a.equilibria.endemic->point.v, rc.printed_equilibrium.v, 1e-3);
        } else {
            out.push_back({"Estar", NAN, rc.printed_equilibrium.u, 0.0, false, "no endemic equilibrium computed"});
        }
    } else {
        check("E0.u", a.equilibria.disease_free.u, rc.printed_equilibrium.u, 1e-12);
        check("E0.v", a.equilibria.disease_free.v, 0.0, 0.0);
        if (a.equilibria.endemic) {
            out.push_back({"Estar", a.equilibria.endemic->point.v, 0.0, 0.0, false, "unexpected endemic equilibrium"});
        }
    }
    if (rc.printed_theta) {
        if (!a.window) {
            out.push_back({"theta_window", NAN, rc.printed_theta->lo, 0.0, false, "empty theta-window"});
        } else {
            check("theta_lo", a.window->lo, rc.printed_theta->lo, 1e-9);
            check("theta_hi", a.window->hi, rc.printed_theta->hi, rc.theta_hi_tolerance,
                  rc.exact_theta_hi ? rc.note : std::string{});
            if (rc.exact_theta_hi) check("theta_hi_exact", a.window->hi, *rc.exact_theta_hi, 1e-9);
        }
    }
    return out;
}

bool ReproduceResult::pass() const {
    return run.pass() && std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.pass; });
}

json ReproduceResult::summary() const {
    json doc = run.summary();
    json cmp = json::array();
    for (const auto& c : comparisons) {
        json row{{"quantity", c.quantity},
                 {"computed", c.computed},
                 {"expected", c.expected},
                 {"tolerance", c.tolerance},
                 {"pass", c.pass}};
        if (!c.note.empty()) row["note"] = c.note;
        cmp.push_back(std::move(row));
    }
    doc["comparison"] = std::move(cmp);
    if (reference) {
        doc["reference"] = {{"table", reference->table},
                            {"mode", to_string(reference->mode)},
                            {"set", reference->set},
                            {"printed_theta", reference->printed_theta_text}};
    }
    doc["pass"] = pass();
    return doc;
}

ReproduceResult reproduce(const ReferenceCase& rc, const std::string& out_dir) {
    ReproduceResult r;
    r.reference = &rc;
    r.run = simulate(to_config(rc));
    r.comparisons = compare_with_reference(rc, r.run.analysis);
    if (!out_dir.empty()) {
        const auto dir = (std::filesystem::path(out_dir) / rc.id()).string();
        write_run_artifacts(r.run, dir);
        write_json(r.summary(), std::filesystem::path(dir) / "summary.json");
    }
    return r;
}

std::vector<ReproduceResult> reproduce_all(const std::string& out_dir) {
    const auto& rows = reference_cases();
    std::vector<ReproduceResult> results(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) { results[i] = reproduce(rows[i], out_dir); });
    if (!out_dir.empty()) {
        CsvTable t{{"table", "mode", "set", "R0", "printed_R0", "eq_u", "eq_v", "printed_u", "printed_v", "theta_lo",
                    "theta_hi", "final_distance", "converged", "pass"},
                   {}};
        for (const auto& r : results) {
            const auto& rc = *r.reference;
            const auto& a = r.run.analysis;
            const Point eq = a.equilibria.endemic ? a.equilibria.endemic->point : a.equilibria.disease_free;
            t.rows.push_back({double(rc.table), rc.mode == Mode::kOde ? 0.0 : 1.0, double(rc.set), a.equilibria.r0,
                              rc.printed_r0, eq.u, eq.v, rc.printed_equilibrium.u, rc.printed_equilibrium.v,
                              a.window ? std::optional(a.window->lo) : std::nullopt,
                              a.window ? std::optional(a.window->hi) : std::nullopt, r.run.final_distance,
                              r.run.converged ? 1.0 : 0.0, r.pass() ? 1.0 : 0.0});
        }
        ensure_dir(out_dir);
        write_table_csv((std::filesystem::path(out_dir) / "batch_summary.csv").string(), t);
    }
    return results;
}

const std::vector<std::string>& sweep_parameters() {
    static const std::vector<std::string> names{"Lambda", "mu", "lambda", "sigma", "d1", "d2", "alpha", "k"};
    return names;
}

void set_parameter(ExperimentConfig& cfg, const std::string& name, double value) {
    if (name == "Lambda") cfg.params.recruitment = value;
    else if (name == "mu") cfg.params.mortality = value;
    else if (name == "lambda") cfg.params.transmission = value;
    else if (name == "sigma") cfg.params.recovery = value;
    else if (name == "d1") cfg.params.diffusion_u = value;
    else if (name == "d2") cfg.params.diffusion_v = value;
    else if (name == "alpha") cfg.incidence.alpha = value;
    else if (name == "k") {
        if (cfg.incidence.family == IncidenceFamily::kLinear) {
            throw ConfigError({"parameter k does not exist for linear incidence"});
        }
        cfg.incidence.k = value;
    } else {
        throw ConfigError({"unknown sweep parameter '" + name +
                           "' (expected Lambda, mu, lambda, sigma, d1, d2, alpha or k)"});
    }
    auto violations = cfg.params.violations();
    if (!(cfg.incidence.alpha > 0.0) || !std::isfinite(cfg.incidence.alpha)) {
        violations.push_back("alpha must be positive");
    }
    if (cfg.incidence.family != IncidenceFamily::kLinear && !(cfg.incidence.k > 0.0 && std::isfinite(cfg.incidence.k))) {
        violations.push_back("k must be positive");
    }
    if (!violations.empty()) throw ConfigError(std::move(violations));
}

std::vector<SweepRow> sweep(const ExperimentConfig& cfg, const std::string& param, const std::vector<double>& values) {
    {
        ExperimentConfig probe = cfg;
        set_parameter(probe, param, values.empty() ? 1.0 : values.front());
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw ConfigError({"sweep values must be finite"});
    }
    std::vector<SweepRow> rows(values.size());
    parallel_for(values.size(), [&](std::size_t i) {
        ExperimentConfig c = cfg;
        set_parameter(c, param, values[i]);
        rows[i] = SweepRow{values[i], analyze_model(c)};
    });
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::string& param, const std::vector<SweepRow>& rows) {
    os << param << ",R0,E0_u,E0_v,Estar_u,Estar_v,ode_E0,ode_Estar,pde_E0,pde_Estar,theta_lo,theta_hi,verdict\n";
    for (const auto& r : rows) {
        const auto& a = r.analysis;
        os << format_double(r.value) << ',' << format_double(a.equilibria.r0) << ','
           << format_double(a.equilibria.disease_free.u) << ',' << format_double(a.equilibria.disease_free.v) << ',';
        if (a.equilibria.endemic) {
            os << format_double(a.equilibria.endemic->point.u) << ',' << format_double(a.equilibria.endemic->point.v);
        } else {
            os << ',';
        }
        os << ',' << to_string(a.ode.disease_free) << ',' << (a.ode.endemic ? to_string(*a.ode.endemic) : "") << ',';
        if (a.pde) {
            os << to_string(a.pde->disease_free) << ',' << (a.pde->endemic ? to_string(*a.pde->endemic) : "");
        } else {
            os << ',';
        }
        os << ',';
        if (a.window) os << format_double(a.window->lo) << ',' << format_double(a.window->hi);
        else os << ',';
        os << ',' << verdict_code(a.verdict) << '\n';
    }
}

json VerifyResult::summary() const {
    json adm{{"pass", admissibility.pass},
             {"samples", admissibility.samples},
             {"vanishes_at_zero", admissibility.vanishes_at_zero},
             {"slope_at_zero_ok", admissibility.slope_at_zero_ok},
             {"violations", admissibility.violation_count}};
    if (admissibility.first) {
        adm["first_violation"] = {{"condition", to_string(admissibility.first->condition)},
                                  {"v", admissibility.first->v}};
    }
    json doc = run.summary();
    doc["admissibility"] = std::move(adm);
    doc["pass"] = pass();
    return doc;
}

VerifyResult verify(const ExperimentConfig& cfg) {
    VerifyResult r;
    const Incidence inc = cfg.incidence.build();
    const double v_max = std::max(100.0, 10.0 * cfg.params.population_bound());
    r.admissibility = check_admissible(inc, v_max, 10000);
    if (const auto& e = analyze_equilibria(cfg.params, inc).endemic) {
        const auto grid = log_grid(v_max, 10000);
        const auto lemma = lemma2_check(inc, e->point.v, grid);
        if (!lemma.pass) {
            r.admissibility.pass = false;
        }
    }
    r.run = simulate(cfg);
    return r;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("RDSIS_WORKERS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0) return static_cast<std::size_t>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace rdsis
