// rdsis: analyze, simulate and reproduce the diffusive SIS model from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rdsis/config.hpp"
#include "rdsis/errors.hpp"
#include "rdsis/experiment.hpp"
#include "rdsis/reference_tables.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

void print_monitors(const rdsis::RunResult& run) {
    for (const auto& m : run.monitors) {
        if (!m.applicable) continue;
        std::printf("  %-17s %s\n", m.name.c_str(), m.pass ? "PASS" : "FAIL");
    }
}

void print_comparisons(const rdsis::ReproduceResult& r) {
    for (const auto& c : r.comparisons) {
        std::printf("  %-17s %s computed=%.10g expected=%.10g tol=%g\n", c.quantity.c_str(), c.pass ? "PASS" : "FAIL",
                    c.computed, c.expected, c.tolerance);
    }
}

std::ofstream open_output(const std::string& path) {
    const auto parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) std::filesystem::create_directories(parent, ec);
    std::ofstream os(path);
    if (!os) throw rdsis::IoError("cannot open '" + path + "' for writing");
    return os;
}

std::vector<double> parse_values(const std::string& list) {
    std::vector<double> values;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            values.push_back(rdsis::parse_number(item));
        } catch (const std::exception&) {
            throw rdsis::ConfigError({"invalid sweep value '" + item + "'"});
        }
    }
    if (values.empty()) throw rdsis::ConfigError({"--values must list at least one number"});
    return values;
}

int cmd_analyze(const std::string& config, const std::string& json_out) {
    const auto doc = rdsis::analyze(rdsis::load_config(config));
    const std::string text = doc.dump(2) + "\n";
    if (json_out.empty()) {
        std::cout << text;
    } else {
        open_output(json_out) << text;
        std::printf("R0 = %.10g\nverdict: %s\nwrote %s\n", doc["R0"].get<double>(),
                    doc["global_verdict"]["text"].get<std::string>().c_str(), json_out.c_str());
    }
    return kExitPass;
}

int cmd_simulate(const std::string& config, const std::string& out_dir) {
    const auto run = rdsis::simulate(rdsis::load_config(config));
    rdsis::write_run_artifacts(run, out_dir);
    std::printf("%s: final distance %.3e to (%.6g, %.6g) in %.2fs\n", run.config.name.c_str(), run.final_distance,
                run.attractor.u, run.attractor.v, run.elapsed_seconds);
    print_monitors(run);
    return run.pass() ? kExitPass : kExitFail;
}

int cmd_reproduce(bool all, int table, int set, const std::string& mode, const std::string& out_dir) {
    std::vector<rdsis::ReproduceResult> results;
    if (all) {
        results = rdsis::reproduce_all(out_dir);
    } else {
        if (table == 0 || set == 0) throw rdsis::ConfigError({"reproduce needs --table and --set (or --all)"});
        std::vector<const rdsis::ReferenceCase*> rows;
        for (const auto& rc : rdsis::reference_cases()) {
            const bool mode_ok = mode == "both" || rdsis::to_string(rc.mode) == mode;
            if (rc.table == table && rc.set == set && mode_ok) rows.push_back(&rc);
        }
        if (rows.empty()) {
            throw rdsis::ConfigError({"no reference row for table " + std::to_string(table) + ", set " +
                                      std::to_string(set) + " (mode " + mode + ")"});
        }
        for (const auto* rc : rows) results.push_back(rdsis::reproduce(*rc, out_dir));
    }
    bool ok = true;
    for (const auto& r : results) {
        std::printf("%-10s %s  R0=%.6g  distance=%.3e  %.2fs\n", r.reference->id().c_str(), r.pass() ? "PASS" : "FAIL",
                    r.run.analysis.equilibria.r0, r.run.final_distance, r.run.elapsed_seconds);
        print_comparisons(r);
        print_monitors(r.run);
        ok = ok && r.pass();
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_sweep(const std::string& config, const std::string& param, const std::string& values, const std::string& out) {
    const auto cfg = rdsis::load_config(config);
    const auto rows = rdsis::sweep(cfg, param, parse_values(values));
    auto os = open_output(out);
    rdsis::write_sweep_csv(os, param, rows);
    std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
    return kExitPass;
}

int cmd_verify(const std::string& config) {
    const auto result = rdsis::verify(rdsis::load_config(config));
    std::printf("%s\n  admissibility     %s (%zu samples, %zu violations)\n", result.run.config.name.c_str(),
                result.admissibility.pass ? "PASS" : "FAIL", result.admissibility.samples,
                result.admissibility.violation_count);
    print_monitors(result.run);
    return result.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analyze and simulate the reaction-diffusion SIS model with incidence u*phi(v).\n"
                 "Worker count for sweep and reproduce --all: RDSIS_WORKERS (default: available cores)."};
    app.require_subcommand(1);

    std::string config, json_out, out_dir, param, values, out, mode = "both";
    int table = 0, set = 0;
    bool all = false;

    auto* analyze = app.add_subcommand("analyze", "Equilibria, R0, stability classes and theta-window as JSON");
    analyze->add_option("--config", config, "Experiment config (JSON)")->required();
    analyze->add_option("--json-out", json_out, "Write the analysis here instead of stdout");

    auto* simulate = app.add_subcommand("simulate", "Integrate a config and run all monitors");
    simulate->add_option("--config", config, "Experiment config (JSON)")->required();
    simulate->add_option("--out-dir", out_dir, "Artifact directory")->required();

    auto* reproduce = app.add_subcommand("reproduce", "Re-run a built-in reference parameter set");
    reproduce->add_option("--table", table, "Reference table")->check(CLI::Range(1, 3));
    reproduce->add_option("--set", set, "Set id within the table")->check(CLI::PositiveNumber);
    reproduce->add_option("--mode", mode, "ode, pde or both")->check(CLI::IsMember({"ode", "pde", "both"}));
    reproduce->add_option("--out-dir", out_dir, "Artifact directory")->required();
    reproduce->add_flag("--all", all, "Run every reference row and write batch_summary.csv");

    auto* sweep = app.add_subcommand("sweep", "Analyze a config over a list of parameter values");
    sweep->add_option("--config", config, "Experiment config (JSON)")->required();
    sweep->add_option("--param", param, "Lambda, mu, lambda, sigma, d1, d2, alpha or k")->required();
    sweep->add_option("--values", values, "Comma-separated values")->required();
    sweep->add_option("--out", out, "CSV output path")->required();

    auto* verify = app.add_subcommand("verify", "Admissibility checks plus every monitor");
    verify->add_option("--config", config, "Experiment config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*analyze) return cmd_analyze(config, json_out);
        if (*simulate) return cmd_simulate(config, out_dir);
        if (*reproduce) return cmd_reproduce(all, table, set, mode, out_dir);
        if (*sweep) return cmd_sweep(config, param, values, out);
        if (*verify) return cmd_verify(config);
    } catch (const rdsis::ConfigError& e) {
        std::fprintf(stderr, "config error:\n");
        for (const auto& v : e.violations()) std::fprintf(stderr, "  %s\n", v.c_str());
        return kExitConfig;
    } catch (const rdsis::IoError& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitConfig;
    } catch (const rdsis::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitFail;
    }
    return kExitConfig;
}
