#include "rdsis/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "rdsis/errors.hpp"
#include "rdsis/expression.hpp"

namespace rdsis {

using nlohmann::json;

namespace {

/// Collects violations instead of stopping at the first one.
class Reader {
public:
    std::vector<std::string> errors;

    std::optional<double> number(const json& obj, const std::string& key, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
        const json& v = obj.at(key);
        try {
            if (v.is_number()) return v.get<double>();
            if (v.is_string()) return parse_number(v.get<std::string>());
        } catch (const ConfigError&) {
        }
        errors.push_back(where + "." + key + " must be a number or a fraction string");
        return std::nullopt;
    }

    double required_number(const json& obj, const std::string& key, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key)) {
            errors.push_back(where + "." + key + " is required");
            return NAN;
        }
        return number(obj, key, where).value_or(NAN);
    }

    std::optional<std::size_t> count(const json& obj, const std::string& key, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
        const json& v = obj.at(key);
        if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) {
            return v.get<std::size_t>();
        }
        errors.push_back(where + "." + key + " must be a nonnegative integer");
        return std::nullopt;
    }

    std::optional<bool> flag(const json& obj, const std::string& key, const std::string& where) {
        if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
        if (obj.at(key).is_boolean()) return obj.at(key).get<bool>();
        errors.push_back(where + "." + key + " must be true or false");
        return std::nullopt;
    }
};

std::string family_name(IncidenceFamily f) {
    switch (f) {
        case IncidenceFamily::kLinear: return "linear";
        case IncidenceFamily::kSaturated: return "saturated";
        case IncidenceFamily::kHalfSaturation: return "half_saturation";
        case IncidenceFamily::kCustom: return "custom";
    }
    return "unknown";
}

std::string initial_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) {
        std::ostringstream os;
        os.precision(17);
        os << v.get<double>();
        return os.str();
    }
    return {};
}

}  // namespace

std::string to_string(Mode m) { return m == Mode::kOde ? "ode" : "pde"; }

Incidence IncidenceConfig::build() const {
    switch (family) {
        case IncidenceFamily::kLinear: return Incidence::linear(alpha);
        case IncidenceFamily::kSaturated: return Incidence::saturated(alpha, k);
        case IncidenceFamily::kHalfSaturation: return Incidence::half_saturation(k, alpha);
        case IncidenceFamily::kCustom: break;
    }
    throw ConfigError({"custom incidences cannot be built from a configuration"});
}

double parse_number(const std::string& text) {
    auto to_double = [&](const std::string& s) {
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        while (end && *end == ' ') ++end;
        if (s.empty() || end == s.c_str() || *end != '\0') throw ConfigError({"not a number: '" + text + "'"});
        return x;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return to_double(text);
    const double num = to_double(text.substr(0, slash));
    const double den = to_double(text.substr(slash + 1));
    if (den == 0.0) throw ConfigError({"zero denominator in '" + text + "'"});
    return num / den;
}

ExperimentConfig parse_config(const json& doc) {
    Reader r;
    ExperimentConfig cfg;
    if (!doc.is_object()) throw ConfigError({"configuration must be a JSON object"});

    if (doc.contains("name") && doc["name"].is_string()) cfg.name = doc["name"].get<std::string>();

    if (doc.contains("mode")) {
        const auto m = doc["mode"].is_string() ? doc["mode"].get<std::string>() : "";
        if (m == "ode") cfg.mode = Mode::kOde;
        else if (m == "pde") cfg.mode = Mode::kPde;
        else r.errors.push_back("mode must be \"ode\" or \"pde\"");
    } else {
        r.errors.push_back("mode is required");
    }

    if (!doc.contains("params") || !doc["params"].is_object()) {
        r.errors.push_back("params is required");
    } else {
        const json& p = doc["params"];
        const std::size_t before = r.errors.size();
        cfg.params.recruitment = r.required_number(p, "Lambda", "params");
        cfg.params.mortality = r.required_number(p, "mu", "params");
        cfg.params.transmission = r.required_number(p, "lambda", "params");
        cfg.params.recovery = r.required_number(p, "sigma", "params");
        cfg.params.diffusion_u = r.number(p, "d1", "params").value_or(0.0);
        cfg.params.diffusion_v = r.number(p, "d2", "params").value_or(0.0);
        // Missing or malformed entries are already reported; only range-check a complete set.
        if (r.errors.size() == before) {
            for (auto& v : cfg.params.violations()) r.errors.push_back(std::move(v));
        }
    }

    if (!doc.contains("incidence") || !doc["incidence"].is_object()) {
        r.errors.push_back("incidence is required");
    } else {
        const json& inc = doc["incidence"];
        const std::string fam = inc.value("family", std::string{});
        if (fam == "linear") {
            cfg.incidence.family = IncidenceFamily::kLinear;
            cfg.incidence.alpha = r.required_number(inc, "alpha", "incidence");
        } else if (fam == "saturated") {
            cfg.incidence.family = IncidenceFamily::kSaturated;
            cfg.incidence.alpha = r.required_number(inc, "alpha", "incidence");
            cfg.incidence.k = r.required_number(inc, "k", "incidence");
        } else if (fam == "half_saturation") {
            cfg.incidence.family = IncidenceFamily::kHalfSaturation;
            cfg.incidence.k = r.required_number(inc, "k", "incidence");
            cfg.incidence.alpha = r.required_number(inc, "alpha", "incidence");
        } else {
            r.errors.push_back("incidence.family must be linear, saturated or half_saturation");
        }
        if (!(cfg.incidence.alpha > 0.0)) r.errors.push_back("incidence.alpha must be positive");
        if (cfg.incidence.family != IncidenceFamily::kLinear && !(cfg.incidence.k > 0.0)) {
            r.errors.push_back("incidence.k must be positive");
        }
    }

    if (!doc.contains("initial") || !doc["initial"].is_object()) {
        r.errors.push_back("initial is required");
    } else {
        const json& ini = doc["initial"];
        if (cfg.mode == Mode::kOde) {
            cfg.initial.u = r.required_number(ini, "u", "initial");
            cfg.initial.v = r.required_number(ini, "v", "initial");
            if (!(cfg.initial.u >= 0.0)) r.errors.push_back("initial.u must be nonnegative");
            if (!(cfg.initial.v >= 0.0)) r.errors.push_back("initial.v must be nonnegative");
        } else {
            for (const char* key : {"u", "v"}) {
                std::string expr = ini.contains(key) ? initial_to_string(ini[key]) : "";
                if (expr.empty()) {
                    r.errors.push_back(std::string("initial.") + key + " must be an expression in x");
                    continue;
                }
                try {
                    (void)Expression::parse(expr);
                } catch (const ConfigError& e) {
                    r.errors.push_back(std::string("initial.") + key + ": " + e.what());
                }
                (std::string(key) == "u" ? cfg.initial.u_expr : cfg.initial.v_expr) = expr;
            }
        }
    }

    if (cfg.mode == Mode::kPde) {
        if (!doc.contains("grid") || !doc["grid"].is_object()) {
            r.errors.push_back("grid is required when mode is pde");
        } else {
            const json& g = doc["grid"];
            cfg.grid.length = r.number(g, "L", "grid").value_or(cfg.grid.length);
            cfg.grid.n = r.count(g, "n", "grid").value_or(cfg.grid.n);
            if (!(cfg.grid.length > 0.0)) r.errors.push_back("grid.L must be positive");
            if (cfg.grid.n < 3) r.errors.push_back("grid.n must be at least 3");
        }
    }

    cfg.time.t_end = cfg.mode == Mode::kOde ? 200.0 : 100.0;
    cfg.time.dt = cfg.mode == Mode::kOde ? 1e-3 : 0.0;
    if (doc.contains("time")) {
        const json& t = doc["time"];
        cfg.time.t_end = r.number(t, "t_end", "time").value_or(cfg.time.t_end);
        if (t.is_object() && t.contains("dt") && t["dt"].is_string() && t["dt"].get<std::string>() == "auto") {
            cfg.time.dt = 0.0;
        } else {
            cfg.time.dt = r.number(t, "dt", "time").value_or(cfg.time.dt);
        }
        cfg.time.snapshot_every = r.number(t, "snapshot_every", "time").value_or(cfg.time.snapshot_every);
        cfg.time.stride = r.count(t, "stride", "time").value_or(cfg.time.stride);
    }
    if (!(cfg.time.t_end > 0.0)) r.errors.push_back("time.t_end must be positive");
    if (!(cfg.time.dt >= 0.0)) r.errors.push_back("time.dt must be positive or \"auto\"");
    if (cfg.mode == Mode::kOde && cfg.time.dt == 0.0) cfg.time.dt = 1e-3;
    if (!(cfg.time.snapshot_every > 0.0)) r.errors.push_back("time.snapshot_every must be positive");
    if (cfg.time.stride == 0) r.errors.push_back("time.stride must be at least 1");

    if (doc.contains("monitors")) {
        const json& m = doc["monitors"];
        cfg.monitors.invariant_region = r.flag(m, "invariant_region", "monitors").value_or(true);
        cfg.monitors.boundedness = r.flag(m, "boundedness", "monitors").value_or(true);
        cfg.monitors.lyapunov = r.flag(m, "lyapunov", "monitors").value_or(true);
        if (m.is_object() && m.contains("theta") && !(m["theta"].is_string() && m["theta"] == "lo")) {
            cfg.monitors.theta = r.number(m, "theta", "monitors");
            if (cfg.monitors.theta && !(*cfg.monitors.theta > 0.0)) {
                r.errors.push_back("monitors.theta must be positive");
            }
        }
        cfg.monitors.tolerance = r.number(m, "tolerance", "monitors").value_or(cfg.monitors.tolerance);
        if (!(cfg.monitors.tolerance >= 0.0)) r.errors.push_back("monitors.tolerance must be nonnegative");
    }

    if (doc.contains("output")) {
        const json& o = doc["output"];
        if (o.is_object() && o.contains("dir")) {
            if (o["dir"].is_string()) cfg.output.dir = o["dir"].get<std::string>();
            else r.errors.push_back("output.dir must be a string");
        }
        cfg.output.snapshot_stride = r.count(o, "snapshot_stride", "output").value_or(cfg.output.snapshot_stride);
    }

    if (!r.errors.empty()) throw ConfigError(std::move(r.errors));
    return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // Translate the byte offset into line/column for the message.
        std::size_t line = 1, col = 1;
        const std::size_t stop = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ConfigError({"JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + e.what()});
    }
    return parse_config(doc);
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError({"cannot read configuration file '" + path + "'"});
    std::ostringstream ss;
    ss << is.rdbuf();
    return parse_config_text(ss.str());
}

json to_json(const ExperimentConfig& cfg) {
    json doc;
    doc["name"] = cfg.name;
    doc["mode"] = to_string(cfg.mode);
    doc["params"] = {{"Lambda", cfg.params.recruitment}, {"mu", cfg.params.mortality},
                     {"lambda", cfg.params.transmission}, {"sigma", cfg.params.recovery},
                     {"d1", cfg.params.diffusion_u}, {"d2", cfg.params.diffusion_v}};
    json inc{{"family", family_name(cfg.incidence.family)}, {"alpha", cfg.incidence.alpha}};
    if (cfg.incidence.family != IncidenceFamily::kLinear) inc["k"] = cfg.incidence.k;
    doc["incidence"] = inc;
    if (cfg.mode == Mode::kOde) {
        doc["initial"] = {{"u", cfg.initial.u}, {"v", cfg.initial.v}};
    } else {
        doc["initial"] = {{"u", cfg.initial.u_expr}, {"v", cfg.initial.v_expr}};
        doc["grid"] = {{"L", cfg.grid.length}, {"n", cfg.grid.n}};
    }
    doc["time"] = {{"t_end", cfg.time.t_end}, {"snapshot_every", cfg.time.snapshot_every},
                   {"stride", cfg.time.stride}};
    if (cfg.time.dt > 0.0) doc["time"]["dt"] = cfg.time.dt;
    else doc["time"]["dt"] = "auto";
    doc["monitors"] = {{"invariant_region", cfg.monitors.invariant_region},
                       {"boundedness", cfg.monitors.boundedness},
                       {"lyapunov", cfg.monitors.lyapunov},
                       {"tolerance", cfg.monitors.tolerance}};
    if (cfg.monitors.theta) doc["monitors"]["theta"] = *cfg.monitors.theta;
    doc["output"] = {{"dir", cfg.output.dir}, {"snapshot_stride", cfg.output.snapshot_stride}};
    return doc;
}

}  // namespace rdsis
