#include "demon/config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace demon::config {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct RawValue {
    std::string text;
    bool quoted;
    int line;
};

double as_number(const RawValue& v) {
    if (v.quoted) throw ConfigError("expected a number", v.line);
    try {
        size_t used = 0;
        const double d = std::stod(v.text, &used);
        if (used != v.text.size())
            throw ConfigError("malformed number '" + v.text + "'", v.line);
        return d;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("malformed number '" + v.text + "'", v.line);
    }
}

int as_int(const RawValue& v) {
    const double d = as_number(v);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d)
        throw ConfigError("expected an integer", v.line);
    return i;
}

bool as_bool(const RawValue& v) {
    if (v.text == "true") return true;
    if (v.text == "false") return false;
    throw ConfigError("expected true or false", v.line);
}

std::string as_string(const RawValue& v) { return v.text; }

// Known keys per section; anything else is a config error.
const std::set<std::string> kTopKeys = {"mode", "thermalization_time",
                                        "initial"};
const std::set<std::string> kQubitKeys = {"gap", "temperature",
                                          "damping_rate"};
const std::set<std::string> kFeedbackKeys = {"kind", "theta", "phi"};
const std::set<std::string> kSweepKeys = {"axis",  "min",  "max",
                                          "count", "scale", "axis2",
                                          "min2",  "max2", "count2",
                                          "scale2"};
const std::set<std::string> kDeviceKeys = {
    "charging_energy_s", "charging_energy_d", "gate_charge_s",
    "gate_charge_d",     "temperature_s",     "temperature_d",
    "josephson_energy",  "flux_ratio",        "cycle_time",
    "relaxation_time",   "rotation_pulse_time", "otto_mode"};
const std::set<std::string> kOutputKeys = {"path", "format", "seed"};
const std::set<std::string> kSections = {"system", "demon",  "feedback",
                                         "sweep",  "device", "output"};

const std::set<std::string> kSweepParams = {
    "system.gap",     "system.temperature", "demon.gap",
    "demon.temperature", "feedback.theta",  "feedback.phi",
    "time"};

bool is_log_scale(const RawValue& v) {
    const std::string s = as_string(v);
    if (s == "log") return true;
    if (s == "linear") return false;
    throw ConfigError("scale must be \"linear\" or \"log\"", v.line);
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    std::map<std::string, std::map<std::string, RawValue>> sections;
    std::string current; // "" = top level

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        // Strip comments outside quotes.
        bool in_quote = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_quote = !in_quote;
            else if (line[i] == '#' && !in_quote) {
                line = line.substr(0, i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("unterminated section header", line_no);
            current = trim(line.substr(1, line.size() - 2));
            if (!kSections.contains(current))
                throw ConfigError("unknown section [" + current + "]",
                                  line_no);
            sections[current]; // a bare section header still counts
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key = value", line_no);
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line_no);
        if (value.empty()) throw ConfigError("missing value for '" + key + "'",
                                             line_no);
        bool quoted = false;
        if (value.front() == '"') {
            if (value.size() < 2 || value.back() != '"')
                throw ConfigError("unterminated string", line_no);
            value = value.substr(1, value.size() - 2);
            quoted = true;
        }

        const std::set<std::string>* known = &kTopKeys;
        if (current == "system" || current == "demon") known = &kQubitKeys;
        else if (current == "feedback") known = &kFeedbackKeys;
        else if (current == "sweep") known = &kSweepKeys;
        else if (current == "device") known = &kDeviceKeys;
        else if (current == "output") known = &kOutputKeys;
        if (!known->contains(key))
            throw ConfigError("unknown key '" + key + "' in section [" +
                                  current + "]",
                              line_no);
        if (sections[current].count(key))
            throw ConfigError("duplicate key '" + key + "'", line_no);
        sections[current].emplace(key, RawValue{value, quoted, line_no});
    }

    RunConfig cfg;
    auto get = [&](const std::string& section,
                   const std::string& key) -> const RawValue* {
        auto sit = sections.find(section);
        if (sit == sections.end()) return nullptr;
        auto kit = sit->second.find(key);
        return kit == sit->second.end() ? nullptr : &kit->second;
    };

    if (const auto* v = get("", "mode")) {
        cfg.mode = as_string(*v);
        if (cfg.mode != "ideal" && cfg.mode != "finite")
            throw ConfigError("mode must be \"ideal\" or \"finite\"", v->line);
    }
    if (const auto* v = get("", "thermalization_time"))
        cfg.thermalization_time = as_number(*v);
    if (const auto* v = get("", "initial")) {
        cfg.initial = as_string(*v);
        if (cfg.initial != "thermal" && cfg.initial != "excited" &&
            cfg.initial != "bell")
            throw ConfigError("initial must be thermal, excited or bell",
                              v->line);
    }

    if (const auto* v = get("system", "gap")) cfg.s_gap = as_number(*v);
    if (const auto* v = get("system", "temperature"))
        cfg.s_temperature = as_number(*v);
    if (const auto* v = get("system", "damping_rate"))
        cfg.s_damping = as_number(*v);
    if (const auto* v = get("demon", "gap")) cfg.d_gap = as_number(*v);
    if (const auto* v = get("demon", "temperature"))
        cfg.d_temperature = as_number(*v);
    if (const auto* v = get("demon", "damping_rate"))
        cfg.d_damping = as_number(*v);

    if (const auto* v = get("feedback", "kind")) {
        cfg.feedback_kind = as_string(*v);
        if (cfg.feedback_kind != "cnot" && cfg.feedback_kind != "cev")
            throw ConfigError("feedback kind must be \"cnot\" or \"cev\"",
                              v->line);
    }
    if (const auto* v = get("feedback", "theta")) cfg.theta = as_number(*v);
    if (const auto* v = get("feedback", "phi")) cfg.phi = as_number(*v);

    auto parse_axis = [&](const char* axis_key, const char* min_key,
                          const char* max_key, const char* count_key,
                          const char* scale_key) {
        const auto* axis = get("sweep", axis_key);
        if (!axis) return;
        SweepAxis a;
        a.param = as_string(*axis);
        if (!kSweepParams.contains(a.param))
            throw ConfigError("unknown sweep parameter '" + a.param + "'",
                              axis->line);
        const auto* mn = get("sweep", min_key);
        const auto* mx = get("sweep", max_key);
        const auto* ct = get("sweep", count_key);
        if (!mn || !mx || !ct)
            throw ConfigError("sweep axis '" + a.param +
                                  "' needs min, max and count",
                              axis->line);
        a.min = as_number(*mn);
        a.max = as_number(*mx);
        a.count = as_int(*ct);
        if (const auto* sc = get("sweep", scale_key))
            a.log_scale = is_log_scale(*sc);
        if (a.count < 2)
            throw ConfigError("sweep count must be at least 2", ct->line);
        if (!(a.min < a.max))
            throw ConfigError("sweep requires min < max", mn->line);
        if (a.log_scale && !(a.min > 0.0))
            throw ConfigError("log sweeps require min > 0", mn->line);
        cfg.axes.push_back(std::move(a));
    };
    parse_axis("axis", "min", "max", "count", "scale");
    parse_axis("axis2", "min2", "max2", "count2", "scale2");
    if (sections.count("sweep") && cfg.axes.empty())
        throw ConfigError("[sweep] section without an axis");

    if (sections.count("device")) {
        device::DeviceParams dev;
        auto num = [&](const char* key, double fallback) {
            const auto* v = get("device", key);
            if (!v) return fallback;
            const double d = as_number(*v);
            if (!std::isfinite(d))
                throw ConfigError(std::string("[device] ") + key +
                                      " must be finite",
                                  v->line);
            return d;
        };
        try {
            dev.s = device::ChargeQubitParams(
                num("charging_energy_s", dev.s.charging_energy),
                num("gate_charge_s", dev.s.gate_charge),
                num("temperature_s", dev.s.temperature));
            dev.d = device::ChargeQubitParams(
                num("charging_energy_d", dev.d.charging_energy),
                num("gate_charge_d", dev.d.gate_charge),
                num("temperature_d", dev.d.temperature));
            dev.coupler = device::CouplerParams(
                num("josephson_energy", dev.coupler.josephson_energy),
                num("flux_ratio", dev.coupler.flux_ratio));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("[device] ") + e.what());
        }
        dev.cycle_time = num("cycle_time", dev.cycle_time);
        dev.relaxation_time = num("relaxation_time", dev.relaxation_time);
        dev.rotation_pulse_time =
            num("rotation_pulse_time", dev.rotation_pulse_time);
        if (const auto* v = get("device", "otto_mode"))
            dev.otto_mode = as_bool(*v);
        cfg.device = dev;
    }

    if (const auto* v = get("output", "path"))
        cfg.output.path = as_string(*v);
    if (const auto* v = get("output", "format")) {
        cfg.output.format = as_string(*v);
        if (*cfg.output.format != "csv" && *cfg.output.format != "json")
            throw ConfigError("format must be \"csv\" or \"json\"", v->line);
    }
    if (const auto* v = get("output", "seed")) {
        const double d = as_number(*v);
        if (d < 0) throw ConfigError("seed must be non-negative", v->line);
        cfg.output.seed = static_cast<unsigned long long>(d);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

engine::CycleConfig make_cycle_config(const RunConfig& cfg) {
    if (!cfg.s_gap || !cfg.s_temperature)
        throw ConfigError("[system] gap and temperature are required");
    if (!cfg.d_gap || !cfg.d_temperature)
        throw ConfigError("[demon] gap and temperature are required");
    try {
        engine::CycleConfig out{
            states::QubitParams(*cfg.s_gap, *cfg.s_temperature),
            states::QubitParams(*cfg.d_gap, *cfg.d_temperature)};
        out.theta = cfg.theta;
        out.phi = cfg.phi;
        out.feedback = cfg.feedback_kind == "cnot"
                           ? engine::FeedbackKind::cnot
                           : engine::FeedbackKind::cev;
        if (cfg.mode == "finite") {
            if (!cfg.thermalization_time)
                throw ConfigError(
                    "finite mode requires thermalization_time");
            out.finite_time = engine::FiniteTimeMode{
                thermo::BathParams(*cfg.s_temperature,
                                   cfg.s_damping.value_or(1.0)),
                thermo::BathParams(*cfg.d_temperature,
                                   cfg.d_damping.value_or(1.0)),
                *cfg.thermalization_time};
        }
        if (!std::isfinite(out.theta) || !std::isfinite(out.phi))
            throw ConfigError("feedback angles must be finite");
        return out;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::string resolve_output_path(const std::string& path) {
    const char* dir = std::getenv("OUTPUT_DIR");
    if (!dir || std::filesystem::path(path).is_absolute()) return path;
    return (std::filesystem::path(dir) / path).string();
}

} // namespace demon::config
