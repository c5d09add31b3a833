#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demon/device.hpp"
#include "demon/engine.hpp"

namespace demon::config {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                            ": " + message
                                      : message),
          line(line) {}
    int line;
};

struct SweepAxis {
    std::string param; // e.g. "demon.temperature", "feedback.theta", "time"
    double min = 0.0;
    double max = 0.0;
    int count = 0;
    bool log_scale = false;
};

struct OutputConfig {
    std::optional<std::string> path;
    std::optional<std::string> format; // "csv" or "json"
    unsigned long long seed = 0;
};

/// Parsed run configuration. Sections are optional; each command checks
/// for the pieces it needs (cmd_cycle wants [system]/[demon], cmd_device
/// wants [device], ...).
struct RunConfig {
    // [system] / [demon]
    std::optional<double> s_gap, s_temperature, s_damping;
    std::optional<double> d_gap, d_temperature, d_damping;
    // [feedback]
    std::string feedback_kind = "cnot";
    double theta = 1.5707963267948966;
    double phi = 0.0;
    // top level
    std::string mode = "ideal"; // "ideal" or "finite"
    std::optional<double> thermalization_time;
    std::string initial = "thermal"; // thermal | excited | bell
    // [sweep]
    std::vector<SweepAxis> axes;
    // [device]
    std::optional<device::DeviceParams> device;
    // [output]
    OutputConfig output;
};

/// Parse the flat key-value config grammar (see README). Throws
/// ConfigError with the offending line on malformed input.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Assemble the engine configuration; throws ConfigError when [system] or
/// [demon] fields are missing or invalid.
engine::CycleConfig make_cycle_config(const RunConfig& cfg);

/// Resolve an output path against the OUTPUT_DIR environment override.
std::string resolve_output_path(const std::string& path);

} // namespace demon::config
