#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "demon/config.hpp"

namespace demon::commands {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct CliOptions {
    std::string config_path;
    std::optional<std::string> out_path; // overrides [output] path
    std::optional<std::string> format;   // overrides [output] format
    double coupling = 1.0;               // decompose only
    std::string target = "cnot";         // decompose only: cnot | swap
};

int cmd_cycle(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_sweep(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_decompose(const CliOptions& opt, std::ostream& out,
                  std::ostream& err);
int cmd_device(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_thermalize(const CliOptions& opt, std::ostream& out,
                   std::ostream& err);

} // namespace demon::commands
