#include <iostream>

#include <CLI11.hpp>

#include "demon/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Maxwell's-demon-assisted quantum heat engine laboratory"};
    app.require_subcommand(1);

    demon::commands::CliOptions opt;
    std::string out_path, format;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* c = sub->add_option("--config", opt.config_path,
                                  "run configuration file");
        if (config_required) c->required();
        sub->add_option("--out", out_path, "output file path");
        sub->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* cycle = app.add_subcommand("cycle", "run one cycle, print the ledger");
    add_common(cycle, true);
    auto* sweep = app.add_subcommand("sweep", "grid sweep, CSV output");
    add_common(sweep, true);
    auto* decompose =
        app.add_subcommand("decompose", "certify the CNOT gate sequence");
    add_common(decompose, false);
    decompose->add_option("--coupling", opt.coupling,
                          "interaction strength E_L (natural units)");
    decompose->add_option("--target", opt.target, "cnot or swap")
        ->check(CLI::IsMember({"cnot", "swap"}));
    auto* device =
        app.add_subcommand("device", "superconducting-circuit scenario");
    add_common(device, true);
    auto* thermalize =
        app.add_subcommand("thermalize", "relaxation trace, CSV output");
    add_common(thermalize, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return demon::commands::kExitUsage;
    }

    if (!out_path.empty()) opt.out_path = out_path;
    if (!format.empty()) opt.format = format;

    if (cycle->parsed())
        return demon::commands::cmd_cycle(opt, std::cout, std::cerr);
    if (sweep->parsed())
        return demon::commands::cmd_sweep(opt, std::cout, std::cerr);
    if (decompose->parsed())
        return demon::commands::cmd_decompose(opt, std::cout, std::cerr);
    if (device->parsed())
        return demon::commands::cmd_device(opt, std::cout, std::cerr);
    if (thermalize->parsed())
        return demon::commands::cmd_thermalize(opt, std::cout, std::cerr);
    return demon::commands::kExitUsage;
}
