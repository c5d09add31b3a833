#include "demon/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <vector>

#include "demon/serialize.hpp"

namespace demon::commands {

using config::ConfigError;
using config::RunConfig;
using serialize::format_number;

namespace {

std::string eta_text(const engine::CycleLedger& ledger) {
    if (ledger.eta) return format_number(*ledger.eta);
    return ledger.q_in == 0.0 ? "undefined (Q_in = 0)"
                              : "undefined (Q_in < 0)";
}

bool write_file(const std::string& path, const std::string& contents,
                std::ostream& err) {
    const std::string resolved = config::resolve_output_path(path);
    std::ofstream out(resolved, std::ios::binary);
    if (!out) {
        err << "error: cannot write '" << resolved << "'\n";
        return false;
    }
    out << contents;
    return true;
}

std::optional<std::string> output_path(const CliOptions& opt,
                                       const RunConfig& cfg) {
    if (opt.out_path) return opt.out_path;
    return cfg.output.path;
}

std::string output_format(const CliOptions& opt, const RunConfig& cfg,
                          const std::string& fallback) {
    if (opt.format) return *opt.format;
    return cfg.output.format.value_or(fallback);
}

std::vector<double> grid_values(const config::SweepAxis& axis) {
    std::vector<double> values(static_cast<size_t>(axis.count));
    const double lo = axis.log_scale ? std::log(axis.min) : axis.min;
    const double hi = axis.log_scale ? std::log(axis.max) : axis.max;
    for (int k = 0; k < axis.count; ++k) {
        const double v = lo + (hi - lo) * k / (axis.count - 1);
        values[static_cast<size_t>(k)] = axis.log_scale ? std::exp(v) : v;
    }
    return values;
}

void apply_sweep_value(RunConfig& cfg, const std::string& param, double v) {
    if (param == "system.gap") cfg.s_gap = v;
    else if (param == "system.temperature") cfg.s_temperature = v;
    else if (param == "demon.gap") cfg.d_gap = v;
    else if (param == "demon.temperature") cfg.d_temperature = v;
    else if (param == "feedback.theta") cfg.theta = v;
    else if (param == "feedback.phi") cfg.phi = v;
    else throw ConfigError("parameter '" + param + "' cannot be swept here");
}

int usage_error(std::ostream& err, const std::string& message) {
    err << "error: " << message << "\n";
    return kExitUsage;
}

} // namespace

int cmd_cycle(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    engine::CycleLedger ledger;
    try {
        cfg = config::parse_config_file(opt.config_path);
        ledger = engine::run_cycle(config::make_cycle_config(cfg));
    } catch (const std::exception& e) {
        return usage_error(err, e.what());
    }

    out << "cycle ledger (natural units)\n";
    const auto row = [&](const char* label, const std::string& value) {
        out << "  " << label;
        for (size_t i = std::char_traits<char>::length(label); i < 10; ++i)
            out << ' ';
        out << value << "\n";
    };
    row("E_S", format_number(ledger.e_s));
    row("E_D", format_number(ledger.e_d));
    row("E_S''", format_number(ledger.e_s_after));
    row("E_D''", format_number(ledger.e_d_after));
    row("Q_in", format_number(ledger.q_in));
    row("Q_out", format_number(ledger.q_out));
    row("W", format_number(ledger.w));
    row("eta", eta_text(ledger));
    row("S(rho1)", format_number(ledger.entropies[0]));
    row("S(rho2)", format_number(ledger.entropies[1]));
    row("S(rho3)", format_number(ledger.entropies[2]));

    if (const auto path = output_path(opt, cfg)) {
        const auto j = serialize::ledger_to_json(ledger);
        if (!write_file(*path, j.dump(2) + "\n", err)) return kExitUsage;
    }
    return kExitOk;
}

int cmd_sweep(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::vector<config::SweepAxis> axes;
    try {
        cfg = config::parse_config_file(opt.config_path);
        axes = cfg.axes;
        if (axes.empty())
            throw ConfigError("sweep requires a [sweep] section with an axis");
        if (axes.size() > 2)
            throw ConfigError("at most two sweep axes are supported");
        for (const auto& axis : axes)
            if (axis.param == "time")
                throw ConfigError("the time axis belongs to `thermalize`");
        config::make_cycle_config(cfg); // validate base parameters up front
    } catch (const std::exception& e) {
        return usage_error(err, e.what());
    }

    std::string csv;
    for (const auto& axis : axes) csv += axis.param + ",";
    csv += "W,Q_in,Q_out,eta,xi,w_positive,necessary_condition\n";

    const auto values0 = grid_values(axes[0]);
    const auto values1 =
        axes.size() == 2 ? grid_values(axes[1]) : std::vector<double>{0.0};

    // Lexicographic grid order: first axis outer, second inner.
    for (double v0 : values0) {
        for (double v1 : values1) {
            RunConfig point = cfg;
            try {
                apply_sweep_value(point, axes[0].param, v0);
                if (axes.size() == 2)
                    apply_sweep_value(point, axes[1].param, v1);
                const auto cycle_cfg = config::make_cycle_config(point);
                const auto ledger = engine::run_cycle(cycle_cfg);
                const auto pw = engine::positive_work_condition(cycle_cfg);
                std::string eta_cell, xi_cell;
                if (ledger.eta) {
                    eta_cell = format_number(*ledger.eta);
                    try {
                        xi_cell = format_number(
                            engine::efficiency_closed_form(cycle_cfg).xi);
                    } catch (const std::invalid_argument&) {
                        xi_cell.clear();
                    }
                }
                csv += format_number(v0) + ",";
                if (axes.size() == 2) csv += format_number(v1) + ",";
                csv += format_number(ledger.w) + "," +
                       format_number(ledger.q_in) + "," +
                       format_number(ledger.q_out) + "," + eta_cell + "," +
                       xi_cell + "," + (pw.w_positive ? "true" : "false") +
                       "," +
                       (pw.necessary_condition_holds ? "true" : "false") +
                       "\n";
            } catch (const std::exception& e) {
                return usage_error(err, std::string("grid point failed: ") +
                                            e.what());
            }
        }
    }

    if (const auto path = output_path(opt, cfg)) {
        if (!write_file(*path, csv, err)) return kExitUsage;
        out << "wrote " << values0.size() * values1.size() << " rows\n";
    } else {
        out << csv;
    }
    return kExitOk;
}

int cmd_decompose(const CliOptions& opt, std::ostream& out,
                  std::ostream& err) {
    if (!(opt.coupling > 0.0) || !std::isfinite(opt.coupling))
        return usage_error(err, "--coupling must be positive");
    gates::DecompositionTarget target;
    if (opt.target == "cnot") target = gates::DecompositionTarget::CnotS;
    else if (opt.target == "swap") target = gates::DecompositionTarget::Swap;
    else return usage_error(err, "--target must be cnot or swap");

    std::optional<std::string> path = opt.out_path;
    if (!opt.config_path.empty()) {
        try {
            const auto cfg = config::parse_config_file(opt.config_path);
            if (!path) path = cfg.output.path;
        } catch (const std::exception& e) {
            return usage_error(err, e.what());
        }
    }

    try {
        const auto report =
            gates::verify_decomposition(opt.coupling, target);
        out << "certified: control=" << name(report.best_signs.control)
            << " signs=[";
        for (size_t k = 0; k < report.best_signs.signs.size(); ++k)
            out << (k ? "," : "")
                << (report.best_signs.signs[k] > 0 ? "+" : "-");
        out << "] correction=" << report.local_correction
            << " distance=" << format_number(report.distance) << "\n";
        const auto j = serialize::report_to_json(report);
        out << j.dump(2) << "\n";
        if (path && !write_file(*path, j.dump(2) + "\n", err))
            return kExitUsage;
        return kExitOk;
    } catch (const gates::DecompositionError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

int cmd_device(const CliOptions& opt, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = config::parse_config_file(opt.config_path);
        if (!cfg.device)
            throw ConfigError("device command requires a [device] section");
    } catch (const std::exception& e) {
        return usage_error(err, e.what());
    }
    const auto& dev = *cfg.device;

    double eta_dev = 0.0;
    engine::CycleConfig cycle_cfg{states::QubitParams(1, 1),
                                  states::QubitParams(1, 1)};
    try {
        eta_dev = device::device_efficiency(dev.s.gate_charge,
                                            dev.d.gate_charge);
        cycle_cfg = device::engine_config(dev);
    } catch (const std::invalid_argument& e) {
        return usage_error(err, e.what());
    }

    const double delta_s = device::gap_from_gate(dev.s);
    const double delta_d = device::gap_from_gate(dev.d);
    const double e_l = device::coupling_from_flux(dev.coupler);
    const double t0 = device::iswap_duration(dev.coupler.josephson_energy);
    const auto otto = device::otto_limit_check(dev);
    const auto power = device::power_estimate(cycle_cfg, dev.cycle_time);
    const auto ledger = engine::run_cycle(cycle_cfg);
    const auto schedule = device::pulse_schedule(cycle_cfg, dev);
    const double exp_beta_s = std::exp(
        -delta_s / (device::consts::k_b * dev.s.temperature));

    out << "device scenario\n";
    out << "  Delta_S            " << format_number(delta_s) << " J\n";
    out << "  Delta_D            " << format_number(delta_d) << " J\n";
    out << "  E_L(Phi_x)         " << format_number(e_l) << " J"
        << (e_l == 0.0 ? "  (coupling OFF)" : "") << "\n";
    out << "  t0                 " << format_number(t0) << " s\n";
    out << "  eta_device         " << format_number(eta_dev) << "\n";
    if (dev.d.gate_charge == 0.5)
        out << "  warning: n_gD = 1/2 gives a zero demon gap; eta = 1 is an "
               "unreachable limit\n";
    out << "  W                  " << format_number(power.work) << " J\n";
    out << "  P                  " << format_number(power.power) << " W\n";
    out << "  eta_cycle          " << eta_text(ledger) << "\n";
    out << "  exp(-beta_S D_S)   " << format_number(exp_beta_s) << "\n";
    out << "  exp(-beta_D D_D)   " << format_number(otto.exp_beta_d_delta_d)
        << (otto.satisfied ? "  (Otto limit holds)" : "  (Otto limit NOT met)")
        << "\n";
    if (dev.otto_mode && !otto.satisfied)
        out << "  warning: otto_mode claimed but exp(-beta_D Delta_D) >= "
               "1e-6\n";
    out << "  schedule           " << schedule.entries.size()
        << " entries, wait " << format_number(schedule.thermalization_wait)
        << " s, gates " << format_number(schedule.total_gate_time) << " s"
        << (schedule.timing_warning ? "  TIMING WARNING" : "") << "\n";

    if (const auto path = output_path(opt, cfg)) {
        // The report is JSON unless the schedule CSV is asked for.
        const std::string format = output_format(opt, cfg, "json");
        if (format == "csv") {
            if (!write_file(*path, serialize::schedule_to_csv(schedule), err))
                return kExitUsage;
        } else {
            nlohmann::json si = {{"work_joule", power.work},
                                 {"power_watt", power.power},
                                 {"delta_s_joule", delta_s},
                                 {"delta_d_joule", delta_d},
                                 {"coupling_joule", e_l},
                                 {"t0_seconds", t0},
                                 {"eta_device", eta_dev},
                                 {"exp_beta_s_delta_s", exp_beta_s},
                                 {"exp_beta_d_delta_d",
                                  otto.exp_beta_d_delta_d},
                                 {"otto_limit", otto.satisfied}};
            nlohmann::json j = {
                {"ledger", serialize::ledger_to_json(ledger, si)},
                {"schedule", serialize::schedule_to_json(schedule)}};
            if (!write_file(*path, j.dump(2) + "\n", err)) return kExitUsage;
        }
    }
    return kExitOk;
}

int cmd_thermalize(const CliOptions& opt, std::ostream& out,
                   std::ostream& err) {
    RunConfig cfg;
    qmat::ComplexMatrix rho0{4};
    qmat::ComplexMatrix gibbs{4};
    std::optional<thermo::BathParams> s_bath, d_bath;
    std::vector<double> times;
    try {
        cfg = config::parse_config_file(opt.config_path);
        if (!cfg.s_gap || !cfg.s_temperature || !cfg.d_gap ||
            !cfg.d_temperature)
            throw ConfigError(
                "thermalize requires [system] and [demon] parameters");
        const states::QubitParams s(*cfg.s_gap, *cfg.s_temperature);
        const states::QubitParams d(*cfg.d_gap, *cfg.d_temperature);
        s_bath.emplace(*cfg.s_temperature, cfg.s_damping.value_or(1.0));
        d_bath.emplace(*cfg.d_temperature, cfg.d_damping.value_or(1.0));
        gibbs = joint_thermal_state(s, d).rho;

        if (cfg.initial == "thermal") {
            rho0 = gibbs;
        } else if (cfg.initial == "excited") {
            qmat::EigenMatrix m = qmat::EigenMatrix::Zero(4, 4);
            m(3, 3) = 1.0;
            rho0 = qmat::ComplexMatrix::from_eigen(std::move(m));
        } else if (cfg.initial == "bell") {
            // (|0,0> + |1,1>) / sqrt(2)
            qmat::EigenMatrix m = qmat::EigenMatrix::Zero(4, 4);
            m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
            rho0 = qmat::ComplexMatrix::from_eigen(std::move(m));
        } else {
            throw ConfigError("unknown initial state '" + cfg.initial + "'");
        }

        config::SweepAxis axis;
        if (!cfg.axes.empty()) {
            axis = cfg.axes.front();
            if (axis.param != "time")
                throw ConfigError("thermalize sweeps the \"time\" axis only");
        } else {
            axis.param = "time";
            axis.min = 0.0;
            axis.max = 20.0 / std::min(s_bath->damping_rate,
                                       d_bath->damping_rate);
            axis.count = 101;
        }
        if (axis.min < 0.0) throw ConfigError("time grid must start at >= 0");
        times = grid_values(axis);
    } catch (const std::exception& e) {
        return usage_error(err, e.what());
    }

    auto sigma_z = [](const qmat::ComplexMatrix& rho, Subsystem q) {
        const auto reduced = qmat::partial_trace(rho, q);
        // Population difference z = p_excited - p_ground.
        return reduced(1, 1).real() - reduced(0, 0).real();
    };

    std::string csv = "t,sigma_z_s,sigma_z_d,trace_distance_to_gibbs\n";
    for (double t : times) {
        const auto rho = thermo::thermalize(rho0, *s_bath, *d_bath,
                                            *cfg.s_gap, *cfg.d_gap, t);
        csv += format_number(t) + "," +
               format_number(sigma_z(rho, Subsystem::S)) + "," +
               format_number(sigma_z(rho, Subsystem::D)) + "," +
               format_number(qmat::trace_distance(rho, gibbs)) + "\n";
    }

    if (const auto path = output_path(opt, cfg)) {
        if (!write_file(*path, csv, err)) return kExitUsage;
        out << "wrote " << times.size() << " rows\n";
    } else {
        out << csv;
    }
    return kExitOk;
}

} // namespace demon::commands
