#include "demon/device.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace demon::device {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(std::string(what) +
                                    " must be positive and finite");
}

} // namespace

ChargeQubitParams::ChargeQubitParams(double charging_energy_,
                                     double gate_charge_, double temperature_)
    : charging_energy(charging_energy_),
      gate_charge(gate_charge_),
      temperature(temperature_) {
    require_finite_positive(charging_energy, "charging energy");
    require_finite_positive(temperature, "device temperature");
    if (!(gate_charge >= 0.0) || !(gate_charge <= 1.0))
        throw std::invalid_argument("gate charge must lie in [0, 1]");
}

CouplerParams::CouplerParams(double josephson_energy_, double flux_ratio_)
    : josephson_energy(josephson_energy_), flux_ratio(flux_ratio_) {
    require_finite_positive(josephson_energy, "Josephson energy");
    if (!(flux_ratio >= 0.0) || !(flux_ratio <= 1.0))
        throw std::invalid_argument("flux ratio must lie in [0, 1]");
}

double gap_from_gate(const ChargeQubitParams& q) {
    return q.charging_energy * std::abs(q.gate_charge - 0.5);
}

double coupling_from_flux(const CouplerParams& c) {
    if (c.flux_ratio == 0.5) return 0.0; // exact off switch
    return c.josephson_energy * std::cos(kPi * c.flux_ratio);
}

double device_efficiency(double n_g_s, double n_g_d) {
    const double gs = std::abs(2.0 * n_g_s - 1.0);
    if (gs == 0.0)
        throw std::invalid_argument(
            "device_efficiency: n_gS = 1/2 gives a zero working gap");
    return 1.0 - std::abs(2.0 * n_g_d - 1.0) / gs;
}

double iswap_duration(double e_0) {
    require_finite_positive(e_0, "Josephson energy");
    return kPi * consts::hbar / (4.0 * e_0);
}

engine::CycleConfig engine_config(const DeviceParams& dev) {
    const states::QubitParams s(gap_from_gate(dev.s) / consts::k_b,
                                dev.s.temperature);
    const states::QubitParams d(gap_from_gate(dev.d) / consts::k_b,
                                dev.d.temperature);
    engine::CycleConfig cfg{s, d};
    cfg.feedback = engine::FeedbackKind::cnot;
    return cfg;
}

OttoLimitCheck otto_limit_check(const DeviceParams& dev) {
    const double beta_d_delta_d =
        gap_from_gate(dev.d) / (consts::k_b * dev.d.temperature);
    const double value = std::exp(-std::min(beta_d_delta_d, 700.0));
    return {value, value < 1e-6};
}

PulseSchedule pulse_schedule(const engine::CycleConfig& cfg,
                             const DeviceParams& dev) {
    if (cfg.feedback != engine::FeedbackKind::cnot)
        throw std::invalid_argument(
            "the device realizes CNOT feedback; cev schedules are not modeled");
    const double e_0 = dev.coupler.josephson_energy;
    const double t0 = iswap_duration(e_0);
    const double t_rot = dev.rotation_pulse_time;

    PulseSchedule schedule;
    schedule.thermalization_wait = 5.0 * dev.relaxation_time;

    double t = 0.0;
    auto emit = [&](const std::string& channel, double value,
                    double duration) {
        schedule.entries.push_back({t, t + duration, channel, value});
        t += duration;
    };

    // S1: coupler off while both qubits equilibrate with their baths.
    emit("flux", 0.5, schedule.thermalization_wait);

    const double gate_start = t;
    // One CNOT: the certified five-rotation sequence with two native
    // windows. Rotation pulses run with the coupler off; the native
    // windows drive the flux to full coupling.
    auto emit_cnot = [&](Subsystem control) {
        const auto seq =
            gates::cnot_from_sequence(1.0, gates::SignAssignment{control})
                .seq;
        for (const auto& step : seq.steps) {
            switch (step.kind) {
                case gates::StepKind::rot_x:
                    emit(step.target == gates::StepTarget::S ? "rot_x_s"
                                                             : "rot_x_d",
                         step.value, t_rot);
                    break;
                case gates::StepKind::rot_z:
                    emit(step.target == gates::StepTarget::S ? "rot_z_s"
                                                             : "rot_z_d",
                         step.value, t_rot);
                    break;
                case gates::StepKind::native_evolve:
                    emit("flux", 0.0, t0);
                    break;
                case gates::StepKind::barrier: break;
            }
        }
    };
    emit_cnot(Subsystem::S); // S2: pre-measurement, control S
    emit_cnot(Subsystem::D); // S3: feedback, control D
    schedule.total_gate_time = t - gate_start;

    // Decouple before the next cycle.
    emit("flux", 0.5, t_rot);

    schedule.timing_warning =
        schedule.total_gate_time >= 0.1 * dev.relaxation_time;
    return schedule;
}

PowerEstimate power_estimate(const engine::CycleConfig& cfg_si,
                             double cycle_time) {
    require_finite_positive(cycle_time, "cycle time");
    // The kelvin-unit work times k_B is the work in joules.
    const double w = consts::k_b * engine::work_closed_form(cfg_si);
    return {w, w / cycle_time};
}

} // namespace demon::device
