#pragma once

#include <string>
#include <vector>

#include "demon/engine.hpp"

namespace demon::device {

namespace consts {
inline constexpr double hbar = 1.054571817e-34; // J s
inline constexpr double k_b = 1.380649e-23;     // J / K
} // namespace consts

/// Charge qubit in SI units. The level spacing is
/// Delta = charging_energy * |gate_charge - 1/2|.
struct ChargeQubitParams {
    double charging_energy; // E_c, joule
    double gate_charge;     // n_g, dimensionless, in [0, 1]
    double temperature;     // kelvin

    ChargeQubitParams(double charging_energy, double gate_charge,
                      double temperature);
};

/// Flux-tunable dc SQUID coupler: E_L = E_0 cos(pi * flux_ratio).
struct CouplerParams {
    double josephson_energy; // E_0, joule
    double flux_ratio;       // Phi_x / Phi_0, in [0, 1]

    CouplerParams(double josephson_energy, double flux_ratio);
};

/// Full device scenario. Defaults follow the published magnitudes for
/// charge-qubit circuits: E_c ~ 1e-23 J, gate offsets a few parts in a
/// thousand, a 10 mK hot bath and a 1 mK cold bath, ns-scale two-qubit
/// windows and us-scale relaxation.
struct DeviceParams {
    ChargeQubitParams s{1e-23, 0.492, 1e-2};
    ChargeQubitParams d{1e-23, 0.497, 1e-3};
    CouplerParams coupler{2e-26, 0.5};
    double cycle_time = 1e-5;           // s, one full cycle
    double relaxation_time = 2e-6;      // s, bath equilibration scale
    double rotation_pulse_time = 1e-10; // s, single-qubit pulse width
    bool otto_mode = false;             // claimed Otto-limit operation
};

/// Delta = E_c |n_g - 1/2| (joule). Zero at the degeneracy point; the
/// engine layer rejects zero gaps when a cycle is actually built.
double gap_from_gate(const ChargeQubitParams& q);

/// E_L = E_0 cos(pi * flux_ratio) (joule); exactly 0 at flux_ratio = 1/2.
double coupling_from_flux(const CouplerParams& c);

/// eta = 1 - |2 n_gD - 1| / |2 n_gS - 1|, valid for equal charging
/// energies in the Otto limit. Independent of both temperatures.
double device_efficiency(double n_g_s, double n_g_d);

/// t0 = pi hbar / (4 E_0), seconds.
double iswap_duration(double e_0);

/// Engine configuration in kelvin-valued natural units: temperatures stay
/// in kelvin and gaps are divided by k_B, so Boltzmann exponents are
/// preserved and cycle energies come out in units of k_B * 1 K.
/// power_estimate restores joules.
engine::CycleConfig engine_config(const DeviceParams& dev);

struct OttoLimitCheck {
    double exp_beta_d_delta_d; // computed value, not the published rounding
    bool satisfied;            // < 1e-6
};

OttoLimitCheck otto_limit_check(const DeviceParams& dev);

struct ScheduleEntry {
    double t_start; // s
    double t_end;   // s
    std::string channel;
    double value;
};

struct PulseSchedule {
    std::vector<ScheduleEntry> entries;
    double thermalization_wait; // s
    double total_gate_time;     // s, both CNOT sequences
    bool timing_warning;        // gate time >= 10% of relaxation time
};

/// Control timeline for one cycle: thermalization wait with the coupler
/// off, the pre-measurement CNOT sequence (control S), the feedback CNOT
/// sequence (control D), and a final flux-off hold. Entries are
/// non-overlapping and time-ordered.
PulseSchedule pulse_schedule(const engine::CycleConfig& cfg,
                             const DeviceParams& dev);

struct PowerEstimate {
    double work;  // J per cycle
    double power; // W
};

/// Closed-form work of a cycle configured by engine_config, converted back
/// to joules, and P = W / cycle_time.
PowerEstimate power_estimate(const engine::CycleConfig& cfg_si,
                             double cycle_time = 1e-5);

} // namespace demon::device
