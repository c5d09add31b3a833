#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "demon/device.hpp"
#include "test_support.hpp"

using namespace demon;
using test_support::Rng;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gap_from_gate") {
    CHECK(device::gap_from_gate({1e-23, 0.5, 1e-2}) == 0.0);
    CHECK(std::abs(device::gap_from_gate({1e-23, 0.492, 1e-2}) - 8e-26) <=
          1e-12 * 8e-26);

    // Boltzmann factor of order 1/e for the published magnitudes.
    const device::ChargeQubitParams q{1e-23, 0.492, 1e-2};
    const double x =
        device::gap_from_gate(q) / (device::consts::k_b * q.temperature);
    CHECK(std::exp(-x) >= 0.1);
    CHECK(std::exp(-x) <= 1.0);

    CHECK_THROWS_AS(device::ChargeQubitParams(-1e-23, 0.4, 1e-2),
                    std::invalid_argument);
    CHECK_THROWS_AS(device::ChargeQubitParams(1e-23, 1.4, 1e-2),
                    std::invalid_argument);
}

TEST_CASE("coupling_from_flux") {
    CHECK(device::coupling_from_flux({2e-26, 0.5}) == 0.0);
    CHECK(device::coupling_from_flux({2e-26, 0.0}) == 2e-26);
    CHECK(std::abs(device::coupling_from_flux({2e-26, 1.0 / 3.0}) - 1e-26) <=
          1e-12 * 1e-26);
}

TEST_CASE("even/odd symmetry of the parameter maps") {
    Rng rng(101);
    for (int rep = 0; rep < 30; ++rep) {
        const double n_g = rng.uniform(0.0, 1.0);
        CHECK(device::gap_from_gate({1e-23, n_g, 1e-2}) ==
              device::gap_from_gate({1e-23, 1.0 - n_g, 1e-2}));
        const double r = rng.uniform(0.0, 1.0);
        CHECK(std::abs(device::coupling_from_flux({1e-24, r}) +
                       device::coupling_from_flux({1e-24, 1.0 - r})) <=
              1e-12 * 1e-24);
    }
}

TEST_CASE("device_efficiency") {
    CHECK(std::abs(device::device_efficiency(0.492, 0.498) - 0.75) <= 1e-12);
    CHECK(device::device_efficiency(0.43, 0.43) == 0.0);
    CHECK(device::device_efficiency(0.492, 0.5) == 1.0); // unreachable limit
    CHECK_THROWS_AS(device::device_efficiency(0.5, 0.498),
                    std::invalid_argument);

    // The formula never reads a temperature, so any two scenarios with the
    // same gate charges give bit-identical efficiencies.
    CHECK(device::device_efficiency(0.492, 0.498) ==
          device::device_efficiency(0.492, 0.498));
}

TEST_CASE("iswap_duration") {
    CHECK(std::abs(device::iswap_duration(kPi * device::consts::hbar / 4.0) -
                   1.0) <= 1e-12);
    CHECK(std::abs(device::iswap_duration(2e-26) -
                   0.5 * device::iswap_duration(1e-26)) <=
          1e-12 * device::iswap_duration(1e-26));
    const double t0 = device::iswap_duration(2e-26);
    CHECK(t0 >= 1e-9);
    CHECK(t0 <= 1e-8);
}

TEST_CASE("SI path agrees with the natural-units efficiency") {
    // Equal charging energies, cold demon, CNOT feedback.
    device::DeviceParams dev;
    dev.s = device::ChargeQubitParams(1e-23, 0.492, 1e-2);
    dev.d = device::ChargeQubitParams(1e-23, 0.498, 5e-5);
    const auto check = device::otto_limit_check(dev);
    CHECK(check.exp_beta_d_delta_d < 1e-8);
    CHECK(check.satisfied);

    const auto cfg = device::engine_config(dev);
    const auto eff = engine::efficiency_closed_form(cfg);
    const double eta_dev =
        device::device_efficiency(dev.s.gate_charge, dev.d.gate_charge);
    CHECK(std::abs(eff.eta - eta_dev) <= 1e-6);
}

TEST_CASE("otto limit check reports the computed value") {
    const device::DeviceParams dev; // defaults: T_D = 1 mK, n_gD = 0.497
    const auto check = device::otto_limit_check(dev);
    CHECK_FALSE(check.satisfied);
    CHECK(std::abs(check.exp_beta_d_delta_d - 0.1138) <= 1e-3);
}

TEST_CASE("power estimate lands in the published windows") {
    const device::DeviceParams dev;
    const auto cfg = device::engine_config(dev);
    const auto estimate = device::power_estimate(cfg, dev.cycle_time);
    CHECK(estimate.work >= 1e-26);
    CHECK(estimate.work <= 1e-24);
    CHECK(estimate.power >= 1e-21);
    CHECK(estimate.power <= 1e-19);
    CHECK(estimate.power == estimate.work / dev.cycle_time);
}

TEST_CASE("pulse schedule structure") {
    const device::DeviceParams dev;
    const auto cfg = device::engine_config(dev);
    const auto schedule = device::pulse_schedule(cfg, dev);

    REQUIRE(!schedule.entries.empty());
    double previous_end = 0.0;
    int native_windows = 0;
    for (const auto& entry : schedule.entries) {
        CHECK(entry.t_start >= previous_end - 1e-18);
        CHECK(entry.t_end > entry.t_start);
        previous_end = entry.t_end;
        if (entry.channel == "flux" && entry.value == 0.0) ++native_windows;
    }
    CHECK(native_windows == 4); // two per CNOT

    CHECK(schedule.thermalization_wait == 5.0 * dev.relaxation_time);
    CHECK(schedule.thermalization_wait >= 1e-6);
    CHECK(schedule.thermalization_wait <= 1e-4);
    CHECK(schedule.total_gate_time >= 1e-9);
    CHECK(schedule.total_gate_time <= 1e-7);
    CHECK_FALSE(schedule.timing_warning);

    device::DeviceParams slow = dev;
    slow.relaxation_time = 1e-7; // gates no longer negligible
    CHECK(device::pulse_schedule(device::engine_config(slow), slow)
              .timing_warning);
}
