// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code = number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "demon/commands.hpp"
#include "demon/device.hpp"
#include "demon/engine.hpp"

#include "test_support.hpp"

using namespace demon;
using engine::CycleConfig;
using engine::FeedbackKind;
using states::QubitParams;
using test_support::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

CycleConfig random_valid_config(Rng& rng) {
    for (;;) {
        const double s_gap = rng.uniform(0.3, 2.5);
        const double d_gap = rng.uniform(0.3, 2.5);
        const double s_t = rng.uniform(0.3, 3.0);
        const double d_t = rng.uniform(0.3, 3.0);
        if (std::abs(s_gap / s_t - d_gap / d_t) < 0.5) continue;
        CycleConfig cfg{QubitParams(s_gap, s_t), QubitParams(d_gap, d_t)};
        cfg.feedback = FeedbackKind::cev;
        cfg.theta = rng.uniform(0.15 * kPi, 0.85 * kPi);
        cfg.phi = rng.uniform(0.0, 2.0 * kPi);
        return cfg;
    }
}

// ---- criterion 1: the published eta = 0.75 device example ----------------
Outcome criterion_eta_075() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();

    const double eta_dev = device::device_efficiency(0.492, 0.498);
    o.require(std::abs(eta_dev - 0.75) <= 1e-12,
              "device_efficiency(0.492, 0.498) != 0.75");

    device::DeviceParams dev;
    dev.s = device::ChargeQubitParams(1e-23, 0.492, 1e-2);
    dev.d = device::ChargeQubitParams(1e-23, 0.498, 5e-5);
    o.require(device::otto_limit_check(dev).exp_beta_d_delta_d < 1e-8,
              "exp(-beta_D Delta_D) not below 1e-8");

    const auto ledger = engine::run_cycle(device::engine_config(dev));
    o.require(ledger.eta.has_value(), "cycle eta undefined");
    if (ledger.eta)
        o.require(std::abs(*ledger.eta - 0.75) < 1e-4,
                  "simulated eta differs from 0.75 by >= 1e-4");

    o.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    return o;
}

// ---- criterion 2: Otto-limit degeneration --------------------------------
Outcome criterion_otto_limit() {
    Outcome o;
    Rng rng(202);
    for (int rep = 0; rep < 50; ++rep) {
        const double s_gap = rng.uniform(0.5, 2.0);
        const double d_gap = s_gap * rng.uniform(0.05, 1.0);
        const double s_t = rng.uniform(0.5, 5.0);
        const double beta_d_delta_d = rng.uniform(25.0, 60.0); // >= 20
        CycleConfig cfg{QubitParams(s_gap, s_t),
                        QubitParams(d_gap, d_gap / beta_d_delta_d)};
        cfg.feedback = FeedbackKind::cnot;
        const auto ledger = engine::run_cycle(cfg);
        if (!ledger.eta) {
            o.require(false, "eta undefined in the Otto regime");
            break;
        }
        const double otto = 1.0 - d_gap / s_gap;
        o.require(std::abs(*ledger.eta - otto) < 1e-7,
                  "eta misses 1 - Delta_D/Delta_S by >= 1e-7");
    }
    return o;
}

// ---- criteria 3-5: oracle agreement, conservation, entropy ----------------
struct OracleBundle {
    Outcome agreement;
    Outcome conservation;
    Outcome entropy;
};

OracleBundle criterion_oracle_sample() {
    OracleBundle b;
    const auto start = std::chrono::steady_clock::now();
    Rng rng(303);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto cfg = random_valid_config(rng);
        const auto ledger = engine::run_cycle(cfg);
        const double w_cf = engine::work_closed_form(cfg);
        const double q_cf = engine::qin_closed_form(cfg);

        b.agreement.require(
            std::abs(ledger.w - w_cf) <= 1e-12 * std::max(1.0, std::abs(w_cf)),
            "W: closed form vs brute force");
        b.agreement.require(
            std::abs(ledger.q_in - q_cf) <=
                1e-12 * std::max(1.0, std::abs(q_cf)),
            "Q_in: closed form vs brute force");
        if (ledger.eta)
            b.agreement.require(
                std::abs(*ledger.eta -
                         engine::efficiency_closed_form(cfg).eta) <= 1e-10,
                "eta: closed form vs brute force");

        b.conservation.require(
            std::abs(ledger.w - (ledger.q_in - ledger.q_out)) <= 1e-12,
            "W != Q_in - Q_out");

        b.entropy.require(
            std::abs(ledger.entropies[0] - ledger.entropies[1]) <= 1e-10 &&
                std::abs(ledger.entropies[1] - ledger.entropies[2]) <= 1e-10,
            "entropy changed across a unitary stage");
    }
    b.agreement.require(seconds_since(start) < 10.0, "runtime >= 10 s");
    return b;
}

// ---- criterion 6: positive-work necessary condition -----------------------
Outcome criterion_positive_work() {
    Outcome o;
    Rng rng(606);
    int positives = 0;
    for (int rep = 0; rep < 10000; ++rep) {
        CycleConfig cfg{
            QubitParams(rng.uniform(0.1, 4.0), rng.uniform(0.05, 5.0)),
            QubitParams(rng.uniform(0.1, 4.0), rng.uniform(0.05, 5.0))};
        cfg.feedback = FeedbackKind::cev;
        cfg.theta = rng.uniform(0.01, kPi - 0.01);
        const auto report = engine::positive_work_condition(cfg);
        if (report.w_positive) {
            ++positives;
            o.require(report.necessary_condition_holds,
                      "W > 0 without T_S >= T_D Delta_S / Delta_D");
        }
    }
    o.require(positives > 0, "sample never reached the positive-work regime");
    return o;
}

// ---- criterion 7: decomposition certification -----------------------------
Outcome criterion_decomposition() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    gates::SignAssignment reference;
    bool first = true;
    for (double e_l : {0.5, 1.0, 2.0}) {
        gates::DecompositionReport report;
        try {
            report = gates::verify_decomposition(e_l);
        } catch (const gates::DecompositionError&) {
            o.require(false, "no certified assignment found");
            break;
        }
        o.require(report.distance < 1e-10, "distance >= 1e-10");

        int native = 0;
        for (const auto& step : report.sequence.steps)
            if (step.kind == gates::StepKind::native_evolve) {
                ++native;
                o.require(std::abs(step.value - kPi / (4.0 * e_l)) <=
                              1e-12 * (kPi / (4.0 * e_l)),
                          "native window duration != pi/(4 E_L)");
            }
        o.require(native == 2, "sequence does not have 2 native windows");

        if (first) {
            reference = report.best_signs;
            first = false;
        } else {
            o.require(report.best_signs == reference,
                      "certified signs changed with E_L");
        }
    }
    o.require(seconds_since(start) < 1.0, "runtime >= 1 s");
    return o;
}

// ---- criterion 8: thermalization universality ------------------------------
Outcome criterion_thermalization() {
    Outcome o;
    Rng rng(808);
    const thermo::BathParams s_bath(1.7, 1.0);
    const thermo::BathParams d_bath(0.4, 1.0);
    const double s_gap = 2.0, d_gap = 1.0;
    const double t_end = 50.0; // gamma = 1
    const auto gibbs =
        states::joint_thermal_state(QubitParams(s_gap, s_bath.temperature),
                                    QubitParams(d_gap, d_bath.temperature))
            .rho;

    std::vector<qmat::ComplexMatrix> endpoints;
    int entangled = 0;
    while (endpoints.size() < 100) {
        qmat::ComplexMatrix rho0{4};
        if (entangled < 20) {
            rho0 = test_support::random_pure(rng, 4);
            const auto reduced = qmat::partial_trace(rho0, Subsystem::S);
            const double purity =
                (reduced.eigen() * reduced.eigen()).trace().real();
            if (purity > 0.95) continue; // nearly separable, resample
            ++entangled;
        } else {
            rho0 = test_support::random_density(rng, 4);
        }
        endpoints.push_back(
            thermo::thermalize(rho0, s_bath, d_bath, s_gap, d_gap, t_end));
        o.require(qmat::trace_distance(endpoints.back(), gibbs) < 1e-6,
                  "endpoint missed the Gibbs product");
    }
    for (size_t i = 0; i < endpoints.size(); ++i)
        for (size_t j = i + 1; j < endpoints.size(); ++j)
            o.require(qmat::trace_distance(endpoints[i], endpoints[j]) < 1e-6,
                      "endpoints differ pairwise");
    return o;
}

// ---- criterion 9: CEV optimality and phi-inertness -------------------------
Outcome criterion_cev_optimality() {
    Outcome o;
    int best_k = -1;
    double best_w = -1e30;
    for (int k = 0; k <= 180; ++k) {
        CycleConfig cfg{QubitParams(2.0, 2.0), QubitParams(1.0, 0.5)};
        cfg.feedback = FeedbackKind::cev;
        cfg.theta = kPi * k / 180.0;
        const auto ledger = engine::run_cycle(cfg);
        if (ledger.w > best_w) {
            best_w = ledger.w;
            best_k = k;
        }
    }
    o.require(best_k == 90, "W not maximized at theta = pi/2");

    CycleConfig cfg{QubitParams(2.0, 2.0), QubitParams(1.0, 0.5)};
    cfg.feedback = FeedbackKind::cev;
    cfg.theta = 0.77;
    std::vector<engine::CycleLedger> ledgers;
    for (double phi : {0.0, kPi / 4.0, kPi, 1.5 * kPi}) {
        cfg.phi = phi;
        ledgers.push_back(engine::run_cycle(cfg));
    }
    for (size_t i = 1; i < ledgers.size(); ++i) {
        o.require(std::abs(ledgers[i].w - ledgers[0].w) <= 1e-12,
                  "W depends on phi");
        o.require(std::abs(ledgers[i].q_in - ledgers[0].q_in) <= 1e-12,
                  "Q_in depends on phi");
        o.require(std::abs(*ledgers[i].eta - *ledgers[0].eta) <= 1e-12,
                  "eta depends on phi");
    }
    return o;
}

// ---- criterion 10: order-of-magnitude device estimates ---------------------
Outcome criterion_device_magnitudes() {
    Outcome o;
    const device::DeviceParams dev; // published magnitudes
    const auto cfg = device::engine_config(dev);
    const auto estimate = device::power_estimate(cfg, dev.cycle_time);
    o.require(estimate.work >= 1e-26 && estimate.work <= 1e-24,
              "W outside [1e-26, 1e-24] J");
    o.require(estimate.power >= 1e-21 && estimate.power <= 1e-19,
              "P outside [1e-21, 1e-19] W");
    const double exp_beta_s =
        std::exp(-device::gap_from_gate(dev.s) /
                 (device::consts::k_b * dev.s.temperature));
    o.require(exp_beta_s >= 0.1 && exp_beta_s <= 1.0,
              "exp(-beta_S Delta_S) outside [0.1, 1.0]");
    return o;
}

// ---- criterion 11: byte-identical reruns -----------------------------------
Outcome criterion_determinism() {
    namespace fs = std::filesystem;
    Outcome o;
    const fs::path dir =
        fs::temp_directory_path() / "demon-acceptance-determinism";
    fs::create_directories(dir);

    auto write = [&](const std::string& tag, const std::string& body) {
        const auto p = dir / tag;
        std::ofstream out(p, std::ios::binary);
        out << body;
        return p.string();
    };
    auto read = [&](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };

    const std::string cycle_conf = write("cycle.conf",
                                         "[system]\ngap = 2.0\ntemperature = "
                                         "2.0\n\n[demon]\ngap = "
                                         "1.0\ntemperature = 0.5\n");
    const std::string sweep_conf = write(
        "sweep.conf",
        "[system]\ngap = 2.0\ntemperature = 2.0\n\n[demon]\ngap = "
        "1.0\ntemperature = 0.5\n\n[sweep]\naxis = "
        "\"feedback.theta\"\nmin = 0.01\nmax = 3.13\ncount = 50\n\n[output]"
        "\nseed = 11\n");
    const std::string therm_conf = write(
        "therm.conf",
        "initial = \"bell\"\n\n[system]\ngap = 2.0\ntemperature = "
        "2.0\n\n[demon]\ngap = 1.0\ntemperature = 0.5\n");
    const std::string device_conf = write("device.conf", "[device]\n");
    const std::string no_conf;

    struct Job {
        const char* name;
        int (*cmd)(const commands::CliOptions&, std::ostream&, std::ostream&);
        const std::string* conf;
    };
    const Job jobs[] = {{"cycle.json", commands::cmd_cycle, &cycle_conf},
                        {"sweep.csv", commands::cmd_sweep, &sweep_conf},
                        {"therm.csv", commands::cmd_thermalize, &therm_conf},
                        {"device.json", commands::cmd_device, &device_conf},
                        {"decomp.json", commands::cmd_decompose, &no_conf}};
    for (const auto& job : jobs) {
        std::string bytes[2];
        std::string stdout_bytes[2];
        for (int pass = 0; pass < 2; ++pass) {
            commands::CliOptions opt;
            opt.config_path = *job.conf;
            opt.out_path =
                (dir / (std::to_string(pass) + "-" + job.name)).string();
            std::ostringstream out, err;
            const int code = job.cmd(opt, out, err);
            o.require(code == 0, std::string(job.name) + " exited nonzero");
            bytes[pass] = read(*opt.out_path);
            stdout_bytes[pass] = out.str();
        }
        o.require(!bytes[0].empty() && bytes[0] == bytes[1],
                  std::string(job.name) + " reruns differ");
        o.require(stdout_bytes[0] == stdout_bytes[1],
                  std::string(job.name) + " stdout reruns differ");
    }
    fs::remove_all(dir);
    return o;
}

int report(int id, const char* label, const Outcome& o) {
    std::printf("[%s] criterion %2d: %s%s%s\n", o.pass ? "PASS" : "FAIL", id,
                label, o.pass ? "" : " -- ", o.pass ? "" : o.detail.c_str());
    return o.pass ? 0 : 1;
}

} // namespace

int main() {
    int failures = 0;
    failures += report(1, "device example reproduces eta = 0.75",
                       criterion_eta_075());
    failures += report(2, "Otto-limit degeneration within 1e-7",
                       criterion_otto_limit());
    const auto bundle = criterion_oracle_sample();
    failures += report(3, "closed form vs brute force on 1000 configs",
                       bundle.agreement);
    failures += report(4, "energy conservation W = Q_in - Q_out",
                       bundle.conservation);
    failures += report(5, "entropy invariance across unitary stages",
                       bundle.entropy);
    failures += report(6, "positive work implies the temperature condition",
                       criterion_positive_work());
    failures += report(7, "CNOT decomposition certified across couplings",
                       criterion_decomposition());
    failures += report(8, "thermalization forgets 100 initial states",
                       criterion_thermalization());
    failures += report(9, "CNOT is the optimal CEV and phi is inert",
                       criterion_cev_optimality());
    failures += report(10, "device magnitudes match the published orders",
                       criterion_device_magnitudes());
    failures += report(11, "fixed config and seed give identical bytes",
                       criterion_determinism());
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all acceptance criteria passed\n");
    return failures;
}
