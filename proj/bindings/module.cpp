#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "demon/device.hpp"
#include "demon/engine.hpp"

namespace py = pybind11;

using demon::Subsystem;
using demon::qmat::ComplexMatrix;
using demon::qmat::EigenMatrix;

namespace {

Subsystem subsystem(const std::string& s) {
    if (s == "S") return Subsystem::S;
    if (s == "D") return Subsystem::D;
    throw std::invalid_argument("subsystem must be \"S\" or \"D\"");
}

ComplexMatrix wrap(const EigenMatrix& m) {
    return ComplexMatrix::from_eigen(m);
}

demon::engine::CycleConfig make_config(double s_gap, double s_temperature,
                                       double d_gap, double d_temperature,
                                       double theta, double phi,
                                       const std::string& feedback) {
    demon::engine::CycleConfig cfg{
        demon::states::QubitParams(s_gap, s_temperature),
        demon::states::QubitParams(d_gap, d_temperature)};
    cfg.theta = theta;
    cfg.phi = phi;
    if (feedback == "cnot") cfg.feedback = demon::engine::FeedbackKind::cnot;
    else if (feedback == "cev") cfg.feedback = demon::engine::FeedbackKind::cev;
    else throw std::invalid_argument("feedback must be \"cnot\" or \"cev\"");
    return cfg;
}

py::dict sequence_dict(const demon::gates::GateSequence& seq) {
    py::list steps;
    int index = 0;
    for (const auto& step : seq.steps) {
        py::dict s;
        s["index"] = index++;
        switch (step.kind) {
            case demon::gates::StepKind::rot_x: s["kind"] = "rot_x"; break;
            case demon::gates::StepKind::rot_z: s["kind"] = "rot_z"; break;
            case demon::gates::StepKind::native_evolve:
                s["kind"] = "native_evolve";
                break;
            case demon::gates::StepKind::barrier: s["kind"] = "barrier"; break;
        }
        s["target"] = step.target == demon::gates::StepTarget::S   ? "S"
                      : step.target == demon::gates::StepTarget::D ? "D"
                                                                   : "both";
        s["value"] = step.value;
        steps.append(std::move(s));
    }
    py::dict d;
    d["steps"] = std::move(steps);
    d["control"] = demon::name(seq.assignment.control);
    d["signs"] = seq.assignment.signs;
    d["coupling"] = seq.coupling;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maxwell's-demon-assisted quantum heat engine: two-qubit "
              "density-matrix laboratory";

    // ---- linear-algebra layer -------------------------------------------
    m.def("pauli_x", [] { return demon::qmat::pauli_x().eigen(); });
    m.def("pauli_y", [] { return demon::qmat::pauli_y().eigen(); });
    m.def("pauli_z", [] { return demon::qmat::pauli_z().eigen(); });
    m.def(
        "kron",
        [](const EigenMatrix& a, const EigenMatrix& b) {
            return demon::qmat::kron(wrap(a), wrap(b)).eigen();
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "expm_hermitian",
        [](const EigenMatrix& h, double t) {
            return demon::qmat::expm_hermitian(wrap(h), t).eigen();
        },
        py::arg("h"), py::arg("t"));
    m.def(
        "partial_trace",
        [](const EigenMatrix& rho, const std::string& keep) {
            return demon::qmat::partial_trace(wrap(rho), subsystem(keep))
                .eigen();
        },
        py::arg("rho"), py::arg("keep"));
    m.def(
        "vn_entropy",
        [](const EigenMatrix& rho) {
            return demon::qmat::vn_entropy(wrap(rho));
        },
        py::arg("rho"));
    m.def(
        "distance_up_to_global_phase",
        [](const EigenMatrix& u, const EigenMatrix& v) {
            return demon::qmat::distance_up_to_global_phase(wrap(u), wrap(v));
        },
        py::arg("u"), py::arg("v"));
    m.def(
        "trace_distance",
        [](const EigenMatrix& a, const EigenMatrix& b) {
            return demon::qmat::trace_distance(wrap(a), wrap(b));
        },
        py::arg("a"), py::arg("b"));

    // ---- thermal states --------------------------------------------------
    m.def(
        "gibbs_populations",
        [](double gap, double temperature) {
            const auto p = demon::states::gibbs_populations(
                demon::states::QubitParams(gap, temperature));
            return py::make_tuple(p.p0, p.p1);
        },
        py::arg("gap"), py::arg("temperature"));
    m.def(
        "joint_thermal_state",
        [](double s_gap, double s_temperature, double d_gap,
           double d_temperature) {
            const auto joint = demon::states::joint_thermal_state(
                demon::states::QubitParams(s_gap, s_temperature),
                demon::states::QubitParams(d_gap, d_temperature));
            py::dict d;
            d["rho"] = joint.rho.eigen();
            d["p"] = joint.p;
            d["z_s"] = joint.z_s;
            d["z_d"] = joint.z_d;
            return d;
        },
        py::arg("s_gap"), py::arg("s_temperature"), py::arg("d_gap"),
        py::arg("d_temperature"));
    m.def(
        "energy",
        [](const EigenMatrix& rho, double s_gap, double d_gap) {
            const auto e = demon::states::energy(wrap(rho), s_gap, d_gap);
            return py::make_tuple(e.s, e.d);
        },
        py::arg("rho"), py::arg("s_gap"), py::arg("d_gap"));

    // ---- gates -------------------------------------------------------------
    m.def("hamiltonian",
          [](double delta_s, double delta_d, double e_l) {
              return demon::gates::hamiltonian(delta_s, delta_d, e_l).eigen();
          },
          py::arg("delta_s"), py::arg("delta_d"), py::arg("e_l"));
    m.def(
        "rot",
        [](const std::string& axis, double theta, const std::string& target) {
            demon::gates::Axis a;
            if (axis == "x" || axis == "X") a = demon::gates::Axis::X;
            else if (axis == "z" || axis == "Z") a = demon::gates::Axis::Z;
            else throw std::invalid_argument("axis must be \"x\" or \"z\"");
            return demon::gates::rot(a, theta, subsystem(target)).eigen();
        },
        py::arg("axis"), py::arg("theta"), py::arg("target"));
    m.def(
        "iswap_primitive",
        [](double e_l) {
            const auto prim = demon::gates::iswap_primitive(e_l);
            return py::make_tuple(prim.u.eigen(), prim.t0);
        },
        py::arg("e_l"));
    m.def(
        "cnot",
        [](const std::string& control) {
            return demon::gates::cnot(subsystem(control)).eigen();
        },
        py::arg("control"));
    m.def(
        "cev",
        [](double theta, double phi) {
            return demon::gates::cev(theta, phi).eigen();
        },
        py::arg("theta"), py::arg("phi") = 0.0);
    m.def(
        "cnot_from_sequence",
        [](double e_l, const std::string& control, std::array<int, 5> signs) {
            demon::gates::SignAssignment assignment{subsystem(control), signs};
            const auto r = demon::gates::cnot_from_sequence(e_l, assignment);
            return py::make_tuple(r.u.eigen(), sequence_dict(r.seq));
        },
        py::arg("e_l"), py::arg("control") = "S",
        py::arg("signs") = std::array<int, 5>{+1, +1, -1, +1, +1});
    m.def(
        "verify_decomposition",
        [](double e_l, const std::string& target) {
            demon::gates::DecompositionTarget t;
            if (target == "cnot") t = demon::gates::DecompositionTarget::CnotS;
            else if (target == "cnot_d")
                t = demon::gates::DecompositionTarget::CnotD;
            else if (target == "swap")
                t = demon::gates::DecompositionTarget::Swap;
            else
                throw std::invalid_argument(
                    "target must be cnot, cnot_d or swap");
            const auto report = demon::gates::verify_decomposition(e_l, t);
            py::dict d;
            d["control"] = demon::name(report.best_signs.control);
            d["signs"] = report.best_signs.signs;
            d["distance"] = report.distance;
            d["local_correction"] = report.local_correction;
            d["sequence"] = sequence_dict(report.sequence);
            return d;
        },
        py::arg("e_l"), py::arg("target") = "cnot");

    // ---- open-system relaxation ---------------------------------------------
    m.def(
        "mean_occupation",
        [](double temperature, double omega) {
            const auto occ = demon::thermo::mean_occupation(temperature, omega);
            return py::make_tuple(occ.n, occ.m);
        },
        py::arg("temperature"), py::arg("omega"));
    m.def(
        "relax_sigma_z",
        [](double z0, double delta, double temperature, double damping_rate,
           double t) {
            return demon::thermo::relax_sigma_z(
                z0, delta, demon::thermo::BathParams(temperature, damping_rate),
                t);
        },
        py::arg("z0"), py::arg("delta"), py::arg("temperature"),
        py::arg("damping_rate"), py::arg("t"));
    m.def(
        "thermalize",
        [](const EigenMatrix& rho, double s_temperature, double s_damping,
           double d_temperature, double d_damping, double s_gap, double d_gap,
           double t) {
            return demon::thermo::thermalize(
                       wrap(rho),
                       demon::thermo::BathParams(s_temperature, s_damping),
                       demon::thermo::BathParams(d_temperature, d_damping),
                       s_gap, d_gap, t)
                .eigen();
        },
        py::arg("rho"), py::arg("s_temperature"), py::arg("s_damping"),
        py::arg("d_temperature"), py::arg("d_damping"), py::arg("s_gap"),
        py::arg("d_gap"), py::arg("t"));
    m.def(
        "heat_exchanged",
        [](const EigenMatrix& before, const EigenMatrix& after,
           const std::string& which, double gap) {
            return demon::thermo::heat_exchanged(wrap(before), wrap(after),
                                                 subsystem(which), gap);
        },
        py::arg("rho_before"), py::arg("rho_after"), py::arg("which"),
        py::arg("gap"));

    // ---- the cycle ---------------------------------------------------------
    py::class_<demon::engine::CycleLedger>(m, "CycleLedger")
        .def_property_readonly(
            "rho1",
            [](const demon::engine::CycleLedger& l) { return l.rho1.eigen(); })
        .def_property_readonly(
            "rho2",
            [](const demon::engine::CycleLedger& l) { return l.rho2.eigen(); })
        .def_property_readonly(
            "rho3",
            [](const demon::engine::CycleLedger& l) { return l.rho3.eigen(); })
        .def_readonly("e_s", &demon::engine::CycleLedger::e_s)
        .def_readonly("e_d", &demon::engine::CycleLedger::e_d)
        .def_readonly("e_s_mid", &demon::engine::CycleLedger::e_s_mid)
        .def_readonly("e_d_mid", &demon::engine::CycleLedger::e_d_mid)
        .def_readonly("e_s_after", &demon::engine::CycleLedger::e_s_after)
        .def_readonly("e_d_after", &demon::engine::CycleLedger::e_d_after)
        .def_readonly("q_in", &demon::engine::CycleLedger::q_in)
        .def_readonly("q_out", &demon::engine::CycleLedger::q_out)
        .def_readonly("w", &demon::engine::CycleLedger::w)
        .def_readonly("eta", &demon::engine::CycleLedger::eta)
        .def_readonly("entropies", &demon::engine::CycleLedger::entropies);

    const auto config_args =
        [](py::module_& mod, const char* pyname, auto fn) {
            mod.def(
                pyname,
                [fn](double s_gap, double s_temperature, double d_gap,
                     double d_temperature, double theta, double phi,
                     const std::string& feedback) {
                    return fn(make_config(s_gap, s_temperature, d_gap,
                                          d_temperature, theta, phi,
                                          feedback));
                },
                py::arg("s_gap"), py::arg("s_temperature"), py::arg("d_gap"),
                py::arg("d_temperature"),
                py::arg("theta") = 1.5707963267948966, py::arg("phi") = 0.0,
                py::arg("feedback") = "cnot");
        };
    config_args(m, "run_cycle",
                [](const demon::engine::CycleConfig& cfg) {
                    return demon::engine::run_cycle(cfg);
                });
    config_args(m, "work_closed_form",
                [](const demon::engine::CycleConfig& cfg) {
                    return demon::engine::work_closed_form(cfg);
                });
    config_args(m, "qin_closed_form",
                [](const demon::engine::CycleConfig& cfg) {
                    return demon::engine::qin_closed_form(cfg);
                });
    config_args(m, "efficiency_closed_form",
                [](const demon::engine::CycleConfig& cfg) {
                    const auto e = demon::engine::efficiency_closed_form(cfg);
                    return py::make_tuple(e.eta, e.xi);
                });
    config_args(m, "positive_work_condition",
                [](const demon::engine::CycleConfig& cfg) {
                    const auto r = demon::engine::positive_work_condition(cfg);
                    py::dict d;
                    d["w_positive"] = r.w_positive;
                    d["necessary_condition_holds"] =
                        r.necessary_condition_holds;
                    return d;
                });
    config_args(m, "demon_ignored_paradox",
                [](const demon::engine::CycleConfig& cfg) {
                    const auto r = demon::engine::demon_ignored_paradox(cfg);
                    py::dict d;
                    d["reduced_cycle_work"] = r.reduced_cycle_work;
                    d["single_bath"] = r.single_bath;
                    d["full_work"] = r.full_work;
                    return d;
                });

    // ---- device layer --------------------------------------------------------
    m.attr("HBAR") = demon::device::consts::hbar;
    m.attr("K_B") = demon::device::consts::k_b;
    m.def(
        "gap_from_gate",
        [](double charging_energy, double gate_charge, double temperature) {
            return demon::device::gap_from_gate(demon::device::ChargeQubitParams(
                charging_energy, gate_charge, temperature));
        },
        py::arg("charging_energy"), py::arg("gate_charge"),
        py::arg("temperature") = 1e-2);
    m.def(
        "coupling_from_flux",
        [](double josephson_energy, double flux_ratio) {
            return demon::device::coupling_from_flux(
                demon::device::CouplerParams(josephson_energy, flux_ratio));
        },
        py::arg("josephson_energy"), py::arg("flux_ratio"));
    m.def("device_efficiency", &demon::device::device_efficiency,
          py::arg("n_g_s"), py::arg("n_g_d"));
    m.def("iswap_duration", &demon::device::iswap_duration, py::arg("e_0"));
    m.def(
        "device_cycle",
        [](double e_c_s, double n_g_s, double t_s_kelvin, double e_c_d,
           double n_g_d, double t_d_kelvin, double cycle_time) {
            demon::device::DeviceParams dev;
            dev.s = demon::device::ChargeQubitParams(e_c_s, n_g_s, t_s_kelvin);
            dev.d = demon::device::ChargeQubitParams(e_c_d, n_g_d, t_d_kelvin);
            dev.cycle_time = cycle_time;
            const auto cfg = demon::device::engine_config(dev);
            const auto power =
                demon::device::power_estimate(cfg, dev.cycle_time);
            const auto ledger = demon::engine::run_cycle(cfg);
            py::dict d;
            d["work_joule"] = power.work;
            d["power_watt"] = power.power;
            d["eta"] = ledger.eta;
            d["delta_s_joule"] = demon::device::gap_from_gate(dev.s);
            d["delta_d_joule"] = demon::device::gap_from_gate(dev.d);
            return d;
        },
        py::arg("e_c_s") = 1e-23, py::arg("n_g_s") = 0.492,
        py::arg("t_s_kelvin") = 1e-2, py::arg("e_c_d") = 1e-23,
        py::arg("n_g_d") = 0.497, py::arg("t_d_kelvin") = 1e-3,
        py::arg("cycle_time") = 1e-5);
}
