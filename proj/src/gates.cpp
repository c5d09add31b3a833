#include "demon/gates.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace demon::gates {

using qmat::Complex;
using qmat::ComplexMatrix;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCertifyTol = 1e-10;

ComplexMatrix on_qubit(const ComplexMatrix& u2, Subsystem target) {
    const auto eye = ComplexMatrix::identity(2);
    return target == Subsystem::S ? qmat::kron(u2, eye) : qmat::kron(eye, u2);
}

StepTarget step_target(Subsystem q) {
    return q == Subsystem::S ? StepTarget::S : StepTarget::D;
}

ComplexMatrix target_matrix(DecompositionTarget t) {
    switch (t) {
        case DecompositionTarget::CnotS: return cnot(Subsystem::S);
        case DecompositionTarget::CnotD: return cnot(Subsystem::D);
        case DecompositionTarget::Swap:
            return ComplexMatrix::from_rows({{1, 0, 0, 0},
                                             {0, 0, 1, 0},
                                             {0, 1, 0, 0},
                                             {0, 0, 0, 1}});
    }
    throw std::invalid_argument("unknown decomposition target");
}

} // namespace

ComplexMatrix hamiltonian(double delta_s, double delta_d, double e_l) {
    if (!std::isfinite(delta_s) || !std::isfinite(delta_d) ||
        !std::isfinite(e_l))
        throw std::invalid_argument("hamiltonian parameters must be finite");
    qmat::EigenMatrix h = qmat::EigenMatrix::Zero(4, 4);
    // Per-qubit excitation energies: delta_F |1><1|, joint index 2 q_S + q_D.
    h(1, 1) = delta_d;
    h(2, 2) = delta_s;
    h(3, 3) = delta_s + delta_d;
    // XX - YY couples only the even-parity block with matrix element 2 e_l.
    h(0, 3) = 2.0 * e_l;
    h(3, 0) = 2.0 * e_l;
    return ComplexMatrix::from_eigen(std::move(h));
}

ComplexMatrix rot(Axis axis, double theta, Subsystem target) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("rotation angle must be finite");
    const auto sigma = axis == Axis::X ? qmat::pauli_x() : qmat::pauli_z();
    const Complex c(std::cos(theta / 2.0), 0.0);
    const Complex s(0.0, -std::sin(theta / 2.0));
    const auto u2 = ComplexMatrix::from_eigen(
        c * qmat::EigenMatrix::Identity(2, 2) + s * sigma.eigen());
    return on_qubit(u2, target);
}

IswapPrimitive iswap_primitive(double e_l) {
    if (!(e_l > 0.0) || !std::isfinite(e_l))
        throw std::invalid_argument("iswap_primitive requires e_l > 0");
    const double t0 = kPi / (4.0 * e_l);
    return {qmat::expm_hermitian(hamiltonian(0.0, 0.0, e_l), t0), t0};
}

ComplexMatrix cnot(Subsystem control) {
    auto u = qmat::EigenMatrix::Identity(4, 4).eval();
    if (control == Subsystem::S) {
        // Flip D when S is excited: |1,0> <-> |1,1>.
        u(2, 2) = u(3, 3) = 0.0;
        u(2, 3) = u(3, 2) = 1.0;
    } else {
        // Flip S when D is excited: |0,1> <-> |1,1>.
        u(1, 1) = u(3, 3) = 0.0;
        u(1, 3) = u(3, 1) = 1.0;
    }
    return ComplexMatrix::from_eigen(std::move(u));
}

ComplexMatrix cev(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("cev angles must be finite");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex eip(std::cos(phi), std::sin(phi));
    auto u = qmat::EigenMatrix::Identity(4, 4).eval();
    // Demon in |1>: apply U_c on S (columns are images of |0,1> and |1,1>).
    u(1, 1) = c * eip;
    u(3, 1) = -s;
    u(1, 3) = s * eip;
    u(3, 3) = c;
    return ComplexMatrix::from_eigen(std::move(u));
}

ComposedSequence cnot_from_sequence(double e_l,
                                    const SignAssignment& assignment) {
    const auto native = iswap_primitive(e_l);
    const Subsystem ctl = assignment.control;
    const Subsystem partner = other(ctl);
    const auto& s = assignment.signs;

    GateSequence seq;
    seq.assignment = assignment;
    seq.coupling = e_l;
    seq.steps = {
        {StepKind::rot_x, step_target(partner), s[0] * kPi / 2.0},
        {StepKind::rot_z, step_target(partner), s[1] * kPi / 2.0},
        {StepKind::rot_z, step_target(ctl), s[2] * kPi / 2.0},
        {StepKind::native_evolve, StepTarget::Both, native.t0},
        {StepKind::rot_x, step_target(ctl), s[3] * kPi / 2.0},
        {StepKind::native_evolve, StepTarget::Both, native.t0},
        {StepKind::rot_z, step_target(partner), s[4] * kPi / 2.0},
    };

    auto u = ComplexMatrix::identity(4);
    for (const auto& step : seq.steps) {
        switch (step.kind) {
            case StepKind::rot_x:
                u = rot(Axis::X, step.value,
                        step.target == StepTarget::S ? Subsystem::S
                                                     : Subsystem::D) *
                    u;
                break;
            case StepKind::rot_z:
                u = rot(Axis::Z, step.value,
                        step.target == StepTarget::S ? Subsystem::S
                                                     : Subsystem::D) *
                    u;
                break;
            case StepKind::native_evolve: u = native.u * u; break;
            case StepKind::barrier: break;
        }
    }
    return {u, seq};
}

DecompositionReport verify_decomposition(double e_l,
                                         DecompositionTarget target) {
    const auto goal = target_matrix(target);
    const std::array<std::pair<std::string, std::optional<Subsystem>>, 3>
        corrections = {{{"none", std::nullopt},
                        {"x_pi_on_s", Subsystem::S},
                        {"x_pi_on_d", Subsystem::D}}};

    std::optional<DecompositionReport> best;
    // Deterministic candidate order: the plain sign space first, the
    // optional correction tiers after it, and within a tier orientation S
    // before D and signs with + before -. Strict improvement keeps the
    // earliest minimum, so assignments needing no correction win ties.
    for (const auto& [label, extra] : corrections) {
        for (Subsystem ctl : {Subsystem::S, Subsystem::D}) {
            for (int mask = 0; mask < 32; ++mask) {
                SignAssignment assignment;
                assignment.control = ctl;
                for (int k = 0; k < 5; ++k)
                    assignment.signs[static_cast<size_t>(k)] =
                        (mask >> (4 - k)) & 1 ? -1 : +1;
                auto [u, seq] = cnot_from_sequence(e_l, assignment);
                if (extra) {
                    u = rot(Axis::X, kPi, *extra) * u;
                    seq.steps.push_back(
                        {StepKind::rot_x, step_target(*extra), kPi});
                }
                const double d = qmat::distance_up_to_global_phase(u, goal);
                if (!best || d < best->distance)
                    best = DecompositionReport{assignment, d, label,
                                               std::move(seq)};
            }
        }
    }
    if (best->distance >= kCertifyTol)
        throw DecompositionError(
            "no sign assignment reaches the target; best distance " +
                std::to_string(best->distance),
            best->distance);
    return *best;
}

} // namespace demon::gates
