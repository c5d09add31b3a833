#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "demon/qmat.hpp"

namespace demon::gates {

enum class Axis { X, Z };

enum class StepKind { rot_x, rot_z, native_evolve, barrier };

enum class StepTarget { S, D, Both };

/// One element of a control sequence. `value` is a rotation angle in
/// radians for rot_* steps and a duration for native_evolve steps.
struct GateStep {
    StepKind kind;
    StepTarget target;
    double value;
};

/// Sign/orientation assignment for the five-rotation CNOT sequence.
///
/// `control` names the control qubit of the CNOT being synthesized. The
/// partner qubit carries the opening X,Z rotation pair and the closing Z
/// rotation; the control qubit carries the opening Z and the mid-sequence
/// X rotation between the two native-evolution windows. `signs` multiply
/// pi/2 for the five rotations in time order.
struct SignAssignment {
    Subsystem control = Subsystem::S;
    std::array<int, 5> signs = {+1, +1, -1, +1, +1};

    friend bool operator==(const SignAssignment&,
                           const SignAssignment&) = default;
};

struct GateSequence {
    std::vector<GateStep> steps;
    SignAssignment assignment;
    double coupling = 0.0; // interaction strength the durations were fit to
};

/// Two-qubit Hamiltonian: gap terms delta_F |1><1| per qubit plus the
/// XX - YY exchange, which couples only |0,0> <-> |1,1> with element 2 e_l.
qmat::ComplexMatrix hamiltonian(double delta_s, double delta_d, double e_l);

/// exp(-i (theta/2) sigma_axis) on the target qubit, identity on the other.
qmat::ComplexMatrix rot(Axis axis, double theta, Subsystem target);

struct IswapPrimitive {
    qmat::ComplexMatrix u;
    double t0;
};

/// Native two-qubit gate: evolve under hamiltonian(0, 0, e_l) for
/// t0 = pi / (4 e_l). Acts as identity on |0,1>, |1,0> and maps
/// |0,0> -> -i|1,1>, |1,1> -> -i|0,0> (locally equivalent to i-SWAP).
IswapPrimitive iswap_primitive(double e_l);

/// Canonical CNOT in the joint basis; `control` selects the orientation.
qmat::ComplexMatrix cnot(Subsystem control);

/// Conditional evolution of step S3: identity when the demon is in |0>;
/// when the demon is in |1>, applies U_c on S with
///   U_c|1> =  cos(theta)|1> + sin(theta) e^{i phi}|0>,
///   U_c|0> = -sin(theta)|1> + cos(theta) e^{i phi}|0>.
qmat::ComplexMatrix cev(double theta, double phi);

struct ComposedSequence {
    qmat::ComplexMatrix u;
    GateSequence seq;
};

/// Compose the five-rotation / two-native-window sequence under the given
/// assignment and return both the unitary and the step record.
ComposedSequence cnot_from_sequence(double e_l,
                                    const SignAssignment& assignment = {});

enum class DecompositionTarget { CnotS, CnotD, Swap };

struct DecompositionReport {
    SignAssignment best_signs;
    double distance;
    std::string local_correction; // "none", "x_pi_on_s" or "x_pi_on_d"
    GateSequence sequence;
};

/// No sequence in the search space came within tolerance of the target.
class DecompositionError : public std::runtime_error {
public:
    DecompositionError(const std::string& what, double best)
        : std::runtime_error(what), best_distance(best) {}
    double best_distance;
};

/// Exhaustively search both CNOT orientations of the five-rotation
/// sequence over all 2^5 sign choices, plus an optional single trailing
/// local pi-rotation about X on one qubit, and certify the assignment
/// closest to the target (ties broken lexicographically). Throws
/// DecompositionError if the minimum is not below 1e-10.
DecompositionReport verify_decomposition(
    double e_l, DecompositionTarget target = DecompositionTarget::CnotS);

} // namespace demon::gates
