#pragma once

#include <array>
#include <optional>

#include "demon/gates.hpp"
#include "demon/qmat.hpp"
#include "demon/states.hpp"
#include "demon/thermo.hpp"

namespace demon::engine {

enum class FeedbackKind { cev, cnot };

/// Finite-time thermalization stage: the cycle is closed self-consistently,
/// i.e. rho1 is the fixed point of
///   rho -> thermalize(U3 U2 rho U2^dag U3^dag, t),
/// the periodic steady state of sustained operation. The default (no
/// finite-time mode) is ideal thermalization, where rho1 is the exact
/// Gibbs product.
struct FiniteTimeMode {
    thermo::BathParams s_bath;
    thermo::BathParams d_bath;
    double time;
};

struct CycleConfig {
    CycleConfig(states::QubitParams s_, states::QubitParams d_)
        : s(s_), d(d_) {}

    states::QubitParams s;
    states::QubitParams d;
    double theta = 1.5707963267948966; // pi/2
    double phi = 0.0;
    FeedbackKind feedback = FeedbackKind::cnot;
    std::optional<FiniteTimeMode> finite_time;

    /// Angle actually used by the closed-form expressions: pi/2 for CNOT
    /// feedback, theta otherwise.
    double effective_theta() const;
};

/// Per-cycle bookkeeping. Stage states: rho1 after thermalization (S1),
/// rho2 after the pre-measurement CNOT (S2), rho3 after the feedback
/// CEV (S3). Energies are in natural units. W = Q_in - Q_out holds
/// identically; eta is empty whenever Q_in <= 0 (a physical regime,
/// not an error).
struct CycleLedger {
    qmat::ComplexMatrix rho1{4};
    qmat::ComplexMatrix rho2{4};
    qmat::ComplexMatrix rho3{4};
    double e_s = 0.0;       // E_S at rho1
    double e_d = 0.0;       // E_D at rho1
    double e_s_mid = 0.0;   // E_S at rho2 (diagnostic)
    double e_d_mid = 0.0;   // E_D at rho2 (diagnostic)
    double e_s_after = 0.0; // E_S'' at rho3
    double e_d_after = 0.0; // E_D'' at rho3
    double q_in = 0.0;
    double q_out = 0.0;
    double w = 0.0;
    std::optional<double> eta;
    std::array<double, 3> entropies = {0.0, 0.0, 0.0}; // S(rho1..rho3), nats
};

/// Brute-force cycle: evolve the full 4x4 density matrix through
/// S1 -> S2 -> S3 and account energies from the stage states.
CycleLedger run_cycle(const CycleConfig& cfg);

/// W = Delta_S sin^2(theta) (p10 - p01) + Delta_D (p11 - p10), from the
/// joint thermal populations only (never touches the matrix path).
double work_closed_form(const CycleConfig& cfg);

/// Q_in = Delta_S sin^2(theta) (p10 - p01).
double qin_closed_form(const CycleConfig& cfg);

struct Efficiency {
    double eta;
    double xi;
};

/// Degenerate operating point: p01 = p10, so Q_in = 0 and eta is undefined.
class DegenerateConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// eta = 1 - (Delta_D / Delta_S) xi with
/// xi = csc^2(theta) (p11/p10 - 1) / (p01/p10 - 1).
Efficiency efficiency_closed_form(const CycleConfig& cfg);

struct PositiveWorkReport {
    bool w_positive;
    bool necessary_condition_holds; // T_S >= T_D * Delta_S / Delta_D
};

/// The temperature condition is necessary but not sufficient for W > 0:
/// the demon term Delta_D (p11 - p10) is never positive.
PositiveWorkReport positive_work_condition(const CycleConfig& cfg);

struct ParadoxReport {
    /// Heat the S bath feeds back after the strokes, which a demon-blind
    /// observer would book as work extracted from a single bath.
    double reduced_cycle_work;
    bool single_bath; // T_S == T_D
    double full_work; // ledger W including the demon's erasure cost
};

/// Diagnostic for the apparent second-law violation when the demon is
/// traced out of the bookkeeping.
ParadoxReport demon_ignored_paradox(const CycleConfig& cfg);

} // namespace demon::engine
