#pragma once

#include <array>

#include "demon/qmat.hpp"

namespace demon::states {

/// Natural units throughout the core: hbar = k_B = 1, so energies and
/// temperatures share one unit. SI conversion lives in the device module.
///
/// Energy convention: each qubit Hamiltonian is gap * |1><1| (ground state
/// energy zero), so the Boltzmann factor for the excited level is
/// exp(-gap / temperature).
struct QubitParams {
    double gap;         // level spacing, > 0
    double temperature; // bath temperature, > 0

    QubitParams(double gap, double temperature);
};

/// Temperatures at or below this are treated as exactly zero (excited
/// population 0) to avoid overflow in exp(gap / temperature).
inline constexpr double kMinTemperature = 1e-9;

struct GibbsPopulations {
    double p0; // ground
    double p1; // excited
};

/// Two-level Gibbs populations: p1 = exp(-gap/T) / (1 + exp(-gap/T)).
GibbsPopulations gibbs_populations(const QubitParams& q);

/// Product of the two single-qubit Gibbs states, diagonal in the joint
/// basis |0,0>, |0,1>, |1,0>, |1,1>.
struct JointThermalState {
    qmat::ComplexMatrix rho;
    std::array<double, 4> p; // joint probabilities p[2*q_S + q_D]
    double z_s;              // partition function of S
    double z_d;              // partition function of D
};

JointThermalState joint_thermal_state(const QubitParams& s,
                                      const QubitParams& d);

struct SubsystemEnergies {
    double s;
    double d;
};

/// E_F = gap_F * (excited population of the reduced state of F),
/// evaluated via the partial trace.
SubsystemEnergies energy(const qmat::ComplexMatrix& rho, double s_gap,
                         double d_gap);

} // namespace demon::states
