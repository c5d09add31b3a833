#pragma once

#include "demon/qmat.hpp"
#include "demon/states.hpp"

namespace demon::thermo {

struct BathParams {
    double temperature;  // > 0
    double damping_rate; // gamma > 0, inverse time

    BathParams(double temperature, double damping_rate);
};

struct Occupation {
    double n; // Bose-Einstein occupation at the qubit frequency
    double m; // M = 1 + 2n
};

/// n(T, omega) = 1 / (exp(omega/T) - 1), with M = 1 + 2n alongside.
Occupation mean_occupation(double temperature, double omega);

/// Population difference z = p_excited - p_ground under exponential
/// relaxation: z(t) = (z0 + 1/M) e^{-2 gamma t} - 1/M, so z(0) = z0 and
/// z(inf) = -1/M.
double relax_sigma_z(double z0, double delta, const BathParams& bath,
                     double t);

/// Relax a joint state toward the Gibbs product while the qubits are
/// decoupled: the product of the two single-qubit thermal relaxation
/// channels. Each qubit's populations follow relax_sigma_z, inter-qubit
/// coherences are damped by e^{-(gamma_S + gamma_D) t}, and the map is
/// completely positive, so any input (entangled included) stays a valid
/// state and reaches the same Gibbs product. t may be +infinity, which
/// returns that product exactly.
qmat::ComplexMatrix thermalize(const qmat::ComplexMatrix& rho,
                               const BathParams& s_bath,
                               const BathParams& d_bath, double s_gap,
                               double d_gap, double t);

/// Signed heat exchanged by one subsystem between two states. For S the
/// sign convention is E(after) - E(before) (heat absorbed while relaxing
/// upward); for D it is E(before) - E(after) (heat released).
double heat_exchanged(const qmat::ComplexMatrix& rho_before,
                      const qmat::ComplexMatrix& rho_after, Subsystem which,
                      double gap);

} // namespace demon::thermo
