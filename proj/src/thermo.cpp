#include "demon/thermo.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace demon::thermo {

using qmat::Complex;
using qmat::ComplexMatrix;

BathParams::BathParams(double temperature_, double damping_rate_)
    : temperature(temperature_), damping_rate(damping_rate_) {
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::invalid_argument(
            "bath temperature must be positive and finite");
    if (!std::isfinite(damping_rate) || damping_rate <= 0.0)
        throw std::invalid_argument(
            "bath damping rate must be positive and finite");
}

Occupation mean_occupation(double temperature, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("mean_occupation requires omega > 0");
    if (!(temperature > 0.0))
        throw std::invalid_argument("mean_occupation requires T > 0");
    double x = omega / temperature;
    if (x > 700.0) return {0.0, 1.0};
    const double n = 1.0 / std::expm1(x);
    return {n, 1.0 + 2.0 * n};
}

double relax_sigma_z(double z0, double delta, const BathParams& bath,
                     double t) {
    if (std::abs(z0) > 1.0 + 1e-12)
        throw std::invalid_argument("relax_sigma_z requires |z0| <= 1");
    if (t < 0.0) throw std::invalid_argument("relax_sigma_z requires t >= 0");
    const double m = mean_occupation(bath.temperature, delta).m;
    const double z_inf = -1.0 / m;
    if (std::isinf(t)) return z_inf;
    return (z0 - z_inf) * std::exp(-2.0 * bath.damping_rate * t) + z_inf;
}

namespace {

// Kraus operators of one qubit's thermal relaxation over time t: population
// decay factor eta = e^{-2 gamma t} toward excited occupation q, coherence
// factor sqrt(eta) = e^{-gamma t}. Completely positive by construction.
std::array<Eigen::Matrix2cd, 4> relaxation_kraus(double q, double gamma,
                                                 double t) {
    const double eta = std::exp(-2.0 * gamma * t);
    const double se = std::sqrt(eta);
    const double sj = std::sqrt(1.0 - eta);
    std::array<Eigen::Matrix2cd, 4> k;
    k[0] << 1.0, 0.0, 0.0, se;
    k[0] *= std::sqrt(1.0 - q);
    k[1] << 0.0, sj, 0.0, 0.0;
    k[1] *= std::sqrt(1.0 - q);
    k[2] << se, 0.0, 0.0, 1.0;
    k[2] *= std::sqrt(q);
    k[3] << 0.0, 0.0, sj, 0.0;
    k[3] *= std::sqrt(q);
    return k;
}

} // namespace

ComplexMatrix thermalize(const ComplexMatrix& rho, const BathParams& s_bath,
                         const BathParams& d_bath, double s_gap, double d_gap,
                         double t) {
    if (rho.dim() != 4)
        throw std::invalid_argument("thermalize expects a 4x4 state");
    if (!rho.is_hermitian(qmat::kStructuralTol) ||
        std::abs(rho.trace() - Complex(1.0)) > qmat::kStructuralTol)
        throw std::invalid_argument("thermalize expects a valid state");
    if (t < 0.0) throw std::invalid_argument("thermalize requires t >= 0");

    const states::QubitParams s_params(s_gap, s_bath.temperature);
    const states::QubitParams d_params(d_gap, d_bath.temperature);
    if (std::isinf(t)) return joint_thermal_state(s_params, d_params).rho;
    if (t == 0.0) return rho;

    // Product of the two single-qubit relaxation channels. Each qubit's
    // populations follow relax_sigma_z; inter-qubit coherences pick up both
    // coherence factors, i.e. decay as e^{-(gamma_S + gamma_D) t}.
    const auto ks = relaxation_kraus(states::gibbs_populations(s_params).p1,
                                     s_bath.damping_rate, t);
    const auto kd = relaxation_kraus(states::gibbs_populations(d_params).p1,
                                     d_bath.damping_rate, t);
    qmat::EigenMatrix out = qmat::EigenMatrix::Zero(4, 4);
    qmat::EigenMatrix op(4, 4);
    for (const auto& a : ks)
        for (const auto& b : kd) {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    op.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
            out += op * rho.eigen() * op.adjoint();
        }
    return ComplexMatrix::from_eigen(std::move(out));
}

double heat_exchanged(const ComplexMatrix& rho_before,
                      const ComplexMatrix& rho_after, Subsystem which,
                      double gap) {
    const double e_before =
        gap * qmat::partial_trace(rho_before, which)(1, 1).real();
    const double e_after =
        gap * qmat::partial_trace(rho_after, which)(1, 1).real();
    return which == Subsystem::S ? e_after - e_before : e_before - e_after;
}

} // namespace demon::thermo
