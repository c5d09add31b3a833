#include "demon/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace demon::states {

QubitParams::QubitParams(double gap_, double temperature_)
    : gap(gap_), temperature(temperature_) {
    if (!std::isfinite(gap) || gap <= 0.0)
        throw std::invalid_argument("qubit gap must be positive and finite");
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::invalid_argument(
            "qubit temperature must be positive and finite");
}

GibbsPopulations gibbs_populations(const QubitParams& q) {
    if (q.temperature <= kMinTemperature) return {1.0, 0.0};
    double x = q.gap / q.temperature;
    if (!std::isfinite(x))
        throw std::invalid_argument("non-finite Boltzmann exponent");
    x = std::min(x, 700.0); // exp(-700) underflows harmlessly
    const double boltzmann = std::exp(-x);
    const double p1 = boltzmann / (1.0 + boltzmann);
    return {1.0 - p1, p1};
}

JointThermalState joint_thermal_state(const QubitParams& s,
                                      const QubitParams& d) {
    const auto ps = gibbs_populations(s);
    const auto pd = gibbs_populations(d);
    const std::array<double, 4> p = {ps.p0 * pd.p0, ps.p0 * pd.p1,
                                     ps.p1 * pd.p0, ps.p1 * pd.p1};
    qmat::EigenMatrix rho = qmat::EigenMatrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) rho(k, k) = p[static_cast<size_t>(k)];
    const double z_s = ps.p0 > 0.0 ? 1.0 / ps.p0 : 1.0;
    const double z_d = pd.p0 > 0.0 ? 1.0 / pd.p0 : 1.0;
    return {qmat::ComplexMatrix::from_eigen(std::move(rho)), p, z_s, z_d};
}

SubsystemEnergies energy(const qmat::ComplexMatrix& rho, double s_gap,
                         double d_gap) {
    const auto rho_s = qmat::partial_trace(rho, Subsystem::S);
    const auto rho_d = qmat::partial_trace(rho, Subsystem::D);
    return {s_gap * rho_s(1, 1).real(), d_gap * rho_d(1, 1).real()};
}

} // namespace demon::states
