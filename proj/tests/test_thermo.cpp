#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "demon/gates.hpp"
#include "demon/thermo.hpp"
#include "test_support.hpp"

using namespace demon;
using qmat::ComplexMatrix;
using states::QubitParams;
using test_support::Rng;
using thermo::BathParams;

namespace {

ComplexMatrix excited_projector() {
    qmat::EigenMatrix m = qmat::EigenMatrix::Zero(4, 4);
    m(3, 3) = 1.0;
    return ComplexMatrix::from_eigen(std::move(m));
}

ComplexMatrix bell_projector() {
    qmat::EigenMatrix m = qmat::EigenMatrix::Zero(4, 4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
    return ComplexMatrix::from_eigen(std::move(m));
}

} // namespace

TEST_CASE("mean_occupation values") {
    const auto cold = thermo::mean_occupation(1e-9, 1.0);
    CHECK(cold.n == 0.0);
    CHECK(cold.m == 1.0);

    // beta omega = ln 2: n = 1/(2 - 1) = 1, M = 3.
    const auto ln2 = thermo::mean_occupation(1.0 / std::log(2.0), 1.0);
    CHECK(std::abs(ln2.n - 1.0) <= 1e-12);
    CHECK(std::abs(ln2.m - 3.0) <= 1e-12);

    CHECK_THROWS_AS(thermo::mean_occupation(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(thermo::mean_occupation(1.0, -1.0),
                    std::invalid_argument);
}

TEST_CASE("mean_occupation is consistent with the Gibbs populations") {
    Rng rng(53);
    for (int rep = 0; rep < 40; ++rep) {
        const double gap = rng.uniform(0.05, 4.0);
        const double t = rng.uniform(0.05, 5.0);
        const auto occ = thermo::mean_occupation(t, gap);
        const auto p = states::gibbs_populations(QubitParams(gap, t));
        CHECK(std::abs((1.0 - 1.0 / occ.m) / 2.0 - p.p1) <= 1e-12);
    }
}

TEST_CASE("relax_sigma_z boundary, fixed point and limit") {
    const BathParams bath(0.8, 1.3);
    const double delta = 1.1;
    const double m = thermo::mean_occupation(bath.temperature, delta).m;

    CHECK(thermo::relax_sigma_z(0.37, delta, bath, 0.0) == 0.37);

    const double z_inf = thermo::relax_sigma_z(
        1.0, delta, bath, std::numeric_limits<double>::infinity());
    CHECK(std::abs(z_inf + 1.0 / m) <= 1e-15);
    CHECK(std::abs(thermo::relax_sigma_z(-0.4, delta, bath, 1e6) + 1.0 / m) <=
          1e-15);

    for (double t : {0.0, 0.3, 2.0, 15.0})
        CHECK(std::abs(thermo::relax_sigma_z(-1.0 / m, delta, bath, t) +
                       1.0 / m) <= 1e-15);
}

TEST_CASE("relax_sigma_z approaches the fixed point monotonically") {
    Rng rng(59);
    for (int rep = 0; rep < 25; ++rep) {
        const BathParams bath(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
        const double delta = rng.uniform(0.1, 3.0);
        const double z0 = rng.uniform(-1.0, 1.0);
        const double m = thermo::mean_occupation(bath.temperature, delta).m;
        double prev_gap = std::abs(z0 + 1.0 / m);
        for (double t : {0.1, 0.4, 1.0, 2.5, 6.0}) {
            const double gap =
                std::abs(thermo::relax_sigma_z(z0, delta, bath, t) + 1.0 / m);
            CHECK(gap <= prev_gap + 1e-15);
            prev_gap = gap;
        }
    }
}

TEST_CASE("thermalize holds at t = 0 and reaches the Gibbs product") {
    Rng rng(61);
    const BathParams s_bath(2.0, 1.0);
    const BathParams d_bath(0.5, 0.7);
    const double s_gap = 2.0, d_gap = 1.0;
    const auto gibbs =
        states::joint_thermal_state(QubitParams(s_gap, s_bath.temperature),
                                    QubitParams(d_gap, d_bath.temperature))
            .rho;

    const auto rho0 = test_support::random_density(rng, 4);
    CHECK(qmat::max_abs_diff(
              thermo::thermalize(rho0, s_bath, d_bath, s_gap, d_gap, 0.0),
              rho0) == 0.0);

    const double t_end = 50.0 / 0.7;
    const auto from_excited = thermo::thermalize(excited_projector(), s_bath,
                                                 d_bath, s_gap, d_gap, t_end);
    CHECK(qmat::trace_distance(from_excited, gibbs) < 1e-6);

    const auto from_bell = thermo::thermalize(bell_projector(), s_bath,
                                              d_bath, s_gap, d_gap, t_end);
    CHECK(qmat::trace_distance(from_bell, gibbs) < 1e-6);
    CHECK(qmat::trace_distance(from_bell, from_excited) < 1e-6);

    const auto exact = thermo::thermalize(
        bell_projector(), s_bath, d_bath, s_gap, d_gap,
        std::numeric_limits<double>::infinity());
    CHECK(qmat::max_abs_diff(exact, gibbs) == 0.0);
}

TEST_CASE("thermalize preserves state validity") {
    Rng rng(67);
    for (int rep = 0; rep < 40; ++rep) {
        const BathParams s_bath(rng.uniform(0.1, 3.0), rng.uniform(0.1, 2.0));
        const BathParams d_bath(rng.uniform(0.1, 3.0), rng.uniform(0.1, 2.0));
        const auto rho0 = rep % 3 ? test_support::random_density(rng, 4)
                                  : test_support::random_pure(rng, 4);
        const auto out =
            thermo::thermalize(rho0, s_bath, d_bath, rng.uniform(0.1, 3.0),
                               rng.uniform(0.1, 3.0), rng.uniform(0.0, 4.0));
        CHECK(out.is_hermitian(1e-12));
        CHECK(out.is_psd(1e-10));
        CHECK(std::abs(out.trace() - qmat::Complex(1.0)) <= 1e-12);
    }
}

TEST_CASE("thermalize endpoint forgets the initial state") {
    Rng rng(71);
    const BathParams s_bath(1.4, 1.0);
    const BathParams d_bath(0.6, 1.0);
    std::vector<ComplexMatrix> endpoints;
    for (int rep = 0; rep < 20; ++rep) {
        const auto rho0 = rep % 2 ? test_support::random_density(rng, 4)
                                  : test_support::random_pure(rng, 4);
        endpoints.push_back(
            thermo::thermalize(rho0, s_bath, d_bath, 1.7, 0.9, 50.0));
    }
    for (size_t i = 0; i < endpoints.size(); ++i)
        for (size_t j = i + 1; j < endpoints.size(); ++j)
            CHECK(qmat::trace_distance(endpoints[i], endpoints[j]) < 1e-6);
}

TEST_CASE("thermalize marginals follow relax_sigma_z at every time") {
    Rng rng(79);
    auto sigma_z = [](const ComplexMatrix& rho, Subsystem q) {
        const auto reduced = qmat::partial_trace(rho, q);
        return reduced(1, 1).real() - reduced(0, 0).real();
    };
    for (int rep = 0; rep < 20; ++rep) {
        const BathParams s_bath(rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
        const BathParams d_bath(rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
        const double s_gap = rng.uniform(0.2, 3.0);
        const double d_gap = rng.uniform(0.2, 3.0);
        const auto rho0 = rep % 2 ? test_support::random_density(rng, 4)
                                  : test_support::random_pure(rng, 4);
        const double zs0 = sigma_z(rho0, Subsystem::S);
        const double zd0 = sigma_z(rho0, Subsystem::D);
        for (double t : {0.2, 0.7, 1.9}) {
            const auto rho =
                thermo::thermalize(rho0, s_bath, d_bath, s_gap, d_gap, t);
            CHECK(std::abs(sigma_z(rho, Subsystem::S) -
                           thermo::relax_sigma_z(zs0, s_gap, s_bath, t)) <=
                  1e-12);
            CHECK(std::abs(sigma_z(rho, Subsystem::D) -
                           thermo::relax_sigma_z(zd0, d_gap, d_bath, t)) <=
                  1e-12);
        }
    }
}

TEST_CASE("thermalize composes as a semigroup") {
    Rng rng(73);
    for (int rep = 0; rep < 25; ++rep) {
        const BathParams s_bath(rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
        const BathParams d_bath(rng.uniform(0.2, 2.0), rng.uniform(0.2, 2.0));
        const double s_gap = rng.uniform(0.2, 3.0);
        const double d_gap = rng.uniform(0.2, 3.0);
        const double t1 = rng.uniform(0.0, 2.0);
        const double t2 = rng.uniform(0.0, 2.0);
        const auto rho0 = test_support::random_density(rng, 4);
        const auto two_steps = thermo::thermalize(
            thermo::thermalize(rho0, s_bath, d_bath, s_gap, d_gap, t1),
            s_bath, d_bath, s_gap, d_gap, t2);
        const auto one_step =
            thermo::thermalize(rho0, s_bath, d_bath, s_gap, d_gap, t1 + t2);
        CHECK(qmat::max_abs_diff(two_steps, one_step) <= 1e-10);
    }
}

TEST_CASE("heat_exchanged across the feedback stroke") {
    const auto joint = states::joint_thermal_state(QubitParams(2.0, 2.0),
                                                   QubitParams(1.0, 0.5));
    const auto rho1 = joint.rho;
    CHECK(thermo::heat_exchanged(rho1, rho1, Subsystem::S, 2.0) == 0.0);
    CHECK(thermo::heat_exchanged(rho1, rho1, Subsystem::D, 1.0) == 0.0);

    // rho3 at theta = pi/2: CNOT(S) then CNOT(D).
    const auto u2 = gates::cnot(Subsystem::S);
    const auto u3 = gates::cnot(Subsystem::D);
    const auto rho2 = u2 * rho1 * u2.adjoint();
    const auto rho3 = u3 * rho2 * u3.adjoint();

    // Relaxation rho3 -> rho1: S absorbs Q_in, D releases Q_out.
    CHECK(std::abs(thermo::heat_exchanged(rho3, rho1, Subsystem::S, 2.0) -
                   0.299476998695755) <= 1e-12);
    CHECK(std::abs(thermo::heat_exchanged(rho3, rho1, Subsystem::D, 1.0) -
                   0.204824214809825) <= 1e-12);
}
