#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <qwork/error.hpp>
#include <qwork/models.hpp>
#include <qwork/work_stats.hpp>

#include "support.hpp"

using namespace qwork;
using namespace qtest;

namespace {

// Momentum-basis matrix F† A F, columns of F being DFT momentum kets.
Matrix in_momentum_basis(const Operator& a, const GridSpec& grid) {
    Matrix f(grid.size(), grid.size());
    for (std::size_t j = 0; j < grid.n_points(); ++j) f.col(static_cast<Eigen::Index>(j)) = momentum_basis_ket(grid, j);
    return f.adjoint() * a.matrix() * f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gravity

TEST_CASE("gravity work operator fixtures") {
    const GravityModel model(1.0, 1.0);
    const GridSpec grid(64, -4.0 * std::numbers::pi, 4.0 * std::numbers::pi);  // Δp = 1/4
    CHECK(gravity_work_operator(model, {0.7, 0.7}, grid).max_abs() < 1e-14);

    const Operator w = gravity_work_operator(model, {0.0, 1.0}, grid);
    CHECK(w.is_hermitian());
    const Ket k = momentum_basis_ket(grid, 8);
    REQUIRE(grid.momenta()(8) == doctest::Approx(2.0));
    CHECK((w.apply(k) - Complex(-1.5) * k).cwiseAbs().maxCoeff() < 1e-12);

    const WaveFunction1D surrogate = momentum_surrogate(2.0, 0.02, GridSpec(1 << 12, -400.0, 400.0));
    const double mean = surrogate.momentum_expectation([&](double p) { return gravity_work_eigenvalue(model, {0.0, 1.0}, p); });
    CHECK(mean == doctest::Approx(-1.5).epsilon(1e-9));
}

TEST_CASE("gravity work operator equals the kinetic-energy difference") {
    const GravityModel model(1.0, 1.0);
    const GridSpec grid(64, -4.0 * std::numbers::pi, 4.0 * std::numbers::pi);  // Δp = 1/4, cutoff 8
    const TwoTimeWindow window(0.5, 1.5);                                      // shifts mgt = 2Δp, 6Δp
    const Operator kinetic = momentum_function_operator(grid, [](double p) { return Complex(p * p / 2.0); });
    const Operator diff = two_time_difference(kinetic, gravity_propagator_factorized(window.t1(), 1.0, 1.0, grid),
                                              gravity_propagator_factorized(window.t2(), 1.0, 1.0, grid));
    const Matrix lhs = in_momentum_basis(diff, grid);
    const Matrix rhs = in_momentum_basis(gravity_work_operator(model, window, grid), grid);
    const RealVector p = grid.momenta();
    double worst = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            // Away from the zone edge the momentum kick does not wrap around.
            if (std::abs(p(i)) > 5.0 || std::abs(p(j)) > 5.0) continue;
            worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
        }
    }
    CHECK(worst < tol::reconstruction * 32.0);
}

TEST_CASE("gravity work eigenvalue") {
    const GravityModel model(1.3, 0.8);
    const TwoTimeWindow w(0.4, 1.9);
    CHECK(std::abs(gravity_work_eigenvalue(model, w, gravity_zero_work_momentum(model, w))) < 1e-14);

    const double p = 0.9;
    const double t2 = 2.2;
    const double dx = p * t2 / model.m - 0.5 * model.g * t2 * t2;
    CHECK(gravity_work_eigenvalue(model, {0.0, t2}, p) == doctest::Approx(model.force() * dx).epsilon(1e-14));

    CHECK(gravity_work_eigenvalue(GravityModel(1.0, 1.0), {1.0, 2.0}, 0.0) == doctest::Approx(1.5));
    CHECK(gravity_work_spectrum(model, w, GridSpec(8, 0.0, 8.0)).size() == 8);
}

TEST_CASE("gravity power") {
    const GravityModel model(1.0, 1.0);
    CHECK(gravity_power_expectation(model, 2.5, 2.5) == 0.0);
    CHECK(gravity_power_expectation(model, 0.0, 1.0) == 1.0);
    const GravityModel other(1.7, 0.6);
    for (double t : {0.0, 0.5, 3.0}) {
        const double tau = 1e-6;
        const double fd = gravity_work_eigenvalue(other, {t, t + tau}, 0.8) / tau;
        CHECK(std::abs(fd - gravity_power_expectation(other, 0.8, t)) < 1e-4);
    }
}

TEST_CASE("gravity energy-work theorem on the grid") {
    const GravityModel model(1.0, 1.0);
    const GridSpec grid(1 << 11, -40.0, 40.0);
    for (const GaussianPacket packet : {GaussianPacket{0.0, 1.0, 1.0}, GaussianPacket{3.0, -2.0, 0.8}}) {
        const TwoTimeWindow window(0.5, 2.0);
        const EnergyBalance b = grid_energy_balance(gaussian_wavefunction(packet, grid),
                                                    [](double x) { return x; }, 1.0, window, 200);
        const double w = gravity_work_eigenvalue(model, window, packet.p0);
        CHECK(rel_diff(b.delta_kinetic(), w) < 1e-6);
        CHECK(std::abs(b.delta_total()) < 1e-8);
    }
}

TEST_CASE("gravity work operator commutators on interior states") {
    const GravityModel model(1.0, 1.5);
    const TwoTimeWindow window(0.2, 1.0);
    const GridSpec grid(256, -20.0, 20.0);
    const Operator w = gravity_work_operator(model, window, grid);
    const Operator x = position_operator(grid);
    const Operator p = momentum_operator(grid);
    const Ket psi = gaussian_wavefunction({0.5, 0.3, 1.2}, grid).ket();
    const Ket wp = commutator(w, p).apply(psi);
    CHECK(wp.cwiseAbs().maxCoeff() < 1e-10);
    const Ket wx = commutator(w, x).apply(psi);
    const Complex expect(0.0, model.g * window.duration());
    CHECK((wx - expect * psi).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("potential commutator measures i hbar m g^2 dt") {
    const GridSpec grid(1 << 10, -30.0, 30.0);
    const WaveFunction1D psi = gaussian_wavefunction({0.0, 0.5, 1.0}, grid);
    for (const auto& [m, g, dt] : {std::tuple{1.0, 1.0, 1.0}, {2.0, 1.5, 0.8}, {0.5, 3.0, 0.25}}) {
        const Complex c = gravity_potential_commutator(GravityModel(m, g), {0.3, 0.3 + dt}, psi);
        CHECK(std::abs(c.real()) < 1e-10);
        CHECK(c.imag() == doctest::Approx(m * g * g * dt).epsilon(1e-10));
    }
}

// ---------------------------------------------------------------------------
// Elastic

TEST_CASE("elastic coefficients") {
    const ElasticModel model(1.0, 2.0, 3.0);
    const double big_m = model.total_mass();
    CHECK(model.reduced_mass() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(model.omega() == doctest::Approx(std::sqrt(4.5)).epsilon(1e-14));

    const auto c0 = elastic_p1_coefficients(model, 0.0);
    CHECK(c0.a == 1.0);
    CHECK(c0.b == 0.0);
    CHECK(c0.c == 0.0);

    const auto cpi = elastic_p1_coefficients(model, model.half_period());
    CHECK(cpi.a == doctest::Approx((model.m1 - model.m2) / big_m).epsilon(1e-14));
    CHECK(cpi.b == doctest::Approx(2.0 * model.m1 / big_m).epsilon(1e-14));
    CHECK(std::abs(cpi.c) < 1e-14);

    // P2(t) has particle 2's coefficients; P1(t) + P2(t) = P1 + P2.
    const ElasticModel swapped(2.0, 1.0, 3.0);
    for (double t : {0.1, 0.7, 1.9, 4.0}) {
        const auto c1 = elastic_p1_coefficients(model, t);
        const auto c2 = elastic_p1_coefficients(swapped, t);
        CHECK(c1.a + c2.b == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(c1.b + c2.a == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(c1.c == doctest::Approx(c2.c).epsilon(1e-14));
    }
    CHECK_THROWS_AS(ElasticModel(0.0, 1.0, 1.0), ValidationError);
}

TEST_CASE("elastic work eigenvalue fixtures") {
    const ElasticModel model(1.0, 2.0, 1.0);
    CHECK(elastic_work_eigenvalue(model, 0.0, 0.0) == 0.0);
    CHECK(elastic_work_eigenvalue(model, 1.0, 1.0) == doctest::Approx(-4.0 / 9.0).epsilon(1e-15));

    const ElasticModel equal(1.5, 1.5, 1.0);
    for (double p1 : {-1.0, 0.3, 2.0}) {
        for (double p2 : {-0.5, 1.0}) {
            CHECK(elastic_work_eigenvalue(equal, p1, p2) ==
                  doctest::Approx((p2 * p2 - p1 * p1) / equal.total_mass()).epsilon(1e-14));
            const double pcm = p1 + p2;
            const double pr = model.reduced_mass() * (p2 / model.m2 - p1 / model.m1);
            CHECK(elastic_work_eigenvalue(model, p1, p2) ==
                  doctest::Approx(2.0 / model.total_mass() * pcm * pr).epsilon(1e-13));
        }
    }
}

TEST_CASE("elastic work operator on a discrete momentum basis") {
    const ElasticModel model(1.0, 2.0, 1.0);
    const TwoParticleBasis basis(GridSpec(16, -8.0, 8.0));
    const Operator w = elastic_work_operator_special(model, 0, 1, basis);
    CHECK(w.dim() == 256);

    std::vector<double> expected;
    for (std::size_t j1 = 0; j1 < 16; ++j1) {
        for (std::size_t j2 = 0; j2 < 16; ++j2) {
            const double e = elastic_work_eigenvalue(model, basis.momentum(j1), basis.momentum(j2));
            const Ket k = basis.momentum_ket(j1, j2);
            CHECK((w.apply(k) - Complex(e) * k).cwiseAbs().maxCoeff() < tol::reconstruction);
            expected.push_back(e);
        }
    }
    std::sort(expected.begin(), expected.end());
    std::vector<double> found;
    for (const auto& c : hermitian_eigensystem(w)) found.insert(found.end(), static_cast<std::size_t>(c.rank), c.eigenvalue);
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(std::abs(found[i] - expected[i]) < tol::reconstruction);

    CHECK(max_abs_difference(w, elastic_work_operator_cm_rel(model, basis)) < tol::reconstruction);
    const double tau = model.half_period();
    for (const auto& [u, v] : {std::pair{0, 1}, {2, 3}, {0, 5}}) {
        CHECK(max_abs_difference(elastic_work_operator_special(model, u, v, basis),
                                 elastic_work_operator(model, {u * tau, v * tau}, basis)) < tol::reconstruction);
    }
    CHECK_THROWS_AS(elastic_work_operator_special(model, 1, 3, basis), ValidationError);
    CHECK_THROWS_AS(elastic_work_operator_special(model, 0, 2, basis), ValidationError);
    CHECK_THROWS_AS(elastic_work_operator_special(model, 2, 1, basis), ValidationError);
}

TEST_CASE("elastic zero-work window") {
    const ElasticModel model(1.0, 2.0, 2.0);
    const ElasticZeroWorkWindow zw = elastic_zero_work_window(model);
    CHECK(zw.window.t1() == doctest::Approx(0.5 * std::numbers::pi / model.omega()));
    CHECK(zw.window.t2() == doctest::Approx(1.5 * std::numbers::pi / model.omega()));
    CHECK(zw.coefficient == doctest::Approx(-2.0 * model.reduced_mass() * model.omega() / model.total_mass()));

    const TwoParticleBasis basis(GridSpec(8, -4.0, 4.0));
    const Operator w = elastic_zero_work_operator(model, basis);
    CHECK(max_abs_difference(w, elastic_work_operator(model, zw.window, basis)) < tol::reconstruction);

    const Operator h = elastic_hamiltonian(model, basis);
    const DensityOperator rho = DensityOperator::pure(basis.momentum_ket(1, 2) + basis.momentum_ket(3, 0));
    const ConservationResult c = conservation_element_of_reality(
        rho, h, unitary_from_hamiltonian(h, zw.window.t1()), unitary_from_hamiltonian(h, zw.window.t2()));
    CHECK(std::abs(c.mean) < 1e-10);

    const GridSpec grid(512, -128.0, 128.0);
    for (double x_r0 : {0.0, 1.0, -2.0}) {
        const ZeroWorkStatistics s = elastic_zero_work_statistics(model, grid, 0.1, x_r0, 1.0);
        CHECK(std::abs(s.mean) < 1e-10);
        CHECK(s.sigma <= s.width_bound * (1.0 + 1e-9));
    }
    const ZeroWorkStatistics narrow = elastic_zero_work_statistics(model, grid, 0.05, 1.0, 1.0);
    const ZeroWorkStatistics wide = elastic_zero_work_statistics(model, grid, 0.1, 1.0, 1.0);
    CHECK(narrow.sigma < wide.sigma);
}

TEST_CASE("Gaussian entanglement coefficient") {
    CHECK(gaussian_entanglement_alpha(2.0, 2.0) == 0.0);
    CHECK(gaussian_entanglement_alpha(1.0, 1e12) == doctest::Approx(0.5).epsilon(1e-11));
    CHECK(gaussian_entanglement_alpha(1.0, 3.0) == doctest::Approx(0.25));
    CHECK_THROWS_AS(gaussian_entanglement_alpha(0.0, 1.0), ValidationError);
}

// ---------------------------------------------------------------------------
// Displacement and Bohmian trajectories

TEST_CASE("displacement operator") {
    const GridSpec grid(64, -4.0 * std::numbers::pi, 4.0 * std::numbers::pi);
    CHECK(displacement_operator(1.0, {1.0, 1.0}, grid).max_abs() < 1e-14);

    const Operator d = displacement_operator(1.0, {0.0, 2.0}, grid);
    const Ket k = momentum_basis_ket(grid, 6);  // p0 = 1.5
    CHECK((d.apply(k) - Complex(3.0) * k).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(displacement_eigenvalue(1.0, {0.0, 2.0}, 1.5) == 3.0);

    const GridSpec fine(1 << 9, -20.0, 20.0);
    const double mass = 1.3;
    const double dt = 0.9;
    const GaussianPacket packet{0.0, 0.4, 1.1};
    const double sigma = uncertainty(displacement_operator(mass, {0.0, dt}, fine),
                                     gaussian_wavefunction(packet, fine).density());
    CHECK(sigma == doctest::Approx(dt / (2.0 * mass * packet.sigma_x)).epsilon(1e-9));
}

TEST_CASE("Bohmian trajectories") {
    const GaussianPacket packet{0.5, 1.2, 0.8};
    const double mass = 1.4;
    for (double t : {0.0, 0.5, 3.0}) {
        CHECK(bohmian_trajectory(packet, mass, packet.x0, t) ==
              doctest::Approx(packet.x0 + packet.p0 * t / mass).epsilon(1e-14));
    }
    CHECK(bohmian_trajectory(packet, mass, 2.0, 0.0) == 2.0);
    CHECK(ehrenfest_time(packet, mass) == doctest::Approx(2.0 * mass * 0.64));

    // Central finite difference of the trajectory reproduces the velocity.
    const double h = 1e-5;
    const double t = 1.7;
    const double fd = (bohmian_trajectory(packet, mass, 1.0, t + h) - bohmian_trajectory(packet, mass, 1.0, t - h)) / (2 * h);
    CHECK(fd == doctest::Approx(bohmian_velocity(packet, mass, 1.0, t)).epsilon(1e-8));

    const double t_e = ehrenfest_time(packet, mass);
    const double slope = packet.p0 / mass + (1.0 - packet.x0) / t_e;
    CHECK(bohmian_velocity(packet, mass, 1.0, 1e4 * t_e) == doctest::Approx(slope).epsilon(1e-8));
    CHECK_THROWS_AS(bohmian_trajectory(packet, mass, 0.0, -1.0), ValidationError);
}

// ---------------------------------------------------------------------------
// Spin

TEST_CASE("spin displacement operator") {
    for (double hbar : {1.0, 2.0}) {
        const SpinModel model(1.3);
        const Operator d = spin_delta_sy_operator(model, hbar);
        CHECK(std::abs(d.trace()) < 1e-15);
        const auto spectrum = hermitian_eigensystem(d);
        REQUIRE(spectrum.size() == 2);
        CHECK(spectrum[0].eigenvalue == doctest::Approx(-hbar / std::sqrt(2.0)).epsilon(1e-14));
        CHECK(spectrum[1].eigenvalue == doctest::Approx(hbar / std::sqrt(2.0)).epsilon(1e-14));
        for (double eps : {1.0, -1.0}) {
            const Ket v = ket(1.0, eps * std::exp(Complex(0.0, -std::numbers::pi / 4.0))) / std::sqrt(2.0);
            CHECK((d.apply(v) - Complex(eps * hbar / std::sqrt(2.0)) * v).cwiseAbs().maxCoeff() < 1e-14);
        }
        const SpinOperators s = spin_operators(hbar);
        const Operator u = spin_propagator(model, std::numbers::pi / (2.0 * model.omega));
        CHECK(max_abs_difference(d, two_time_difference(s.sy, Operator::identity(2), u)) < tol::reconstruction);
        CHECK(expectation(d, DensityOperator::pure(ket_plus())).real() == doctest::Approx(hbar / 2.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(SpinModel(0.0), ValidationError);
}
