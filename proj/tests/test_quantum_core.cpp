#include <doctest.h>

#include <cmath>

#include <qwork/core.hpp>
#include <qwork/error.hpp>
#include <qwork/grid.hpp>
#include <qwork/random.hpp>

#include "support.hpp"

using namespace qwork;
using namespace qtest;

TEST_CASE("anticommutator fixtures") {
    CHECK(max_abs_difference(anticommutator(Operator::identity(2), Operator::identity(2)), Operator::identity(2)) <
          1e-15);
    CHECK(anticommutator(pauli_x(), pauli_y()).max_abs() < 1e-15);
    CHECK(max_abs_difference(anticommutator(pauli_x(), pauli_x()), Operator::identity(2)) < 1e-15);
    CHECK_THROWS_AS(anticommutator(Operator::identity(2), Operator::identity(3)), DimensionError);
}

TEST_CASE("anticommutator of Hermitian operators is Hermitian") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        CounterStream rng(11, s);
        const auto dim = static_cast<Eigen::Index>(2 + s % 15);
        const Operator a = random_hermitian(dim, rng);
        const Operator b = random_hermitian(dim, rng);
        CHECK(anticommutator(a, b).hermiticity_residual() < tol::hermitian);
    }
}

TEST_CASE("commutator expectation fixtures") {
    const DensityOperator zero = DensityOperator::pure(ket0());
    const Complex c = commutator_expectation(pauli_x(), pauli_y(), zero);
    CHECK(std::abs(c - Complex(0.0, 2.0)) < 1e-15);
    CHECK(std::abs(commutator_expectation(pauli_x(), pauli_x(), zero)) < 1e-15);
    CHECK(std::abs(commutator_expectation(pauli_z(), pauli_x(), DensityOperator::maximally_mixed(2))) < 1e-15);
    CHECK_THROWS_AS(commutator_expectation(Operator::identity(3), Operator::identity(3), zero), DimensionError);
}

TEST_CASE("commutator expectation of Hermitian pair is imaginary") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        CounterStream rng(12, s);
        const Operator a = random_hermitian(4, rng);
        const Operator b = random_hermitian(4, rng);
        CHECK(std::abs(commutator_expectation(a, b, random_density(4, rng)).real()) < 1e-12);
    }
}

TEST_CASE("eigensystem of the spin displacement matrix") {
    Matrix m(2, 2);
    m << 0, Complex(0.5, 0.5), Complex(0.5, -0.5), 0;
    const auto spectrum = hermitian_eigensystem(Operator(m));
    REQUIRE(spectrum.size() == 2);
    CHECK(spectrum[0].eigenvalue == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(spectrum[1].eigenvalue == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("eigensystem merges degenerate eigenvalues") {
    const auto id = hermitian_eigensystem(Operator::identity(3));
    REQUIRE(id.size() == 1);
    CHECK(id[0].eigenvalue == doctest::Approx(1.0));
    CHECK(id[0].rank == 3);

    RealVector d(3);
    d << 2.0, -1.0, 2.0;
    const auto spectrum = hermitian_eigensystem(Operator::diagonal(d));
    REQUIRE(spectrum.size() == 2);
    CHECK(spectrum[0].eigenvalue == doctest::Approx(-1.0));
    CHECK(spectrum[0].rank == 1);
    CHECK(spectrum[1].eigenvalue == doctest::Approx(2.0));
    CHECK(spectrum[1].rank == 2);
}

TEST_CASE("eigensystem rejects non-Hermitian input") {
    Matrix m(2, 2);
    m << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eigensystem(Operator(m)), ValidationError);
}

TEST_CASE("eigensystem reconstruction, completeness and orthogonality") {
    for (Eigen::Index dim : {2, 3, 5, 8, 16, 32, 64}) {
        CounterStream rng(13, static_cast<std::uint64_t>(dim));
        const Operator a = random_hermitian(dim, rng);
        const auto spectrum = hermitian_eigensystem(a);
        Operator recon = Operator::zero(dim);
        Operator sum = Operator::zero(dim);
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            recon += Complex(spectrum[i].eigenvalue) * spectrum[i].projector;
            sum += spectrum[i].projector;
            if (i > 0) CHECK(spectrum[i - 1].eigenvalue < spectrum[i].eigenvalue);
            for (std::size_t j = 0; j < spectrum.size(); ++j) {
                const Operator prod = spectrum[i].projector * spectrum[j].projector;
                const Operator expect = i == j ? spectrum[i].projector : Operator::zero(dim);
                CHECK(max_abs_difference(prod, expect) < tol::reconstruction);
            }
        }
        CHECK(max_abs_difference(recon, a) < tol::reconstruction);
        CHECK(max_abs_difference(sum, Operator::identity(dim)) < tol::unitary);
    }
}

TEST_CASE("tensor product convention") {
    CHECK(max_abs_difference(tensor_product(Operator::identity(2), Operator::identity(2)), Operator::identity(4)) ==
          0.0);
    RealVector d(4);
    d << 1, 1, -1, -1;
    CHECK(max_abs_difference(tensor_product(pauli_z(), Operator::identity(2)), Operator::diagonal(d)) == 0.0);

    const GridSpec grid(4, 0.0, 4.0);
    const Operator p1 = Operator::projector(momentum_basis_ket(grid, 1));
    const Operator p2 = Operator::projector(momentum_basis_ket(grid, 3));
    const Operator joint = tensor_product(p1, p2);
    CHECK(joint.dim() == 16);
    CHECK(joint.is_idempotent());
    CHECK(std::abs(joint.trace() - Complex(1.0)) < 1e-14);
    // Kronecker oracle: entry (i1*4 + i2, j1*4 + j2) = p1(i1, j1) p2(i2, j2).
    for (int i1 = 0; i1 < 4; ++i1)
        for (int i2 = 0; i2 < 4; ++i2)
            for (int j1 = 0; j1 < 4; ++j1)
                for (int j2 = 0; j2 < 4; ++j2)
                    CHECK(std::abs(joint(i1 * 4 + i2, j1 * 4 + j2) - p1(i1, j1) * p2(i2, j2)) < 1e-15);
}

TEST_CASE("von Neumann entropy fixtures") {
    CHECK(von_neumann_entropy(DensityOperator::pure(ket0())) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(DensityOperator::maximally_mixed(2)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    RealVector d(2);
    d << 0.75, 0.25;
    const double expect = -0.75 * std::log(0.75) - 0.25 * std::log(0.25);
    CHECK(von_neumann_entropy(DensityOperator(Operator::diagonal(d))) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("entropy is unitarily invariant") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        CounterStream rng(14, s);
        const auto dim = static_cast<Eigen::Index>(2 + s % 7);
        const DensityOperator rho = random_density(dim, rng);
        const Operator u = random_unitary(dim, rng);
        const DensityOperator rotated(u * rho.op() * u.adjoint());
        CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < tol::entropy);
    }
}

TEST_CASE("density operator validation") {
    RealVector d(2);
    d << 0.7, 0.7;
    CHECK_THROWS_AS(DensityOperator(Operator::diagonal(d)), ValidationError);
    d << 1.2, -0.2;
    CHECK_THROWS_AS(DensityOperator(Operator::diagonal(d)), ValidationError);
    CHECK_THROWS_AS(DensityOperator(pauli_y() + Operator::identity(2)), ValidationError);
}

TEST_CASE("Gaussian wave function moments") {
    const GridSpec grid(1 << 12, -20.0, 20.0);
    const WaveFunction1D psi = gaussian_wavefunction({0.0, 0.0, 1.0}, grid);
    CHECK(std::abs(psi.position_moment(1)) < 1e-8);
    CHECK(std::abs(psi.position_moment(2) - 1.0) < 1e-8);

    const WaveFunction1D moving = gaussian_wavefunction({0.0, 5.0, 1.0}, grid);
    CHECK(std::abs(moving.momentum_moment(1) - 5.0) < 1e-6);
    const double var = moving.momentum_moment(2) - std::pow(moving.momentum_moment(1), 2);
    CHECK(std::abs(std::sqrt(var) - 0.5) < 1e-8);
}

TEST_CASE("Gaussian wave function norm over admissible packets") {
    const GridSpec grid(1 << 11, -30.0, 30.0);
    for (double x0 : {-5.0, 0.0, 3.0}) {
        for (double p0 : {-4.0, 0.0, 2.5}) {
            for (double s : {0.5, 1.0, 2.0}) {
                const WaveFunction1D psi = gaussian_wavefunction({x0, p0, s}, grid);
                CHECK(std::abs(psi.norm() - 1.0) < tol::norm);
            }
        }
    }
}

TEST_CASE("Gaussian wave function rejects leaking or under-resolved packets") {
    const GridSpec grid(1 << 10, -20.0, 20.0);
    CHECK_THROWS_AS(gaussian_wavefunction({17.0, 0.0, 1.0}, grid), ValidationError);
    CHECK_THROWS_AS(gaussian_wavefunction({0.0, 0.0, 0.1}, grid), ValidationError);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(3, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(GridSpec(1, 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(GridSpec(8, 1.0, 1.0), ValidationError);
    const GridSpec g(8, -4.0, 4.0);
    CHECK(g.dx() == 1.0);
    const RealVector p = g.momenta();
    CHECK(p(1) == doctest::Approx(2.0 * std::numbers::pi / 8.0));
    CHECK(p(7) == doctest::Approx(-2.0 * std::numbers::pi / 8.0));
}
