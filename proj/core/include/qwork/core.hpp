#pragma once

// Dense operator algebra on finite-dimensional Hilbert spaces.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwork/tolerances.hpp"

namespace qwork {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Ket = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix acting on a `dim`-dimensional Hilbert space.
///
/// Hermiticity and unitarity are properties queried on demand, not encoded in
/// the type; operations that need them check and throw.
class Operator {
public:
    explicit Operator(Matrix entries);

    static Operator identity(Eigen::Index dim);
    static Operator zero(Eigen::Index dim);
    static Operator diagonal(const RealVector& values);
    /// |v><v| / <v|v>.
    static Operator projector(const Ket& v);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& matrix() const { return entries_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

    Operator adjoint() const;
    Complex trace() const { return entries_.trace(); }
    double max_abs() const;

    /// max |a_ij - conj(a_ji)|, the quantity compared against tol::hermitian.
    double hermiticity_residual() const;
    /// Residuals are judged relative to max(1, max|a_ij|).
    bool is_hermitian(double tol = tol::hermitian) const;
    bool is_unitary(double tol = tol::unitary) const;
    bool is_idempotent(double tol = tol::reconstruction) const;

    Ket apply(const Ket& v) const { return entries_ * v; }

    Operator& operator+=(const Operator& rhs);
    Operator& operator-=(const Operator& rhs);
    Operator& operator*=(Complex s);

    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(Complex s, Operator a) { return a *= s; }
    friend Operator operator*(Operator a, Complex s) { return a *= s; }

private:
    Matrix entries_;
};

/// max |a_ij - b_ij|; dimensions must agree.
double max_abs_difference(const Operator& a, const Operator& b);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityOperator {
public:
    /// Throws ValidationError unless `op` is a valid density operator within
    /// tol::hermitian, tol::trace and tol::psd.
    explicit DensityOperator(Operator op);

    /// |psi><psi| after normalizing psi.
    static DensityOperator pure(const Ket& psi);
    static DensityOperator maximally_mixed(Eigen::Index dim);

    const Operator& op() const { return op_; }
    Eigen::Index dim() const { return op_.dim(); }

private:
    Operator op_;
};

/// ½(ab + ba).
Operator anticommutator(const Operator& a, const Operator& b);
/// ab - ba.
Operator commutator(const Operator& a, const Operator& b);

/// Tr([a, b] rho).
Complex commutator_expectation(const Operator& a, const Operator& b, const DensityOperator& rho);

/// Tr(a rho).
Complex expectation(const Operator& a, const DensityOperator& rho);
/// sqrt(<a^2> - <a>^2) for Hermitian a; negative round-off is clamped to 0.
double uncertainty(const Operator& a, const DensityOperator& rho);

struct SpectralComponent {
    double eigenvalue;
    Operator projector;
    Eigen::Index rank;
};

/// Spectral decomposition of a Hermitian operator with eigenvalues sorted
/// ascending. Eigenvalues closer than tol::degeneracy_relative times the
/// spectral range are merged into a single projector.
std::vector<SpectralComponent> hermitian_eigensystem(const Operator& a);

/// Kronecker product; the first factor is subsystem 1 (the slow index).
Operator tensor_product(const Operator& a, const Operator& b);

/// -Σ λ ln λ over eigenvalues λ > tol::psd, in nats.
double von_neumann_entropy(const DensityOperator& rho);

}  // namespace qwork
