#include "qwork/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwork/error.hpp"

namespace qwork {

namespace {

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
    }
}

double scale_of(const Matrix& m) { return std::max(1.0, m.cwiseAbs().maxCoeff()); }

}  // namespace

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw DimensionError("Operator: matrix must be square and non-empty");
    }
}

Operator Operator::identity(Eigen::Index dim) { return Operator(Matrix::Identity(dim, dim)); }

Operator Operator::zero(Eigen::Index dim) { return Operator(Matrix::Zero(dim, dim)); }

Operator Operator::diagonal(const RealVector& values) {
    return Operator(values.cast<Complex>().asDiagonal().toDenseMatrix());
}

Operator Operator::projector(const Ket& v) {
    const double n = v.norm();
    if (n == 0.0) throw ValidationError("Operator::projector: zero vector");
    const Ket u = v / n;
    return Operator(u * u.adjoint());
}

Operator Operator::adjoint() const { return Operator(entries_.adjoint()); }

double Operator::max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

double Operator::hermiticity_residual() const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool Operator::is_hermitian(double tol) const {
    return hermiticity_residual() <= tol * scale_of(entries_);
}

bool Operator::is_unitary(double tol) const {
    const Matrix residual = entries_ * entries_.adjoint() - Matrix::Identity(dim(), dim());
    return residual.cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_idempotent(double tol) const {
    return (entries_ * entries_ - entries_).cwiseAbs().maxCoeff() <= tol * scale_of(entries_);
}

Operator& Operator::operator+=(const Operator& rhs) {
    require_same_dim(*this, rhs, "Operator::operator+");
    entries_ += rhs.entries_;
    return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
    require_same_dim(*this, rhs, "Operator::operator-");
    entries_ -= rhs.entries_;
    return *this;
}

Operator& Operator::operator*=(Complex s) {
    entries_ *= s;
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "Operator::operator*");
    return Operator(a.entries_ * b.entries_);
}

double max_abs_difference(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "max_abs_difference");
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(Operator op) : op_(std::move(op)) {
    if (!op_.is_hermitian()) throw ValidationError("DensityOperator: not Hermitian");
    const Complex tr = op_.trace();
    if (std::abs(tr - 1.0) > tol::trace) {
        throw ValidationError("DensityOperator: trace " + std::to_string(tr.real()) + " differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.matrix(), Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -tol::psd) {
        throw ValidationError("DensityOperator: negative eigenvalue " +
                              std::to_string(solver.eigenvalues().minCoeff()));
    }
}

DensityOperator DensityOperator::pure(const Ket& psi) { return DensityOperator(Operator::projector(psi)); }

DensityOperator DensityOperator::maximally_mixed(Eigen::Index dim) {
    return DensityOperator(Operator(Matrix::Identity(dim, dim) / static_cast<double>(dim)));
}

Operator anticommutator(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "anticommutator");
    return Operator(0.5 * (a.matrix() * b.matrix() + b.matrix() * a.matrix()));
}

Operator commutator(const Operator& a, const Operator& b) {
    require_same_dim(a, b, "commutator");
    return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

Complex commutator_expectation(const Operator& a, const Operator& b, const DensityOperator& rho) {
    require_same_dim(a, b, "commutator_expectation");
    require_same_dim(a, rho.op(), "commutator_expectation");
    return expectation(commutator(a, b), rho);
}

Complex expectation(const Operator& a, const DensityOperator& rho) {
    require_same_dim(a, rho.op(), "expectation");
    // Tr(AB) = Σ_ij A_ij B_ji without forming the product.
    return (a.matrix().cwiseProduct(rho.op().matrix().transpose())).sum();
}

double uncertainty(const Operator& a, const DensityOperator& rho) {
    const double mean = expectation(a, rho).real();
    const double second = expectation(a * a, rho).real();
    return std::sqrt(std::max(0.0, second - mean * mean));
}

std::vector<SpectralComponent> hermitian_eigensystem(const Operator& a) {
    if (!a.is_hermitian()) {
        throw ValidationError("hermitian_eigensystem: operator is not Hermitian (residual " +
                              std::to_string(a.hermiticity_residual()) + ")");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
    if (solver.info() != Eigen::Success) throw NumericalError("hermitian_eigensystem: solver did not converge");
    const RealVector& values = solver.eigenvalues();
    const Matrix& vectors = solver.eigenvectors();
    const Eigen::Index n = values.size();

    const double range = values(n - 1) - values(0);
    const double gap_tol = tol::degeneracy_relative * range;

    std::vector<SpectralComponent> out;
    Eigen::Index start = 0;
    while (start < n) {
        Eigen::Index stop = start + 1;
        while (stop < n && values(stop) - values(stop - 1) <= gap_tol) ++stop;
        const Eigen::Index rank = stop - start;
        const auto block = vectors.middleCols(start, rank);
        out.push_back({values.segment(start, rank).mean(), Operator(block * block.adjoint()), rank});
        start = stop;
    }
    return out;
}

Operator tensor_product(const Operator& a, const Operator& b) {
    const Eigen::Index na = a.dim();
    const Eigen::Index nb = b.dim();
    Matrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
        }
    }
    return Operator(std::move(out));
}

double von_neumann_entropy(const DensityOperator& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.op().matrix(), Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (const double lambda : solver.eigenvalues()) {
        if (lambda > tol::psd) s -= lambda * std::log(lambda);
    }
    return std::max(0.0, s);
}

}  // namespace qwork
