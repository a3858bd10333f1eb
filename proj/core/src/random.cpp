#include "qwork/random.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

namespace qwork {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Matrix ginibre(Eigen::Index dim, CounterStream& rng) {
    Matrix g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

}  // namespace

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ mix64(stream + kGolden))) {}

std::uint64_t CounterStream::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double CounterStream::uniform() {
    // 53 random bits, shifted half a step off zero.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::normal() { return standard_normal_quantile(uniform()); }

double standard_normal_quantile(double u) { return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * u); }

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

Operator random_unitary(Eigen::Index dim, CounterStream& rng) {
    Eigen::HouseholderQR<Matrix> qr(ginibre(dim, rng));
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) q.col(i) *= r(i, i) / mag;
    }
    return Operator(std::move(q));
}

Operator random_hermitian(Eigen::Index dim, CounterStream& rng) {
    const Matrix g = ginibre(dim, rng);
    return Operator(0.5 * (g + g.adjoint()));
}

DensityOperator random_density(Eigen::Index dim, CounterStream& rng) {
    const Matrix g = ginibre(dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator(Operator(0.5 * (rho + rho.adjoint())));
}

Ket random_ket(Eigen::Index dim, CounterStream& rng) {
    Ket v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        v(i) = Complex(re, im);
    }
    return v.normalized();
}

}  // namespace qwork
