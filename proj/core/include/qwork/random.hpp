#pragma once

// Counter-based random streams. The k-th draw of stream s under seed S is a
// pure function of (S, s, k), so results do not depend on evaluation order
// or on how work is split across threads.

#include <cstdint>

#include "qwork/core.hpp"

namespace qwork {

class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal by inverse-CDF transform of uniform().
    double normal();
    double normal(double mean, double sd) { return mean + sd * normal(); }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Φ^{-1}(u) for u in (0, 1).
double standard_normal_quantile(double u);
/// Φ(z).
double standard_normal_cdf(double z);

/// Haar-like random unitary (QR of a complex Ginibre matrix, phase-fixed).
Operator random_unitary(Eigen::Index dim, CounterStream& rng);
/// (G + G†)/2 with Gaussian entries of unit variance.
Operator random_hermitian(Eigen::Index dim, CounterStream& rng);
/// G G† / Tr(G G†), full rank almost surely.
DensityOperator random_density(Eigen::Index dim, CounterStream& rng);
Ket random_ket(Eigen::Index dim, CounterStream& rng);

}  // namespace qwork
