#pragma once

// Uniform periodic 1-D position grids and wave functions sampled on them.
//
// Momentum follows the standard DFT layout: index j < n/2 carries
// k_j = 2πj/L, index j >= n/2 carries k_j = 2π(j - n)/L, and p_j = ħ k_j.

#include <cstddef>
#include <functional>

#include "qwork/core.hpp"

namespace qwork {

/// Gaussian pure-state parameters: <X> = x0, <P> = p0, position spread sigma_x.
struct GaussianPacket {
    double x0 = 0.0;
    double p0 = 0.0;
    double sigma_x = 1.0;

    /// ħ / (2 sigma_x).
    double sigma_p(double hbar = 1.0) const { return hbar / (2.0 * sigma_x); }
};

class GridSpec {
public:
    /// n_points must be a power of two >= 2 and x_max > x_min.
    GridSpec(std::size_t n_points, double x_min, double x_max);

    std::size_t n_points() const { return n_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(n_); }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double length() const { return x_max_ - x_min_; }
    double dx() const { return length() / static_cast<double>(n_); }

    double position(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx(); }
    RealVector positions() const;
    /// DFT-ordered momentum grid.
    RealVector momenta(double hbar = 1.0) const;
    /// Largest representable |p|, ħπ/dx.
    double momentum_cutoff(double hbar = 1.0) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::size_t n_;
    double x_min_;
    double x_max_;
};

/// Complex amplitudes on a grid with Σ|ψ|² dx = 1.
class WaveFunction1D {
public:
    /// Throws ValidationError if the length does not match the grid or the
    /// norm differs from 1 by more than tol::norm.
    WaveFunction1D(GridSpec grid, Ket amplitudes);

    /// Rescales `amplitudes` to unit norm first.
    static WaveFunction1D normalized(GridSpec grid, Ket amplitudes);

    const GridSpec& grid() const { return grid_; }
    const Ket& amplitudes() const { return amps_; }
    double norm() const;

    /// Unit Euclidean vector (ψ √dx), the representation grid operators act on.
    Ket ket() const;
    DensityOperator density() const;

    /// Momentum-space probabilities in DFT order, summing to 1.
    RealVector momentum_probabilities() const;

    double position_moment(int k) const;
    double momentum_moment(int k, double hbar = 1.0) const;
    /// Σ f(p_j) P(p_j).
    double momentum_expectation(const std::function<double(double)>& f, double hbar = 1.0) const;

    Complex overlap(const WaveFunction1D& other) const;
    /// |<this|other>|².
    double fidelity(const WaveFunction1D& other) const;
    /// max(|ψ(x_0)|, |ψ(x_{n-1})|).
    double edge_amplitude() const;

private:
    GridSpec grid_;
    Ket amps_;
};

/// Samples (2πσ²)^{-1/4} exp(-(x-x0)²/4σ² + i p0 x/ħ), renormalized on the
/// grid. Requires sigma_x >= 4 dx and an edge amplitude below tol::edge.
WaveFunction1D gaussian_wavefunction(const GaussianPacket& packet, const GridSpec& grid, double hbar = 1.0);

/// Narrow-in-momentum Gaussian standing in for |p>: momentum spread d_p,
/// centered in position at `x_center`.
WaveFunction1D momentum_surrogate(double p, double d_p, const GridSpec& grid, double x_center = 0.0,
                                  double hbar = 1.0);

/// Unit Euclidean vector of the j-th DFT momentum mode, e^{2πi j n / N}/√N.
Ket momentum_basis_ket(const GridSpec& grid, std::size_t j);

/// Dense operator F† diag(f(p_j)) F on the grid, i.e. f(P).
Operator momentum_function_operator(const GridSpec& grid, const std::function<Complex(double)>& f,
                                    double hbar = 1.0);
/// Dense diag(f(x_n)), i.e. f(X).
Operator position_function_operator(const GridSpec& grid, const std::function<Complex(double)>& f);

Operator momentum_operator(const GridSpec& grid, double hbar = 1.0);
Operator position_operator(const GridSpec& grid);

/// Applies f(P) to a vector of grid amplitudes through one forward and one
/// inverse FFT.
Ket apply_momentum_function(const GridSpec& grid, const Ket& v, const std::function<Complex(double)>& f,
                            double hbar = 1.0);

}  // namespace qwork
