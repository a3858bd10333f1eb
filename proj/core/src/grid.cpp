#include "qwork/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "qwork/error.hpp"

namespace qwork {

namespace {

std::string scientific(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

bool is_power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

}  // namespace

GridSpec::GridSpec(std::size_t n_points, double x_min, double x_max)
    : n_(n_points), x_min_(x_min), x_max_(x_max) {
    if (!is_power_of_two(n_)) {
        throw ValidationError("GridSpec: n_points must be a power of two >= 2, got " + std::to_string(n_));
    }
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw ValidationError("GridSpec: require finite x_max > x_min");
    }
}

RealVector GridSpec::positions() const {
    RealVector x(size());
    for (std::size_t i = 0; i < n_; ++i) x(static_cast<Eigen::Index>(i)) = position(i);
    return x;
}

RealVector GridSpec::momenta(double hbar) const {
    RealVector p(size());
    const double dk = 2.0 * std::numbers::pi / length();
    const auto n = static_cast<std::ptrdiff_t>(n_);
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const std::ptrdiff_t m = j < n / 2 ? j : j - n;
        p(j) = hbar * dk * static_cast<double>(m);
    }
    return p;
}

double GridSpec::momentum_cutoff(double hbar) const { return hbar * std::numbers::pi / dx(); }

WaveFunction1D::WaveFunction1D(GridSpec grid, Ket amplitudes) : grid_(grid), amps_(std::move(amplitudes)) {
    if (amps_.size() != grid_.size()) throw DimensionError("WaveFunction1D: amplitude count does not match grid");
    if (std::abs(norm() - 1.0) > tol::norm) {
        throw ValidationError("WaveFunction1D: norm " + std::to_string(norm()) + " differs from 1");
    }
}

WaveFunction1D WaveFunction1D::normalized(GridSpec grid, Ket amplitudes) {
    const double n = std::sqrt(amplitudes.squaredNorm() * grid.dx());
    if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("WaveFunction1D: cannot normalize zero amplitudes");
    return WaveFunction1D(grid, amplitudes / n);
}

double WaveFunction1D::norm() const { return amps_.squaredNorm() * grid_.dx(); }

Ket WaveFunction1D::ket() const { return amps_ * std::sqrt(grid_.dx()); }

DensityOperator WaveFunction1D::density() const { return DensityOperator::pure(ket()); }

RealVector WaveFunction1D::momentum_probabilities() const {
    detail::Fft fft;
    const RealVector prob = fft.forward(amps_).cwiseAbs2();
    return prob / prob.sum();
}

double WaveFunction1D::position_moment(int k) const {
    const RealVector x = grid_.positions();
    return (amps_.cwiseAbs2().array() * x.array().pow(k)).sum() * grid_.dx();
}

double WaveFunction1D::momentum_moment(int k, double hbar) const {
    return momentum_expectation([k](double p) { return std::pow(p, k); }, hbar);
}

double WaveFunction1D::momentum_expectation(const std::function<double(double)>& f, double hbar) const {
    const RealVector prob = momentum_probabilities();
    const RealVector p = grid_.momenta(hbar);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < p.size(); ++j) acc += f(p(j)) * prob(j);
    return acc;
}

Complex WaveFunction1D::overlap(const WaveFunction1D& other) const {
    if (!(grid_ == other.grid_)) throw DimensionError("WaveFunction1D::overlap: grids differ");
    return amps_.dot(other.amps_) * grid_.dx();
}

double WaveFunction1D::fidelity(const WaveFunction1D& other) const { return std::norm(overlap(other)); }

double WaveFunction1D::edge_amplitude() const {
    return std::max(std::abs(amps_(0)), std::abs(amps_(amps_.size() - 1)));
}

WaveFunction1D gaussian_wavefunction(const GaussianPacket& packet, const GridSpec& grid, double hbar) {
    if (!(packet.sigma_x > 0.0)) throw ValidationError("gaussian_wavefunction: sigma_x must be positive");
    if (packet.sigma_x < 4.0 * grid.dx()) {
        throw ValidationError("gaussian_wavefunction: sigma_x below 4 dx is under-resolved");
    }
    const double s2 = packet.sigma_x * packet.sigma_x;
    const double prefactor = std::pow(2.0 * std::numbers::pi * s2, -0.25);
    Ket amps(grid.size());
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
        const double x = grid.position(i);
        const double d = x - packet.x0;
        amps(static_cast<Eigen::Index>(i)) =
            prefactor * std::exp(Complex(-d * d / (4.0 * s2), packet.p0 * x / hbar));
    }
    auto psi = WaveFunction1D::normalized(grid, std::move(amps));
    if (psi.edge_amplitude() > tol::edge) {
        throw ValidationError("gaussian_wavefunction: packet leaks past the grid boundary (edge amplitude " +
                              scientific(psi.edge_amplitude()) + ")");
    }
    return psi;
}

WaveFunction1D momentum_surrogate(double p, double d_p, const GridSpec& grid, double x_center, double hbar) {
    if (!(d_p > 0.0)) throw ValidationError("momentum_surrogate: d_p must be positive");
    return gaussian_wavefunction({x_center, p, hbar / (2.0 * d_p)}, grid, hbar);
}

Ket momentum_basis_ket(const GridSpec& grid, std::size_t j) {
    if (j >= grid.n_points()) throw ValidationError("momentum_basis_ket: index out of range");
    const auto n = grid.size();
    Ket v(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        // Reduce j*k modulo n before converting.
        const auto jk = static_cast<std::size_t>(j * static_cast<std::size_t>(k)) % grid.n_points();
        const double phase = 2.0 * std::numbers::pi * static_cast<double>(jk) / static_cast<double>(n);
        v(k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), phase);
    }
    return v;
}

Ket apply_momentum_function(const GridSpec& grid, const Ket& v, const std::function<Complex(double)>& f,
                            double hbar) {
    if (v.size() != grid.size()) throw DimensionError("apply_momentum_function: vector does not match grid");
    detail::Fft fft;
    Ket spectrum = fft.forward(v);
    const RealVector p = grid.momenta(hbar);
    for (Eigen::Index j = 0; j < p.size(); ++j) spectrum(j) *= f(p(j));
    return fft.inverse(spectrum);
}

Operator momentum_function_operator(const GridSpec& grid, const std::function<Complex(double)>& f, double hbar) {
    const auto n = grid.size();
    const RealVector p = grid.momenta(hbar);
    Ket diag(n);
    for (Eigen::Index j = 0; j < n; ++j) diag(j) = f(p(j));
    // Column k of F† diag F is the inverse transform of diag ⊙ F e_k.
    detail::Fft fft;
    Matrix out(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        Ket e = Ket::Zero(n);
        e(k) = 1.0;
        out.col(k) = fft.inverse(fft.forward(e).cwiseProduct(diag));
    }
    return Operator(std::move(out));
}

Operator position_function_operator(const GridSpec& grid, const std::function<Complex(double)>& f) {
    Ket diag(grid.size());
    for (std::size_t i = 0; i < grid.n_points(); ++i) diag(static_cast<Eigen::Index>(i)) = f(grid.position(i));
    return Operator(diag.asDiagonal().toDenseMatrix());
}

Operator momentum_operator(const GridSpec& grid, double hbar) {
    Operator p = momentum_function_operator(grid, [](double v) { return Complex(v); }, hbar);
    // Symmetrize away FFT round-off.
    return Operator(0.5 * (p.matrix() + p.matrix().adjoint()));
}

Operator position_operator(const GridSpec& grid) {
    return position_function_operator(grid, [](double x) { return Complex(x); });
}

}  // namespace qwork
