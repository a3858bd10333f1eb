#include "qwork/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fft.hpp"
#include "qwork/error.hpp"

namespace qwork {

namespace {

std::string scientific(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

constexpr Complex kI{0.0, 1.0};

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw ValidationError(std::string(what) + " must be positive");
}

void check_edge(const WaveFunction1D& psi, const char* what) {
    if (psi.edge_amplitude() > tol::edge) {
        throw NumericalError(std::string(what) + ": wave packet reached the grid boundary (edge amplitude " +
                             scientific(psi.edge_amplitude()) + ")");
    }
}

void require_window(const TwoTimeWindow& window, int n_slices, const char* what) {
    if (window.degenerate()) {
        throw ValidationError(std::string(what) + ": degenerate window; use the single-time image instead");
    }
    if (n_slices < 2) throw ValidationError(std::string(what) + ": n_slices must be >= 2");
}

// Trapezoid weights on n_slices intervals, normalized to sum to 1.
std::vector<double> trapezoid_weights(int n_slices) {
    std::vector<double> w(static_cast<std::size_t>(n_slices) + 1, 1.0 / n_slices);
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

}  // namespace

TwoTimeWindow::TwoTimeWindow(double t1, double t2) : t1_(t1), t2_(t2) {
    if (!std::isfinite(t1) || !std::isfinite(t2)) throw ValidationError("TwoTimeWindow: non-finite instant");
    if (t2 < t1) throw ValidationError("TwoTimeWindow: require t2 >= t1");
}

WaveFunction1D split_operator_evolve(const WaveFunction1D& psi, const Potential& potential, double mass, double t,
                                     int n_steps, double hbar) {
    require_positive(mass, "split_operator_evolve: mass");
    if (n_steps < 1) throw ValidationError("split_operator_evolve: n_steps must be >= 1");
    if (t == 0.0) return psi;

    const GridSpec& grid = psi.grid();
    const double dt = t / n_steps;
    const Eigen::Index n = grid.size();

    Ket half_potential(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double v = potential(grid.position(static_cast<std::size_t>(i)));
        half_potential(i) = std::exp(-kI * v * dt / (2.0 * hbar));
    }
    const RealVector p = grid.momenta(hbar);
    Ket kinetic(n);
    for (Eigen::Index j = 0; j < n; ++j) kinetic(j) = std::exp(-kI * p(j) * p(j) * dt / (2.0 * mass * hbar));

    detail::Fft fft;
    Ket amps = psi.amplitudes();
    for (int step = 0; step < n_steps; ++step) {
        amps = amps.cwiseProduct(half_potential);
        amps = fft.inverse(fft.forward(amps).cwiseProduct(kinetic));
        amps = amps.cwiseProduct(half_potential);
        const double norm = amps.squaredNorm() * grid.dx();
        if (std::abs(norm - 1.0) > tol::norm_drift) {
            throw NumericalError("split_operator_evolve: norm drifted to " + std::to_string(norm) + " at step " +
                                 std::to_string(step));
        }
    }
    // Renormalize away accumulated round-off.
    WaveFunction1D out = WaveFunction1D::normalized(grid, std::move(amps));
    check_edge(out, "split_operator_evolve");
    return out;
}

WaveFunction1D apply_gravity_propagator(const WaveFunction1D& psi, double t, double mass, double g, double hbar) {
    require_positive(mass, "apply_gravity_propagator: mass");
    const GridSpec& grid = psi.grid();
    const double theta = mass * g * g * t * t * t / (6.0 * hbar);
    // Rightmost factors act first: translation, free flight, momentum kick.
    Ket amps = apply_momentum_function(
        grid, psi.amplitudes(),
        [&](double p) {
            return std::exp(kI * (g * t * t * p / (2.0 * hbar) - p * p * t / (2.0 * mass * hbar)));
        },
        hbar);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const double x = grid.position(static_cast<std::size_t>(i));
        amps(i) *= std::exp(-kI * (theta + mass * g * t * x / hbar));
    }
    WaveFunction1D out = WaveFunction1D::normalized(grid, std::move(amps));
    check_edge(out, "apply_gravity_propagator");
    return out;
}

Operator gravity_propagator_factorized(double t, double mass, double g, const GridSpec& grid, double hbar) {
    require_positive(mass, "gravity_propagator_factorized: mass");
    const double theta = mass * g * g * t * t * t / (6.0 * hbar);
    const Operator momentum_part = momentum_function_operator(
        grid,
        [&](double p) {
            return std::exp(kI * (g * t * t * p / (2.0 * hbar) - p * p * t / (2.0 * mass * hbar)));
        },
        hbar);
    const Operator kick = position_function_operator(
        grid, [&](double x) { return std::exp(-kI * (theta + mass * g * t * x / hbar)); });
    return kick * momentum_part;
}

Operator unitary_from_hamiltonian(const Operator& h, double t, double hbar) {
    if (!h.is_hermitian()) throw ValidationError("unitary_from_hamiltonian: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (h.matrix() + h.matrix().adjoint()));
    const RealVector& e = solver.eigenvalues();
    Ket phases(e.size());
    for (Eigen::Index i = 0; i < e.size(); ++i) phases(i) = std::exp(-kI * e(i) * t / hbar);
    const Matrix& v = solver.eigenvectors();
    return Operator(v * phases.asDiagonal() * v.adjoint());
}

Operator heisenberg_evolve(const Operator& o, const Operator& u) {
    if (o.dim() != u.dim()) throw DimensionError("heisenberg_evolve: dimension mismatch");
    if (!u.is_unitary()) throw ValidationError("heisenberg_evolve: propagator is not unitary");
    return Operator(u.matrix().adjoint() * o.matrix() * u.matrix());
}

Operator two_time_difference(const Operator& o, const Operator& u1, const Operator& u2) {
    return heisenberg_evolve(o, u2) - heisenberg_evolve(o, u1);
}

TimeMixtureState time_average_map(const DensityOperator& rho0, const UnitaryFamily& u_of_t,
                                  const TwoTimeWindow& window, int n_slices) {
    require_window(window, n_slices, "time_average_map");
    const auto weights = trapezoid_weights(n_slices);
    const double h = window.duration() / n_slices;
    const Matrix& rho = rho0.op().matrix();
    Matrix acc = Matrix::Zero(rho0.dim(), rho0.dim());
    // Summed in fixed index order.
    for (int k = 0; k <= n_slices; ++k) {
        const Operator u = u_of_t(window.t1() + k * h);
        if (u.dim() != rho0.dim()) throw DimensionError("time_average_map: propagator dimension mismatch");
        acc += weights[static_cast<std::size_t>(k)] * (u.matrix() * rho * u.matrix().adjoint());
    }
    acc = 0.5 * (acc + acc.adjoint());
    acc /= acc.trace().real();
    return {DensityOperator(Operator(std::move(acc))), window, n_slices};
}

Operator time_average_operator(const Operator& o, const UnitaryFamily& u_of_t, const TwoTimeWindow& window,
                               int n_slices) {
    require_window(window, n_slices, "time_average_operator");
    const auto weights = trapezoid_weights(n_slices);
    const double h = window.duration() / n_slices;
    Matrix acc = Matrix::Zero(o.dim(), o.dim());
    for (int k = 0; k <= n_slices; ++k) {
        const Operator u = u_of_t(window.t1() + k * h);
        if (u.dim() != o.dim()) throw DimensionError("time_average_operator: propagator dimension mismatch");
        acc += weights[static_cast<std::size_t>(k)] * (u.matrix().adjoint() * o.matrix() * u.matrix());
    }
    return Operator(std::move(acc));
}

}  // namespace qwork
