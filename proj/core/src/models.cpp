#include "qwork/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwork/error.hpp"

namespace qwork {

namespace {

constexpr Complex kI{0.0, 1.0};

Ket kron(const Ket& a, const Ket& b) {
    Ket out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Operator scaled(double s, const Operator& op) { return Complex(s) * op; }

}  // namespace

GravityModel::GravityModel(double m_, double g_) : m(m_), g(g_) {
    if (!(m > 0.0) || !std::isfinite(m)) throw ValidationError("GravityModel: mass must be positive");
    if (!std::isfinite(g)) throw ValidationError("GravityModel: g must be finite");
}

Operator gravity_work_operator(const GravityModel& model, const TwoTimeWindow& window, const GridSpec& grid,
                               double hbar) {
    Operator w = momentum_function_operator(
        grid, [&](double p) { return Complex(gravity_work_eigenvalue(model, window, p)); }, hbar);
    return Operator(0.5 * (w.matrix() + w.matrix().adjoint()));
}

double gravity_work_eigenvalue(const GravityModel& model, const TwoTimeWindow& window, double p) {
    const double t1 = window.t1();
    const double t2 = window.t2();
    return -model.g * (t2 - t1) * p + 0.5 * model.m * model.g * model.g * (t2 * t2 - t1 * t1);
}

std::vector<WorkSpectrumEntry> gravity_work_spectrum(const GravityModel& model, const TwoTimeWindow& window,
                                                     const GridSpec& grid, double hbar) {
    std::vector<WorkSpectrumEntry> out;
    const RealVector p = grid.momenta(hbar);
    out.reserve(static_cast<std::size_t>(p.size()));
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        out.push_back({gravity_work_eigenvalue(model, window, p(j)), {p(j)}, window});
    }
    return out;
}

double gravity_zero_work_momentum(const GravityModel& model, const TwoTimeWindow& window) {
    return 0.5 * model.m * model.g * (window.t1() + window.t2());
}

double gravity_power_expectation(const GravityModel& model, double p0, double t) {
    return model.force() * (p0 / model.m - model.g * t);
}

Complex gravity_potential_commutator(const GravityModel& model, const TwoTimeWindow& window,
                                     const WaveFunction1D& psi, double hbar) {
    const GridSpec& grid = psi.grid();
    const RealVector x = grid.positions();
    auto apply_v = [&](const Ket& v, double t) -> Ket {
        const Ket pv = apply_momentum_function(grid, v, [](double p) { return Complex(p); }, hbar);
        Ket out = x.cast<Complex>().cwiseProduct(v) + (t / model.m) * pv - (0.5 * model.g * t * t) * v;
        return model.m * model.g * out;
    };
    const Ket k = psi.ket();
    const Ket c = apply_v(apply_v(k, window.t2()), window.t1()) - apply_v(apply_v(k, window.t1()), window.t2());
    return k.dot(c);
}

ElasticModel::ElasticModel(double m1_, double m2_, double k_) : m1(m1_), m2(m2_), k(k_) {
    if (!(m1 > 0.0) || !(m2 > 0.0) || !(k > 0.0)) {
        throw ValidationError("ElasticModel: m1, m2 and k must be positive");
    }
}

double ElasticModel::omega() const { return std::sqrt(k / reduced_mass()); }

double ElasticModel::half_period() const { return std::numbers::pi / omega(); }

ElasticP1Coefficients elastic_p1_coefficients(const ElasticModel& model, double t) {
    const double wt = model.omega() * t;
    const double big_m = model.total_mass();
    return {(model.m1 + model.m2 * std::cos(wt)) / big_m, (1.0 - std::cos(wt)) * model.m1 / big_m,
            model.reduced_mass() * model.omega() * std::sin(wt)};
}

TwoParticleBasis::TwoParticleBasis(GridSpec grid_, double hbar_)
    : grid(grid_),
      hbar(hbar_),
      p1(tensor_product(momentum_operator(grid_, hbar_), Operator::identity(grid_.size()))),
      p2(tensor_product(Operator::identity(grid_.size()), momentum_operator(grid_, hbar_))),
      x1(tensor_product(position_operator(grid_), Operator::identity(grid_.size()))),
      x2(tensor_product(Operator::identity(grid_.size()), position_operator(grid_))) {}

Ket TwoParticleBasis::momentum_ket(std::size_t j1, std::size_t j2) const {
    return kron(momentum_basis_ket(grid, j1), momentum_basis_ket(grid, j2));
}

double TwoParticleBasis::momentum(std::size_t j) const {
    return grid.momenta(hbar)(static_cast<Eigen::Index>(j));
}

Operator elastic_work_operator_special(const ElasticModel& model, int u, int v, const TwoParticleBasis& basis) {
    if (u < 0 || u % 2 != 0) throw ValidationError("elastic_work_operator_special: u must be a non-negative even integer");
    if (v % 2 == 0 || v <= u) throw ValidationError("elastic_work_operator_special: v must be an odd integer > u");
    const double m2sq = model.total_mass() * model.total_mass();
    const Operator& p1 = basis.p1;
    const Operator& p2 = basis.p2;
    Operator w = scaled(2.0 * (model.m1 - model.m2) / m2sq, p1 * p2) + scaled(2.0 * model.m1 / m2sq, p2 * p2) -
                 scaled(2.0 * model.m2 / m2sq, p1 * p1);
    return Operator(0.5 * (w.matrix() + w.matrix().adjoint()));
}

Operator elastic_work_operator_cm_rel(const ElasticModel& model, const TwoParticleBasis& basis) {
    const double mu = model.reduced_mass();
    const Operator p_cm = basis.p1 + basis.p2;
    const Operator p_r = scaled(mu / model.m2, basis.p2) - scaled(mu / model.m1, basis.p1);
    Operator w = scaled(2.0 / model.total_mass(), p_cm * p_r);
    return Operator(0.5 * (w.matrix() + w.matrix().adjoint()));
}

Operator elastic_work_operator(const ElasticModel& model, const TwoTimeWindow& window, const TwoParticleBasis& basis) {
    const Operator xr = basis.x2 - basis.x1;
    auto kinetic = [&](double t) {
        const auto [a, b, c] = elastic_p1_coefficients(model, t);
        const Operator p1t = scaled(a, basis.p1) + scaled(b, basis.p2) + scaled(c, xr);
        return scaled(1.0 / (2.0 * model.m1), p1t * p1t);
    };
    return kinetic(window.t2()) - kinetic(window.t1());
}

double elastic_work_eigenvalue(const ElasticModel& model, double p1, double p2) {
    const double m2sq = model.total_mass() * model.total_mass();
    return 2.0 * ((model.m1 - model.m2) / m2sq * p1 * p2 + model.m1 / m2sq * p2 * p2 - model.m2 / m2sq * p1 * p1);
}

Operator elastic_hamiltonian(const ElasticModel& model, const TwoParticleBasis& basis) {
    const Operator xr = basis.x2 - basis.x1;
    return scaled(1.0 / (2.0 * model.m1), basis.p1 * basis.p1) + scaled(1.0 / (2.0 * model.m2), basis.p2 * basis.p2) +
           scaled(0.5 * model.k, xr * xr);
}

ElasticZeroWorkWindow elastic_zero_work_window(const ElasticModel& model) {
    const double w = model.omega();
    return {TwoTimeWindow(0.5 * std::numbers::pi / w, 1.5 * std::numbers::pi / w),
            -2.0 * model.reduced_mass() * w / model.total_mass(),
            "W = -(2 mu omega / M) P_cm X_r over [pi/2omega, 3pi/2omega]"};
}

Operator elastic_zero_work_operator(const ElasticModel& model, const TwoParticleBasis& basis) {
    const auto zw = elastic_zero_work_window(model);
    return scaled(zw.coefficient, anticommutator(basis.p1 + basis.p2, basis.x2 - basis.x1));
}

ZeroWorkStatistics elastic_zero_work_statistics(const ElasticModel& model, const GridSpec& grid, double d_p,
                                                double x_r0, double sigma_r, double hbar) {
    if (!(d_p > 0.0) || !(sigma_r > 0.0)) {
        throw ValidationError("elastic_zero_work_statistics: widths must be positive");
    }
    const Eigen::Index n = grid.size();
    const double big_m = model.total_mass();
    const double sigma_cm = hbar / (2.0 * d_p);
    const RealVector x = grid.positions();

    // ψ(x1, x2) as an n×n matrix, particle 1 on rows.
    Matrix psi(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double x_cm = (model.m1 * x(i) + model.m2 * x(j)) / big_m;
            const double x_r = x(j) - x(i) - x_r0;
            psi(i, j) = std::exp(-x_cm * x_cm / (4.0 * sigma_cm * sigma_cm) - x_r * x_r / (4.0 * sigma_r * sigma_r));
        }
    }
    psi /= psi.norm();
    const double edge = std::max({psi.row(0).cwiseAbs().maxCoeff(), psi.row(n - 1).cwiseAbs().maxCoeff(),
                                  psi.col(0).cwiseAbs().maxCoeff(), psi.col(n - 1).cwiseAbs().maxCoeff()});
    if (edge > 1e-8) throw ValidationError("elastic_zero_work_statistics: state does not fit on the grid");

    const Matrix d = momentum_operator(grid, hbar).matrix();
    const Matrix dt = d.transpose();
    const auto xd = x.cast<Complex>().asDiagonal();

    auto apply_p1t = [&](const Matrix& s, double t) -> Matrix {
        const auto [a, b, c] = elastic_p1_coefficients(model, t);
        return a * (d * s) + b * (s * dt) + c * (s * xd - xd * s);
    };
    auto apply_k1 = [&](const Matrix& s, double t) -> Matrix {
        return apply_p1t(apply_p1t(s, t), t) / (2.0 * model.m1);
    };

    const auto zw = elastic_zero_work_window(model);
    const Matrix w_psi = apply_k1(psi, zw.window.t2()) - apply_k1(psi, zw.window.t1());
    const double mean = (psi.conjugate().cwiseProduct(w_psi)).sum().real();
    const double second = w_psi.squaredNorm();
    const double sigma = std::sqrt(std::max(0.0, second - mean * mean));
    const double bound = std::abs(zw.coefficient) * d_p * std::sqrt(x_r0 * x_r0 + sigma_r * sigma_r);
    return {mean, sigma, bound};
}

double gaussian_entanglement_alpha(double m1, double m2) {
    if (!(m1 > 0.0) || !(m2 > 0.0)) throw ValidationError("gaussian_entanglement_alpha: masses must be positive");
    return 0.5 * (m2 - m1) / (m1 + m2);
}

Operator displacement_operator(double mass, const TwoTimeWindow& window, const GridSpec& grid, double hbar) {
    if (!(mass > 0.0)) throw ValidationError("displacement_operator: mass must be positive");
    Operator d = momentum_function_operator(
        grid, [&](double p) { return Complex(displacement_eigenvalue(mass, window, p)); }, hbar);
    return Operator(0.5 * (d.matrix() + d.matrix().adjoint()));
}

double displacement_eigenvalue(double mass, const TwoTimeWindow& window, double p) {
    return p * window.duration() / mass;
}

double ehrenfest_time(const GaussianPacket& packet, double mass, double hbar) {
    return 2.0 * mass * packet.sigma_x * packet.sigma_x / hbar;
}

double bohmian_trajectory(const GaussianPacket& packet, double mass, double x_init, double t, double hbar) {
    if (t < 0.0) throw ValidationError("bohmian_trajectory: t must be non-negative");
    const double r = t / ehrenfest_time(packet, mass, hbar);
    return packet.x0 + packet.p0 * t / mass + (x_init - packet.x0) * std::sqrt(1.0 + r * r);
}

double bohmian_velocity(const GaussianPacket& packet, double mass, double x_init, double t, double hbar) {
    if (t < 0.0) throw ValidationError("bohmian_velocity: t must be non-negative");
    const double t_e = ehrenfest_time(packet, mass, hbar);
    const double r = t / t_e;
    return packet.p0 / mass + (x_init - packet.x0) * (r / t_e) / std::sqrt(1.0 + r * r);
}

SpinModel::SpinModel(double omega_) : omega(omega_) {
    if (!(omega > 0.0)) throw ValidationError("SpinModel: omega must be positive");
}

SpinOperators spin_operators(double hbar) {
    Matrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    sy << 0.0, -kI, kI, 0.0;
    sz << 1.0, 0.0, 0.0, -1.0;
    return {Operator(0.5 * hbar * sx), Operator(0.5 * hbar * sy), Operator(0.5 * hbar * sz)};
}

Operator spin_propagator(const SpinModel& model, double t) {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::exp(-kI * model.omega * t / 2.0);
    u(1, 1) = std::exp(kI * model.omega * t / 2.0);
    return Operator(std::move(u));
}

Operator spin_delta_sy_operator(const SpinModel& model, double hbar) {
    (void)model;
    Matrix m(2, 2);
    m << 0.0, Complex(1.0, 1.0), Complex(1.0, -1.0), 0.0;
    return Operator(0.5 * hbar * m);
}

}  // namespace qwork
