#pragma once

// Closed-form two-time operators for four solvable systems: a particle in a
// uniform gravitational field, two particles coupled by a spring, a free
// particle's displacement and a precessing spin-1/2.

#include <cstddef>
#include <string>
#include <vector>

#include "qwork/core.hpp"
#include "qwork/dynamics.hpp"
#include "qwork/grid.hpp"

namespace qwork {

// ---------------------------------------------------------------------------
// Uniform gravity, H = P²/2m + mgX.

struct GravityModel {
    GravityModel(double m, double g);

    double m;
    double g;

    /// f_g = -mg.
    double force() const { return -m * g; }
};

struct WorkSpectrumEntry {
    double eigenvalue;
    std::vector<double> label;  ///< (p) or (p1, p2)
    TwoTimeWindow window;
};

/// -g δt P + (mg²/2)(t2² - t1²) 𝟙, diagonal in the DFT momentum basis.
Operator gravity_work_operator(const GravityModel& model, const TwoTimeWindow& window, const GridSpec& grid,
                               double hbar = 1.0);

/// w_p(t2, t1) = -g(t2 - t1)p + mg²(t2² - t1²)/2.
double gravity_work_eigenvalue(const GravityModel& model, const TwoTimeWindow& window, double p);

/// One entry per DFT momentum of the grid.
std::vector<WorkSpectrumEntry> gravity_work_spectrum(const GravityModel& model, const TwoTimeWindow& window,
                                                     const GridSpec& grid, double hbar = 1.0);

/// The momentum mg(t1 + t2)/2 whose work eigenvalue vanishes.
double gravity_zero_work_momentum(const GravityModel& model, const TwoTimeWindow& window);

/// <ℙ(t)> = f_g (p0/m - g t) for a state with <P> = p0.
double gravity_power_expectation(const GravityModel& model, double p0, double t);

/// <ψ|[V(t1), V(t2)]|ψ> with V(t) = mg(X + Pt/m - gt²/2), evaluated on the
/// grid by spectral differentiation.
Complex gravity_potential_commutator(const GravityModel& model, const TwoTimeWindow& window,
                                     const WaveFunction1D& psi, double hbar = 1.0);

// ---------------------------------------------------------------------------
// Elastic pair, H = P1²/2m1 + P2²/2m2 + k(X2 - X1)²/2, with particle 1 as the
// system.

struct ElasticModel {
    ElasticModel(double m1, double m2, double k);

    double m1;
    double m2;
    double k;

    double total_mass() const { return m1 + m2; }
    double reduced_mass() const { return m1 * m2 / (m1 + m2); }
    double omega() const;
    /// π/ω.
    double half_period() const;
};

/// P1(t) = a P1 + b P2 + c (X2 - X1).
struct ElasticP1Coefficients {
    double a;
    double b;
    double c;
};

ElasticP1Coefficients elastic_p1_coefficients(const ElasticModel& model, double t);

/// Position and momentum operators of both particles on a tensor product of
/// two copies of a small periodic grid (particle 1 is the slow index).
struct TwoParticleBasis {
    TwoParticleBasis(GridSpec grid, double hbar = 1.0);

    GridSpec grid;
    double hbar;
    Operator p1;
    Operator p2;
    Operator x1;
    Operator x2;

    Eigen::Index dim() const { return p1.dim(); }
    /// Momentum eigenvector |p_{j1}>|p_{j2}>.
    Ket momentum_ket(std::size_t j1, std::size_t j2) const;
    double momentum(std::size_t j) const;
};

/// 2[((m1-m2)/M²)P1P2 + (m1/M²)P2² - (m2/M²)P1²], the work done on particle 1
/// over [uτ, vτ] for even u, odd v > u >= 0.
Operator elastic_work_operator_special(const ElasticModel& model, int u, int v, const TwoParticleBasis& basis);

/// (2/M) P_cm P_r with P_cm = P1 + P2 and P_r = μ(P2/m2 - P1/m1).
Operator elastic_work_operator_cm_rel(const ElasticModel& model, const TwoParticleBasis& basis);

/// K1(t2) - K1(t1) with P1(t) assembled from elastic_p1_coefficients. Valid
/// at any window; no spectral claim is made for it.
Operator elastic_work_operator(const ElasticModel& model, const TwoTimeWindow& window, const TwoParticleBasis& basis);

double elastic_work_eigenvalue(const ElasticModel& model, double p1, double p2);

/// Total Hamiltonian on the basis.
Operator elastic_hamiltonian(const ElasticModel& model, const TwoParticleBasis& basis);

struct ElasticZeroWorkWindow {
    TwoTimeWindow window;  ///< [π/2ω, 3π/2ω]
    double coefficient;    ///< -2μω/M, multiplying P_cm X_r
    std::string description;
};

ElasticZeroWorkWindow elastic_zero_work_window(const ElasticModel& model);

/// coefficient · ½{P_cm, X_r}, the symmetrized product.
Operator elastic_zero_work_operator(const ElasticModel& model, const TwoParticleBasis& basis);

struct ZeroWorkStatistics {
    double mean;
    double sigma;
    /// |coefficient| d_p sqrt(x_r0² + σ_r²): σ_W for an exact cm/relative
    /// product state; vanishes with the surrogate width d_p.
    double width_bound;
};

/// Prepares ψ(x1, x2) = f(X_cm) g(X_r) on grid ⊗ grid, with f a zero-momentum
/// surrogate of momentum spread d_p and g a Gaussian of width sigma_r at
/// x_r0, and evaluates <W> and σ_W over the zero-work window without forming
/// dense operators.
ZeroWorkStatistics elastic_zero_work_statistics(const ElasticModel& model, const GridSpec& grid, double d_p,
                                                double x_r0, double sigma_r, double hbar = 1.0);

/// ½(m2 - m1)/(m1 + m2), the p_r p_cm cross-term coefficient of a product of
/// equal-width momentum Gaussians.
double gaussian_entanglement_alpha(double m1, double m2);

// ---------------------------------------------------------------------------
// Free-particle displacement δ(t2, t1) = X(t2) - X(t1) = P δt/m.

Operator displacement_operator(double mass, const TwoTimeWindow& window, const GridSpec& grid, double hbar = 1.0);
double displacement_eigenvalue(double mass, const TwoTimeWindow& window, double p);

/// t_E = 2mσ_x²/ħ.
double ehrenfest_time(const GaussianPacket& packet, double mass, double hbar = 1.0);
/// x0 + p0t/m + (x_init - x0) sqrt(1 + (ħt/2mσ_x²)²).
double bohmian_trajectory(const GaussianPacket& packet, double mass, double x_init, double t, double hbar = 1.0);
/// d/dt of bohmian_trajectory.
double bohmian_velocity(const GaussianPacket& packet, double mass, double x_init, double t, double hbar = 1.0);

// ---------------------------------------------------------------------------
// Spin-1/2 precession, H = ωS_z.

struct SpinModel {
    explicit SpinModel(double omega);
    double omega;
};

struct SpinOperators {
    Operator sx;
    Operator sy;
    Operator sz;
};

/// (ħ/2)σ_{x,y,z}.
SpinOperators spin_operators(double hbar = 1.0);
/// e^{-iωt S_z/ħ}.
Operator spin_propagator(const SpinModel& model, double t);
/// δS_y = S_y(π/2ω) - S_y(0) = (ħ/2)[[0, 1+i], [1-i, 0]].
Operator spin_delta_sy_operator(const SpinModel& model, double hbar = 1.0);

}  // namespace qwork
