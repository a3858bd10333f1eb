#pragma once

// Statistics of two-time observables: work distributions built from the
// observable, two-time means and pseudo-states, the work-energy uncertainty
// relation, steering of work through an entangled ancilla and conservation
// checks.

#include <vector>

#include "qwork/distributions.hpp"
#include "qwork/models.hpp"

namespace qwork {

/// Push-forward of the momentum density 𝒢(p0, ħ/2σ_x) through w_p(t2, t1):
/// 𝒢(w_{p0}, σ_p |g| δt). Point mass when δt = 0 or g = 0.
WorkDistribution work_distribution_observable(const GravityModel& model, const GaussianPacket& packet,
                                              const TwoTimeWindow& window, double hbar = 1.0);

/// Free-particle displacement from the observable P δt/m:
/// 𝒢(p0 δt/m, σ_p δt/m). Point mass when δt = 0.
TwoTimeDistribution displacement_distribution_observable(const GaussianPacket& packet, double mass,
                                                         const TwoTimeWindow& window, double hbar = 1.0);

/// Raw moment <w^k>. Gaussians support k <= 4.
double work_moments(const WorkDistribution& dist, int k);

// ---------------------------------------------------------------------------
// Two-time means.

/// Γ_a(t1) = {ρ0, Λ_a(t1)}/2𝔭 with weight 𝔭 = Tr[Λ_a(t1) ρ0]. Hermitian with
/// unit trace but not necessarily positive.
struct PseudoState {
    Operator op;
    double weight;

    double min_eigenvalue() const;
};

/// Λ_a(t1) = heisenberg_evolve(projector, t1_unitary). Throws when the
/// projector is not idempotent or the weight vanishes.
PseudoState gamma_pseudo_state(const DensityOperator& rho0, const Operator& projector, const Operator& t1_unitary);

/// Tr[½{A(t1), B(t2)} ρ0] with A(t1) = u1† a u1 and B(t2) = u2† b u2.
double two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                     const DensityOperator& rho0);

/// Σ_{a,b} a b 𝔭(b, t2 | a, t1) 𝔭(a, t1) for projective measurements of A
/// at t1 and B at t2.
double tpm_two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                         const DensityOperator& rho0);

/// Σ_{a,b} a b Tr[Λ_b(t2) Γ_a(t1)] 𝔭(a, t1); equal to two_time_mean.
double pseudo_joint_two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                                  const DensityOperator& rho0);

// ---------------------------------------------------------------------------
// Uncertainty relation σ_W (σ_{H1} + σ_{H2}) >= |<[H1, H2]>|.

struct UncertaintyCheck {
    double lhs;
    double rhs;
    bool satisfied;
};

/// Requires w = h2 - h1 within tol::reconstruction.
UncertaintyCheck uncertainty_relation_check(const Operator& w, const Operator& h1, const Operator& h2,
                                            const DensityOperator& rho0);

// ---------------------------------------------------------------------------
// Steering: |Ψ> = α|a>|w> + β|ā>|w̄> with Alice holding the ancilla.

class SteeringEnsemble {
public:
    SteeringEnsemble(Complex alpha, Complex beta, double work_a, double work_abar);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    double work_a() const { return work_a_; }
    double work_abar() const { return work_abar_; }

    /// The joint ket on ancilla ⊗ work-branch space, ancilla first.
    Ket state() const;
    /// 𝟙 ⊗ diag(w, w̄).
    Operator work_operator() const;

private:
    Complex alpha_;
    Complex beta_;
    double work_a_;
    double work_abar_;
};

enum class AliceOutcome { a, a_bar };

struct SteeringOutcome {
    double work;
    double probability;
    /// σ_W in the collapsed state.
    double sigma;
};

SteeringOutcome steering_collapse(const SteeringEnsemble& ensemble, AliceOutcome outcome);

/// σ_W of Bob's work in |Ψ> before Alice measures.
double steering_pre_measurement_sigma(const SteeringEnsemble& ensemble);

// ---------------------------------------------------------------------------
// Conservation.

struct ConservationResult {
    double mean;
    double sigma;
    /// max |ΔH_ij|.
    double operator_residual;
};

/// ΔH = φ_{t2}(H) - φ_{t1}(H) in ρ0. Throws when either unitary fails to
/// commute with h_total.
ConservationResult conservation_element_of_reality(const DensityOperator& rho0, const Operator& h_total,
                                                   const Operator& u_t1, const Operator& u_t2);

/// Expectation values along a split-operator run from 0 to t1 and t2.
struct EnergyBalance {
    double kinetic_t1;
    double kinetic_t2;
    double potential_t1;
    double potential_t2;

    double delta_kinetic() const { return kinetic_t2 - kinetic_t1; }
    double delta_potential() const { return potential_t2 - potential_t1; }
    double delta_total() const { return delta_kinetic() + delta_potential(); }
};

/// Propagates psi0 to t1 and on to t2 with about steps_per_unit_time Strang
/// steps per unit time in each segment.
EnergyBalance grid_energy_balance(const WaveFunction1D& psi0, const Potential& potential, double mass,
                                  const TwoTimeWindow& window, int steps_per_unit_time, double hbar = 1.0);

// ---------------------------------------------------------------------------
// Time-averaged projectors.

/// ‖W R - w̄ R‖_max with w̄ = Tr(W R)/Tr(R): zero when R lies in one
/// eigenspace of W.
double eigenstate_residual(const Operator& w, const Operator& r);

/// max |Σ_π Φ(Λ_π) - 𝟙| over the spectral projectors of h.
double time_averaged_completeness_residual(const std::vector<SpectralComponent>& components,
                                           const UnitaryFamily& u_of_t, const TwoTimeWindow& window,
                                           int n_slices = 256);

}  // namespace qwork
