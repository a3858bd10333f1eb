#pragma once

// Two-point-measurement (TPM) protocols: measure at t1, collapse to a
// resolution-width Gaussian, evolve, measure again at t2 and take the
// difference of outcome energies.
//
// TPM_x measures position (potential energy mgx), TPM_p measures momentum
// (kinetic energy p²/2m). Ideal-resolution limits are separate analytic
// entry points; zero resolutions are never stored.

#include <array>
#include <cstdint>

#include "qwork/distributions.hpp"
#include "qwork/models.hpp"

namespace qwork {

struct MeasurementResolution {
    MeasurementResolution(double d_x, double d_p);

    double d_x;
    double d_p;
};

enum class TpmProtocol { position, momentum };
enum class MeasuredVariable { x, p };

const char* to_string(TpmProtocol protocol);

/// Width of a free Gaussian of initial width w after time t:
/// w sqrt(1 + (ħt/2mw²)²).
double spread_width(double width, double mass, double t, double hbar = 1.0);

/// Density of the first outcome at t1 for the Gaussian preparation.
GaussianDensity tpm_first_outcome_density(const GravityModel& model, const GaussianPacket& packet, double t1,
                                          MeasuredVariable variable, double hbar = 1.0);

/// Density of the second outcome given the first, after evolving the
/// collapsed state over δt.
GaussianDensity tpm_conditional_density(const GravityModel& model, double outcome, const TwoTimeWindow& window,
                                        const MeasurementResolution& res, MeasuredVariable variable,
                                        double hbar = 1.0);

/// Largest momentum resolution for which the d_p -> 0 TPM_p result is
/// accepted: 1e-3 σ_p.
double tpm_momentum_resolution_limit(const GaussianPacket& packet, double hbar = 1.0);

/// Work density of either protocol: center f_g Δx^[r] with
/// Δx^[x] = -gδt²/2, σ^[x] = |f_g| d_x(δt) and
/// Δx^[p] = p0δt/m - g(t2² - t1²)/2, σ^[p] = σ_p |g| δt.
/// TPM_p rejects d_p above tpm_momentum_resolution_limit.
WorkDistribution tpm_work_distribution(const GravityModel& model, const GaussianPacket& packet,
                                       const TwoTimeWindow& window, const MeasurementResolution& res,
                                       TpmProtocol protocol, double hbar = 1.0);

/// Leading d_x -> 0 behaviour of the TPM_x work width, |f_g| ħδt/(2m d_x).
double tpm_position_width_asymptote(const GravityModel& model, const TwoTimeWindow& window, double d_x,
                                    double hbar = 1.0);

/// Simulates the full measurement chain n_trials times. Trial i draws from
/// its own counter stream (seed, i), so results are independent of the
/// order in which trials run.
SampleSet tpm_monte_carlo(const GravityModel& model, const GaussianPacket& packet, const TwoTimeWindow& window,
                          const MeasurementResolution& res, TpmProtocol protocol, std::size_t n_trials,
                          std::uint64_t seed, double hbar = 1.0);

/// τ -> 0 limit of the TPM mean work over [t, t+τ] divided by τ.
double tpm_power_limit(const GravityModel& model, double p0, double t, TpmProtocol protocol);

/// Free-particle displacement x_f - x_i from position measurements at 0 and
/// t: center 0, width d_x(t).
GaussianDensity tpm_displacement_distribution(const GaussianPacket& packet, double mass, double t,
                                              const MeasurementResolution& res, double hbar = 1.0);

SampleSet tpm_displacement_monte_carlo(const GaussianPacket& packet, double mass, double t,
                                       const MeasurementResolution& res, std::size_t n_trials, std::uint64_t seed,
                                       double hbar = 1.0);

/// S_y measured at 0 and π/2ω. Outcome index 0 is ε = +1, index 1 is ε = -1.
struct SpinTpmJoint {
    std::array<double, 2> first;                  ///< p(ε)
    std::array<std::array<double, 2>, 2> joint;   ///< p(ε, ε') = p(ε'|ε) p(ε)

    double probability(int eps, int eps_prime) const;
    /// Σ (ε'ħ/2)(εħ/2) p(ε, ε').
    double product_mean(double hbar = 1.0) const;
    /// Σ (ε' - ε)(ħ/2) p(ε, ε').
    double difference_mean(double hbar = 1.0) const;
};

/// Born-rule joint distribution for a normalized qubit preparation.
SpinTpmJoint tpm_spin_joint(const SpinModel& model, const Ket& prep, double hbar = 1.0);

}  // namespace qwork
