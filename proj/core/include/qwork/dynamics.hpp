#pragma once

// Time evolution: split-operator propagation on grids, the factorized
// uniform-field propagator, Heisenberg conjugation and time averaging.

#include <functional>

#include "qwork/core.hpp"
#include "qwork/grid.hpp"

namespace qwork {

/// Ordered pair of instants labeling a two-time quantity; t2 >= t1.
class TwoTimeWindow {
public:
    TwoTimeWindow(double t1, double t2);

    double t1() const { return t1_; }
    double t2() const { return t2_; }
    double duration() const { return t2_ - t1_; }
    bool degenerate() const { return t2_ == t1_; }
    /// Both instants shifted by s.
    TwoTimeWindow shifted(double s) const { return {t1_ + s, t2_ + s}; }

private:
    double t1_;
    double t2_;
};

using Potential = std::function<double(double)>;
using UnitaryFamily = std::function<Operator(double)>;

/// Strang splitting e^{-iV dt/2ħ} e^{-iP² dt/2mħ} e^{-iV dt/2ħ}, n_steps times
/// with dt = t/n_steps. The norm is checked after every step and the edge
/// amplitude at the end; violations throw NumericalError.
WaveFunction1D split_operator_evolve(const WaveFunction1D& psi, const Potential& potential, double mass, double t,
                                     int n_steps, double hbar = 1.0);

/// e^{-iΘ_t} e^{-imgtX/ħ} e^{-iP²t/2mħ} e^{igt²P/2ħ} with Θ_t = mg²t³/6ħ,
/// evolving under H = P²/2m + mgX.
WaveFunction1D apply_gravity_propagator(const WaveFunction1D& psi, double t, double mass, double g,
                                        double hbar = 1.0);
/// The same product as a dense grid operator.
Operator gravity_propagator_factorized(double t, double mass, double g, const GridSpec& grid, double hbar = 1.0);

/// e^{-iht/ħ} for Hermitian h.
Operator unitary_from_hamiltonian(const Operator& h, double t, double hbar = 1.0);

/// u† o u: the Heisenberg image of o at the time u propagates to.
Operator heisenberg_evolve(const Operator& o, const Operator& u);

/// Heisenberg image difference φ_{t2}(o) - φ_{t1}(o) = u2† o u2 - u1† o u1.
Operator two_time_difference(const Operator& o, const Operator& u1, const Operator& u2);

struct TimeMixtureState {
    DensityOperator rho;
    TwoTimeWindow window;
    int n_slices;
};

/// (1/δt) ∫ u_t ρ0 u_t† dt over the window by the trapezoid rule on n_slices
/// intervals, renormalized to unit trace. A degenerate window is an error.
TimeMixtureState time_average_map(const DensityOperator& rho0, const UnitaryFamily& u_of_t,
                                  const TwoTimeWindow& window, int n_slices = 256);

/// Heisenberg-side average (1/δt) ∫ u_t† o u_t dt, same quadrature.
Operator time_average_operator(const Operator& o, const UnitaryFamily& u_of_t, const TwoTimeWindow& window,
                               int n_slices = 256);

}  // namespace qwork
