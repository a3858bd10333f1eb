#include "qwork/work_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwork/error.hpp"

namespace qwork {

namespace {

double real_trace_product(const Operator& a, const Operator& b) {
    return (a.matrix().transpose().cwiseProduct(b.matrix())).sum().real();
}

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
    if (a.dim() != b.dim()) throw DimensionError(std::string(what) + ": dimension mismatch");
}

int steps_for(double t, int steps_per_unit_time) {
    return std::max(1, static_cast<int>(std::ceil(t * steps_per_unit_time)));
}

double potential_expectation(const WaveFunction1D& psi, const Potential& potential) {
    const GridSpec& grid = psi.grid();
    double acc = 0.0;
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
        acc += potential(grid.position(i)) * std::norm(psi.amplitudes()(static_cast<Eigen::Index>(i)));
    }
    return acc * grid.dx();
}

}  // namespace

WorkDistribution work_distribution_observable(const GravityModel& model, const GaussianPacket& packet,
                                              const TwoTimeWindow& window, double hbar) {
    const double center = gravity_work_eigenvalue(model, window, packet.p0);
    return make_gaussian_or_point(center, packet.sigma_p(hbar) * std::abs(model.g) * window.duration(), window);
}

TwoTimeDistribution displacement_distribution_observable(const GaussianPacket& packet, double mass,
                                                         const TwoTimeWindow& window, double hbar) {
    if (!(mass > 0.0)) throw ValidationError("displacement_distribution_observable: mass must be positive");
    const double dt = window.duration();
    return make_gaussian_or_point(packet.p0 * dt / mass, packet.sigma_p(hbar) * dt / mass, window);
}

double work_moments(const WorkDistribution& dist, int k) {
    if (k < 1) throw ValidationError("work_moments: k must be >= 1");
    struct Visitor {
        int k;
        double operator()(const GaussianDensity& g) const {
            const double m = g.center();
            const double s2 = g.width() * g.width();
            switch (k) {
                case 1: return m;
                case 2: return m * m + s2;
                case 3: return m * m * m + 3.0 * m * s2;
                case 4: return m * m * m * m + 6.0 * m * m * s2 + 3.0 * s2 * s2;
                default: throw ValidationError("work_moments: Gaussian moments supported for k <= 4");
            }
        }
        double operator()(const PointMass& p) const { return std::pow(p.value, k); }
        double operator()(const DiscreteDistribution& d) const {
            double acc = 0.0;
            for (std::size_t i = 0; i < d.values().size(); ++i) {
                acc += d.probabilities()[i] * std::pow(d.values()[i], k);
            }
            return acc;
        }
    };
    return std::visit(Visitor{k}, dist.density);
}

double PseudoState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

PseudoState gamma_pseudo_state(const DensityOperator& rho0, const Operator& projector, const Operator& t1_unitary) {
    require_same_dim(rho0.op(), projector, "gamma_pseudo_state");
    if (!projector.is_hermitian() || !projector.is_idempotent()) {
        throw ValidationError("gamma_pseudo_state: argument is not an orthogonal projector");
    }
    const Operator lambda = heisenberg_evolve(projector, t1_unitary);
    const double weight = real_trace_product(lambda, rho0.op());
    if (!(weight > tol::psd)) throw ValidationError("gamma_pseudo_state: outcome has vanishing probability");
    return {anticommutator(rho0.op(), lambda) * Complex(1.0 / weight, 0.0), weight};
}

double two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                     const DensityOperator& rho0) {
    require_same_dim(a, rho0.op(), "two_time_mean");
    require_same_dim(b, rho0.op(), "two_time_mean");
    const Operator c = anticommutator(heisenberg_evolve(a, u1), heisenberg_evolve(b, u2));
    return real_trace_product(c, rho0.op());
}

double tpm_two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                         const DensityOperator& rho0) {
    require_same_dim(a, rho0.op(), "tpm_two_time_mean");
    require_same_dim(b, rho0.op(), "tpm_two_time_mean");
    const auto a_spec = hermitian_eigensystem(a);
    const auto b_spec = hermitian_eigensystem(b);
    double acc = 0.0;
    for (const auto& ca : a_spec) {
        const Operator la = heisenberg_evolve(ca.projector, u1);
        const Operator collapsed = la * rho0.op() * la;
        for (const auto& cb : b_spec) {
            const Operator lb = heisenberg_evolve(cb.projector, u2);
            acc += ca.eigenvalue * cb.eigenvalue * real_trace_product(lb, collapsed);
        }
    }
    return acc;
}

double pseudo_joint_two_time_mean(const Operator& a, const Operator& b, const Operator& u1, const Operator& u2,
                                  const DensityOperator& rho0) {
    require_same_dim(a, rho0.op(), "pseudo_joint_two_time_mean");
    require_same_dim(b, rho0.op(), "pseudo_joint_two_time_mean");
    const auto a_spec = hermitian_eigensystem(a);
    const auto b_spec = hermitian_eigensystem(b);
    double acc = 0.0;
    for (const auto& ca : a_spec) {
        const double weight = real_trace_product(heisenberg_evolve(ca.projector, u1), rho0.op());
        if (!(weight > tol::psd)) continue;
        const PseudoState gamma = gamma_pseudo_state(rho0, ca.projector, u1);
        for (const auto& cb : b_spec) {
            const Operator lb = heisenberg_evolve(cb.projector, u2);
            acc += ca.eigenvalue * cb.eigenvalue * real_trace_product(lb, gamma.op) * gamma.weight;
        }
    }
    return acc;
}

UncertaintyCheck uncertainty_relation_check(const Operator& w, const Operator& h1, const Operator& h2,
                                            const DensityOperator& rho0) {
    require_same_dim(w, rho0.op(), "uncertainty_relation_check");
    require_same_dim(h1, rho0.op(), "uncertainty_relation_check");
    require_same_dim(h2, rho0.op(), "uncertainty_relation_check");
    const double scale = std::max({1.0, h1.max_abs(), h2.max_abs()});
    if (max_abs_difference(w, h2 - h1) > tol::reconstruction * scale) {
        throw ValidationError("uncertainty_relation_check: w must equal h2 - h1");
    }
    const double lhs = uncertainty(w, rho0) * (uncertainty(h1, rho0) + uncertainty(h2, rho0));
    const double rhs = std::abs(commutator_expectation(h1, h2, rho0));
    return {lhs, rhs, lhs >= rhs - tol::reconstruction};
}

SteeringEnsemble::SteeringEnsemble(Complex alpha, Complex beta, double work_a, double work_abar)
    : alpha_(alpha), beta_(beta), work_a_(work_a), work_abar_(work_abar) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::norm) {
        throw ValidationError("SteeringEnsemble: |alpha|^2 + |beta|^2 must be 1");
    }
    if (!std::isfinite(work_a) || !std::isfinite(work_abar)) {
        throw ValidationError("SteeringEnsemble: branch work values must be finite");
    }
}

Ket SteeringEnsemble::state() const {
    Ket psi = Ket::Zero(4);
    psi(0) = alpha_;
    psi(3) = beta_;
    return psi;
}

Operator SteeringEnsemble::work_operator() const {
    RealVector w(2);
    w << work_a_, work_abar_;
    return tensor_product(Operator::identity(2), Operator::diagonal(w));
}

SteeringOutcome steering_collapse(const SteeringEnsemble& ensemble, AliceOutcome outcome) {
    const double total = std::norm(ensemble.alpha()) + std::norm(ensemble.beta());
    const double p_a = std::norm(ensemble.alpha()) / total;
    const bool is_a = outcome == AliceOutcome::a;
    const double probability = is_a ? p_a : 1.0 - p_a;
    const double work = is_a ? ensemble.work_a() : ensemble.work_abar();
    if (probability == 0.0) return {work, 0.0, 0.0};

    Ket ancilla = Ket::Zero(2);
    ancilla(is_a ? 0 : 1) = 1.0;
    const Operator alice = tensor_product(Operator::projector(ancilla), Operator::identity(2));
    const Ket collapsed = alice.apply(ensemble.state());
    const double sigma = uncertainty(ensemble.work_operator(), DensityOperator::pure(collapsed));
    return {work, probability, sigma};
}

double steering_pre_measurement_sigma(const SteeringEnsemble& ensemble) {
    return uncertainty(ensemble.work_operator(), DensityOperator::pure(ensemble.state()));
}

ConservationResult conservation_element_of_reality(const DensityOperator& rho0, const Operator& h_total,
                                                   const Operator& u_t1, const Operator& u_t2) {
    require_same_dim(h_total, rho0.op(), "conservation_element_of_reality");
    require_same_dim(u_t1, h_total, "conservation_element_of_reality");
    require_same_dim(u_t2, h_total, "conservation_element_of_reality");
    const double scale = std::max(1.0, h_total.max_abs());
    for (const Operator* u : {&u_t1, &u_t2}) {
        if (commutator(*u, h_total).max_abs() > tol::reconstruction * scale) {
            throw ValidationError("conservation_element_of_reality: propagator is not generated by h_total");
        }
    }
    const Operator delta = two_time_difference(h_total, u_t1, u_t2);
    return {expectation(delta, rho0).real(), uncertainty(delta, rho0), delta.max_abs()};
}

EnergyBalance grid_energy_balance(const WaveFunction1D& psi0, const Potential& potential, double mass,
                                  const TwoTimeWindow& window, int steps_per_unit_time, double hbar) {
    if (steps_per_unit_time < 1) throw ValidationError("grid_energy_balance: steps_per_unit_time must be >= 1");
    if (!(mass > 0.0)) throw ValidationError("grid_energy_balance: mass must be positive");
    const auto kinetic = [mass](double p) { return p * p / (2.0 * mass); };

    const WaveFunction1D psi1 = split_operator_evolve(psi0, potential, mass, window.t1(),
                                                      steps_for(window.t1(), steps_per_unit_time), hbar);
    const WaveFunction1D psi2 = split_operator_evolve(psi1, potential, mass, window.duration(),
                                                      steps_for(window.duration(), steps_per_unit_time), hbar);
    return {psi1.momentum_expectation(kinetic, hbar), psi2.momentum_expectation(kinetic, hbar),
            potential_expectation(psi1, potential), potential_expectation(psi2, potential)};
}

double eigenstate_residual(const Operator& w, const Operator& r) {
    require_same_dim(w, r, "eigenstate_residual");
    const Complex tr = r.trace();
    if (std::abs(tr) <= tol::trace) throw ValidationError("eigenstate_residual: operator has vanishing trace");
    const Complex mean = (w * r).trace() / tr;
    return (w * r - mean * r).max_abs();
}

double time_averaged_completeness_residual(const std::vector<SpectralComponent>& components,
                                           const UnitaryFamily& u_of_t, const TwoTimeWindow& window,
                                           int n_slices) {
    if (components.empty()) throw ValidationError("time_averaged_completeness_residual: no components");
    const Eigen::Index dim = components.front().projector.dim();
    Operator sum = Operator::zero(dim);
    for (const auto& c : components) sum += time_average_operator(c.projector, u_of_t, window, n_slices);
    return max_abs_difference(sum, Operator::identity(dim));
}

}  // namespace qwork
