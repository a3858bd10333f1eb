#include "qwork/tpm.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwork/error.hpp"
#include "qwork/random.hpp"

namespace qwork {

namespace {

constexpr Complex kI{0.0, 1.0};

// |y_ε> = (|0> + iε|1>)/√2 for index 0 (ε = +1) and 1 (ε = -1).
Ket sy_eigenket(int index) {
    const double eps = index == 0 ? 1.0 : -1.0;
    Ket v(2);
    v << 1.0, kI * eps;
    return v / std::numbers::sqrt2;
}

int eps_index(int eps) {
    if (eps == 1) return 0;
    if (eps == -1) return 1;
    throw ValidationError("SpinTpmJoint: eps must be +1 or -1");
}

}  // namespace

MeasurementResolution::MeasurementResolution(double d_x_, double d_p_) : d_x(d_x_), d_p(d_p_) {
    if (!(d_x > 0.0) || !(d_p > 0.0)) {
        throw ValidationError("MeasurementResolution: d_x and d_p must be positive; take ideal limits analytically");
    }
}

const char* to_string(TpmProtocol protocol) { return protocol == TpmProtocol::position ? "TPM_x" : "TPM_p"; }

double spread_width(double width, double mass, double t, double hbar) {
    const double r = hbar * t / (2.0 * mass * width * width);
    return width * std::sqrt(1.0 + r * r);
}

GaussianDensity tpm_first_outcome_density(const GravityModel& model, const GaussianPacket& packet, double t1,
                                          MeasuredVariable variable, double hbar) {
    if (variable == MeasuredVariable::x) {
        return {packet.x0 + packet.p0 * t1 / model.m - 0.5 * model.g * t1 * t1,
                spread_width(packet.sigma_x, model.m, t1, hbar)};
    }
    return {packet.p0 - model.m * model.g * t1, packet.sigma_p(hbar)};
}

GaussianDensity tpm_conditional_density(const GravityModel& model, double outcome, const TwoTimeWindow& window,
                                        const MeasurementResolution& res, MeasuredVariable variable, double hbar) {
    const double dt = window.duration();
    if (variable == MeasuredVariable::x) {
        return {outcome - 0.5 * model.g * dt * dt, spread_width(res.d_x, model.m, dt, hbar)};
    }
    return {outcome - model.m * model.g * dt, res.d_p};
}

double tpm_momentum_resolution_limit(const GaussianPacket& packet, double hbar) {
    return 1e-3 * packet.sigma_p(hbar);
}

WorkDistribution tpm_work_distribution(const GravityModel& model, const GaussianPacket& packet,
                                       const TwoTimeWindow& window, const MeasurementResolution& res,
                                       TpmProtocol protocol, double hbar) {
    const double dt = window.duration();
    const double f_g = model.force();
    if (protocol == TpmProtocol::position) {
        const double shift = -0.5 * model.g * dt * dt;
        return make_gaussian_or_point(f_g * shift, std::abs(f_g) * spread_width(res.d_x, model.m, dt, hbar), window);
    }
    if (res.d_p > tpm_momentum_resolution_limit(packet, hbar)) {
        throw ValidationError("tpm_work_distribution: TPM_p requires d_p <= 1e-3 sigma_p (got d_p = " +
                              std::to_string(res.d_p) + ")");
    }
    const double t1 = window.t1();
    const double t2 = window.t2();
    const double shift = packet.p0 * dt / model.m - 0.5 * model.g * (t2 * t2 - t1 * t1);
    return make_gaussian_or_point(f_g * shift, packet.sigma_p(hbar) * std::abs(model.g) * dt, window);
}

double tpm_position_width_asymptote(const GravityModel& model, const TwoTimeWindow& window, double d_x,
                                    double hbar) {
    if (!(d_x > 0.0)) throw ValidationError("tpm_position_width_asymptote: d_x must be positive");
    return std::abs(model.force()) * hbar * window.duration() / (2.0 * model.m * d_x);
}

SampleSet tpm_monte_carlo(const GravityModel& model, const GaussianPacket& packet, const TwoTimeWindow& window,
                          const MeasurementResolution& res, TpmProtocol protocol, std::size_t n_trials,
                          std::uint64_t seed, double hbar) {
    if (n_trials < 1) throw ValidationError("tpm_monte_carlo: n_trials must be >= 1");
    const MeasuredVariable var = protocol == TpmProtocol::position ? MeasuredVariable::x : MeasuredVariable::p;
    const GaussianDensity first = tpm_first_outcome_density(model, packet, window.t1(), var, hbar);

    SampleSet out{std::vector<double>(n_trials), seed, n_trials};
    for (std::size_t i = 0; i < n_trials; ++i) {
        CounterStream rng(seed, i);
        const double r_i = rng.normal(first.center(), first.width());
        const GaussianDensity second = tpm_conditional_density(model, r_i, window, res, var, hbar);
        const double r_f = rng.normal(second.center(), second.width());
        if (protocol == TpmProtocol::position) {
            // Work is the drop in potential energy mg x between the outcomes.
            out.values[i] = model.m * model.g * (r_i - r_f);
        } else {
            out.values[i] = (r_f * r_f - r_i * r_i) / (2.0 * model.m);
        }
    }
    return out;
}

double tpm_power_limit(const GravityModel& model, double p0, double t, TpmProtocol protocol) {
    if (protocol == TpmProtocol::position) return 0.0;
    return model.force() * (p0 / model.m - model.g * t);
}

GaussianDensity tpm_displacement_distribution(const GaussianPacket& packet, double mass, double t,
                                              const MeasurementResolution& res, double hbar) {
    (void)packet;
    if (!(mass > 0.0)) throw ValidationError("tpm_displacement_distribution: mass must be positive");
    return {0.0, spread_width(res.d_x, mass, t, hbar)};
}

SampleSet tpm_displacement_monte_carlo(const GaussianPacket& packet, double mass, double t,
                                       const MeasurementResolution& res, std::size_t n_trials, std::uint64_t seed,
                                       double hbar) {
    if (n_trials < 1) throw ValidationError("tpm_displacement_monte_carlo: n_trials must be >= 1");
    if (!(mass > 0.0)) throw ValidationError("tpm_displacement_monte_carlo: mass must be positive");
    const double spread = spread_width(res.d_x, mass, t, hbar);
    SampleSet out{std::vector<double>(n_trials), seed, n_trials};
    for (std::size_t i = 0; i < n_trials; ++i) {
        CounterStream rng(seed, i);
        const double x_i = rng.normal(packet.x0, packet.sigma_x);
        const double x_f = rng.normal(x_i, spread);
        out.values[i] = x_f - x_i;
    }
    return out;
}

double SpinTpmJoint::probability(int eps, int eps_prime) const {
    return joint[static_cast<std::size_t>(eps_index(eps))][static_cast<std::size_t>(eps_index(eps_prime))];
}

double SpinTpmJoint::product_mean(double hbar) const {
    double acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double ea = a == 0 ? 1.0 : -1.0;
            const double eb = b == 0 ? 1.0 : -1.0;
            acc += (eb * hbar / 2.0) * (ea * hbar / 2.0) * joint[a][b];
        }
    }
    return acc;
}

double SpinTpmJoint::difference_mean(double hbar) const {
    double acc = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double ea = a == 0 ? 1.0 : -1.0;
            const double eb = b == 0 ? 1.0 : -1.0;
            acc += (eb - ea) * (hbar / 2.0) * joint[a][b];
        }
    }
    return acc;
}

SpinTpmJoint tpm_spin_joint(const SpinModel& model, const Ket& prep, double hbar) {
    (void)hbar;
    if (prep.size() != 2) throw DimensionError("tpm_spin_joint: preparation must be a qubit");
    if (std::abs(prep.squaredNorm() - 1.0) > tol::norm) throw ValidationError("tpm_spin_joint: preparation is not normalized");
    const Operator u = spin_propagator(model, std::numbers::pi / (2.0 * model.omega));

    SpinTpmJoint out{};
    for (int a = 0; a < 2; ++a) out.first[a] = std::norm(sy_eigenket(a).dot(prep));
    const double total = out.first[0] + out.first[1];
    for (int a = 0; a < 2; ++a) {
        out.first[a] /= total;
        const Ket evolved = u.apply(sy_eigenket(a));
        std::array<double, 2> cond{};
        for (int b = 0; b < 2; ++b) cond[b] = std::norm(sy_eigenket(b).dot(evolved));
        const double norm = cond[0] + cond[1];
        for (int b = 0; b < 2; ++b) out.joint[a][b] = cond[b] / norm * out.first[a];
    }
    return out;
}

}  // namespace qwork
