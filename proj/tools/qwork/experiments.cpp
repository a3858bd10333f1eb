#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <qwork/core.hpp>
#include <qwork/dynamics.hpp>
#include <qwork/error.hpp>
#include <qwork/grid.hpp>
#include <qwork/models.hpp>
#include <qwork/random.hpp>
#include <qwork/tpm.hpp>
#include <qwork/version.hpp>
#include <qwork/work_stats.hpp>

namespace qwork::cli {

namespace {

constexpr Complex kI{0.0, 1.0};

GaussianPacket read_packet(const ExperimentConfig& cfg, double p0_default = 0.0) {
    GaussianPacket packet;
    packet.x0 = cfg.number("x0", 0.0);
    packet.p0 = cfg.number("p0", p0_default);
    packet.sigma_x = cfg.positive("sigma_x", 1.0);
    return packet;
}

TwoTimeWindow read_window(const ExperimentConfig& cfg, double t1_default, double t2_default) {
    const double t1 = cfg.number("t1", t1_default);
    const double t2 = cfg.number("t2", t2_default);
    if (t2 < t1) throw ConfigError("t2", "must be >= t1");
    return {t1, t2};
}

std::size_t read_count(const ExperimentConfig& cfg, const std::string& key, std::int64_t fallback,
                       std::int64_t minimum) {
    const std::int64_t n = cfg.integer(key, fallback);
    if (n < minimum) throw ConfigError(key, "must be >= " + std::to_string(minimum));
    return static_cast<std::size_t>(n);
}

GridSpec read_grid(const ExperimentConfig& cfg, const std::string& prefix, std::int64_t n_default, double lo,
                   double hi) {
    const std::size_t n = read_count(cfg, prefix + "points", n_default, 2);
    if ((n & (n - 1)) != 0) throw ConfigError(prefix + "points", "must be a power of two");
    const double x_min = cfg.number(prefix + "x_min", lo);
    const double x_max = cfg.number(prefix + "x_max", hi);
    if (!(x_max > x_min)) throw ConfigError(prefix + "x_max", "must exceed " + prefix + "x_min");
    return {n, x_min, x_max};
}

void add_density_table(ResultRecord& rec, const std::string& name, const std::string& variable,
                       const TwoTimeDistribution& dist, std::size_t points) {
    if (const auto* g = std::get_if<GaussianDensity>(&dist.density)) {
        Table t{name, {variable, "density"}, {}};
        const double lo = g->center() - 5.0 * g->width();
        const double step = 10.0 * g->width() / static_cast<double>(points - 1);
        for (std::size_t i = 0; i < points; ++i) {
            const double u = lo + step * static_cast<double>(i);
            t.rows.emplace_back(u, g->pdf(u));
        }
        rec.tables.push_back(std::move(t));
    } else if (const auto* p = std::get_if<PointMass>(&dist.density)) {
        rec.tables.push_back({name, {variable, "probability"}, {{p->value, 1.0}}});
    }
}

void add_distribution(ResultRecord& rec, const std::string& group, const TwoTimeDistribution& dist) {
    rec.group(group).values = {{"mean", dist.mean()}, {"width", dist.stddev()}};
}

void add_samples(ResultRecord& rec, const std::string& name, const SampleSet& samples) {
    rec.group("monte_carlo_" + name).values = {{"n", static_cast<double>(samples.n)},
                                                {"mean", samples.mean()},
                                                {"stddev", samples.stddev()}};
    rec.samples.push_back({name, samples.values});
}

Ket read_qubit_prep(const ExperimentConfig& cfg) {
    const std::string prep = cfg.text("prep", "plus");
    const double r = 1.0 / std::numbers::sqrt2;
    Ket v(2);
    if (prep == "plus") {
        v << r, r;
    } else if (prep == "minus") {
        v << r, -r;
    } else if (prep == "zero") {
        v << 1.0, 0.0;
    } else if (prep == "one") {
        v << 0.0, 1.0;
    } else if (prep == "y_plus") {
        v << r, kI * r;
    } else if (prep == "y_minus") {
        v << r, -kI * r;
    } else if (prep == "bloch") {
        const double theta = cfg.number("theta", 0.0);
        const double phi = cfg.number("phi", 0.0);
        v << std::cos(theta / 2.0), std::exp(kI * phi) * std::sin(theta / 2.0);
    } else {
        throw ConfigError("prep", "expected plus, minus, zero, one, y_plus, y_minus or bloch");
    }
    return v;
}

// ---------------------------------------------------------------------------

ResultRecord run_gravity_work(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const GravityModel model(cfg.positive("m", 1.0), cfg.number("g", 1.0));
    const GaussianPacket packet = read_packet(cfg);
    const TwoTimeWindow window = read_window(cfg, 0.0, 1.0);
    const GridSpec grid = read_grid(cfg, "grid_", 1024, -40.0, 40.0);
    const int steps = static_cast<int>(read_count(cfg, "steps_per_unit_time", 1000, 1));
    const std::size_t points = read_count(cfg, "density_points", 101, 2);

    const WorkDistribution dist = work_distribution_observable(model, packet, window, hbar);
    add_distribution(rec, "observable", dist);
    rec.group("observable").values.emplace_back("zero_work_momentum", gravity_zero_work_momentum(model, window));

    const WaveFunction1D psi0 = gaussian_wavefunction(packet, grid, hbar);
    const double m = model.m;
    const double g = model.g;
    const EnergyBalance balance =
        grid_energy_balance(psi0, [m, g](double x) { return m * g * x; }, m, window, steps, hbar);
    const double mean = dist.mean();
    rec.group("grid").values = {{"delta_kinetic", balance.delta_kinetic()},
                                {"delta_potential", balance.delta_potential()},
                                {"delta_total", balance.delta_total()},
                                {"work_deviation", balance.delta_kinetic() - mean}};

    rec.group("power").values = {{"t1", gravity_power_expectation(model, packet.p0, window.t1())},
                                 {"t2", gravity_power_expectation(model, packet.p0, window.t2())}};

    const Complex c = gravity_potential_commutator(model, window, psi0, hbar);
    rec.group("potential_commutator").values = {{"measured_real", c.real()},
                                                {"measured_imag", c.imag()},
                                                {"hbar_m_g2_dt", hbar * m * g * g * window.duration()},
                                                {"hbar_dt_over_m", hbar * window.duration() / m}};

    add_density_table(rec, "work_density", "w", dist, points);
    return rec;
}

ResultRecord run_gravity_tpm(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const GravityModel model(cfg.positive("m", 1.0), cfg.number("g", 1.0));
    const GaussianPacket packet = read_packet(cfg, 2.0);
    const TwoTimeWindow window = read_window(cfg, 0.0, 1.0);
    const MeasurementResolution res(cfg.positive("d_x", 0.1), cfg.positive("d_p", 1e-4));
    const std::size_t n_trials = read_count(cfg, "n_trials", 0, 0);
    const std::uint64_t seed = cfg.seed("seed", 1);
    const std::size_t points = read_count(cfg, "density_points", 101, 2);
    rec.seed = seed;

    const WorkDistribution tpm_x = tpm_work_distribution(model, packet, window, res, TpmProtocol::position, hbar);
    const WorkDistribution tpm_p = tpm_work_distribution(model, packet, window, res, TpmProtocol::momentum, hbar);
    const WorkDistribution obs = work_distribution_observable(model, packet, window, hbar);
    add_distribution(rec, "TPM_x", tpm_x);
    add_distribution(rec, "TPM_p", tpm_p);
    add_distribution(rec, "observable", obs);
    rec.group("TPM_x").values.emplace_back("width_asymptote",
                                           tpm_position_width_asymptote(model, window, res.d_x, hbar));

    const double t = window.t1();
    rec.group("power").values = {{"TPM_x", tpm_power_limit(model, packet.p0, t, TpmProtocol::position)},
                                 {"TPM_p", tpm_power_limit(model, packet.p0, t, TpmProtocol::momentum)},
                                 {"observable", gravity_power_expectation(model, packet.p0, t)}};

    add_density_table(rec, "density_TPM_x", "w", tpm_x, points);
    add_density_table(rec, "density_TPM_p", "w", tpm_p, points);
    if (n_trials > 0) {
        add_samples(rec, "TPM_x",
                    tpm_monte_carlo(model, packet, window, res, TpmProtocol::position, n_trials, seed, hbar));
        add_samples(rec, "TPM_p",
                    tpm_monte_carlo(model, packet, window, res, TpmProtocol::momentum, n_trials, seed, hbar));
    }
    return rec;
}

ResultRecord run_elastic(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const ElasticModel model(cfg.positive("m1", 1.0), cfg.positive("m2", 2.0), cfg.positive("k", 1.0));
    const double p1 = cfg.number("p1", 1.0);
    const double p2 = cfg.number("p2", 1.0);
    const double t = cfg.number("t", model.half_period());
    const int u = static_cast<int>(cfg.integer("u", 0));
    const int v = static_cast<int>(cfg.integer("v", 1));
    if (u < 0 || u % 2 != 0) throw ConfigError("u", "must be a non-negative even integer");
    if (v <= u || v % 2 == 0) throw ConfigError("v", "must be an odd integer greater than u");
    const GridSpec basis_grid = read_grid(cfg, "basis_", 16, -8.0, 8.0);
    const GridSpec zw_grid = read_grid(cfg, "zw_", 256, -64.0, 64.0);
    const double d_p = cfg.positive("d_p", 0.1);
    const double x_r0 = cfg.number("x_r0", 1.0);
    const double sigma_r = cfg.positive("sigma_r", 1.0);

    rec.group("model").values = {{"total_mass", model.total_mass()},
                                 {"reduced_mass", model.reduced_mass()},
                                 {"omega", model.omega()},
                                 {"half_period", model.half_period()},
                                 {"alpha", gaussian_entanglement_alpha(model.m1, model.m2)}};

    const auto [a, b, c] = elastic_p1_coefficients(model, t);
    rec.group("coefficients").values = {{"t", t}, {"a", a}, {"b", b}, {"c", c}};

    const double big_m = model.total_mass();
    const double p_cm = p1 + p2;
    const double p_r = model.reduced_mass() * (p2 / model.m2 - p1 / model.m1);
    rec.group("eigenvalue").values = {{"p1", p1},
                                      {"p2", p2},
                                      {"w", elastic_work_eigenvalue(model, p1, p2)},
                                      {"w_cm_rel", 2.0 / big_m * p_cm * p_r}};

    const TwoParticleBasis basis(basis_grid, hbar);
    const Operator w_special = elastic_work_operator_special(model, u, v, basis);
    const Operator w_cm_rel = elastic_work_operator_cm_rel(model, basis);
    const double tau = model.half_period();
    const Operator w_general = elastic_work_operator(model, TwoTimeWindow(u * tau, v * tau), basis);

    double label_deviation = 0.0;
    std::vector<double> expected;
    const std::size_t n = basis_grid.n_points();
    for (std::size_t j1 = 0; j1 < n; ++j1) {
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            const double w = elastic_work_eigenvalue(model, basis.momentum(j1), basis.momentum(j2));
            const Ket k = basis.momentum_ket(j1, j2);
            label_deviation = std::max(label_deviation, (w_special.apply(k) - w * k).cwiseAbs().maxCoeff());
            expected.push_back(w);
        }
    }
    std::vector<double> computed;
    for (const auto& comp : hermitian_eigensystem(w_special)) {
        computed.insert(computed.end(), static_cast<std::size_t>(comp.rank), comp.eigenvalue);
    }
    std::sort(expected.begin(), expected.end());
    double spectrum_deviation = computed.size() == expected.size() ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < std::min(computed.size(), expected.size()); ++i) {
        spectrum_deviation = std::max(spectrum_deviation, std::abs(computed[i] - expected[i]));
    }
    rec.group("basis_check").values = {{"dimension", static_cast<double>(basis.dim())},
                                       {"label_deviation", label_deviation},
                                       {"spectrum_deviation", spectrum_deviation},
                                       {"cm_rel_deviation", max_abs_difference(w_special, w_cm_rel)},
                                       {"kinetic_difference_deviation", max_abs_difference(w_special, w_general)}};

    const ElasticZeroWorkWindow zw = elastic_zero_work_window(model);
    const ZeroWorkStatistics stats = elastic_zero_work_statistics(model, zw_grid, d_p, x_r0, sigma_r, hbar);
    rec.group("zero_work").values = {{"t1", zw.window.t1()},         {"t2", zw.window.t2()},
                                     {"coefficient", zw.coefficient}, {"mean", stats.mean},
                                     {"sigma", stats.sigma},           {"width_bound", stats.width_bound}};
    return rec;
}

ResultRecord run_displacement(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const double mass = cfg.positive("m", 1.0);
    const GaussianPacket packet = read_packet(cfg, 1.0);
    const double t = cfg.non_negative("t", 1.0);
    const MeasurementResolution res(cfg.positive("d_x", 0.1), cfg.positive("d_p", 0.1));
    const double x_init = cfg.number("x_init", packet.x0 + packet.sigma_x);
    const std::size_t n_trials = read_count(cfg, "n_trials", 0, 0);
    const std::uint64_t seed = cfg.seed("seed", 1);
    const std::size_t points = read_count(cfg, "density_points", 101, 2);
    rec.seed = seed;

    const TwoTimeWindow window(0.0, t);
    const TwoTimeDistribution obs = displacement_distribution_observable(packet, mass, window, hbar);
    const TwoTimeDistribution tpm{tpm_displacement_distribution(packet, mass, t, res, hbar), window};
    add_distribution(rec, "observable", obs);
    add_distribution(rec, "TPM", tpm);
    rec.group("uncertainty").values = {{"sigma_delta", obs.stddev()},
                                       {"sigma_x", packet.sigma_x},
                                       {"product", obs.stddev() * packet.sigma_x},
                                       {"hbar_t_over_2m", hbar * t / (2.0 * mass)}};

    const double t_e = ehrenfest_time(packet, mass, hbar);
    rec.group("bohmian").values = {{"ehrenfest_time", t_e},
                                   {"x_init", x_init},
                                   {"position", bohmian_trajectory(packet, mass, x_init, t, hbar)},
                                   {"velocity", bohmian_velocity(packet, mass, x_init, t, hbar)},
                                   {"asymptotic_slope", packet.p0 / mass + (x_init - packet.x0) / t_e}};

    add_density_table(rec, "density_observable", "delta", obs, points);
    add_density_table(rec, "density_TPM", "delta", tpm, points);
    if (n_trials > 0) {
        add_samples(rec, "TPM", tpm_displacement_monte_carlo(packet, mass, t, res, n_trials, seed, hbar));
    }
    return rec;
}

ResultRecord run_spin(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const SpinModel model(cfg.positive("omega", 1.0));
    const Ket prep = read_qubit_prep(cfg);
    if (std::abs(prep.squaredNorm() - 1.0) > tol::norm) throw ConfigError("prep", "state is not normalized");
    const DensityOperator rho = DensityOperator::pure(prep);

    const Operator delta = spin_delta_sy_operator(model, hbar);
    const SpinOperators s = spin_operators(hbar);
    const Operator u = spin_propagator(model, std::numbers::pi / (2.0 * model.omega));
    const Operator delta_heisenberg = two_time_difference(s.sy, Operator::identity(2), u);

    Table dist{"observable_distribution", {"delta_sy", "probability"}, {}};
    for (const auto& comp : hermitian_eigensystem(delta)) {
        dist.rows.emplace_back(comp.eigenvalue, expectation(comp.projector, rho).real());
    }
    rec.tables.push_back(std::move(dist));
    rec.group("observable").values = {{"mean", expectation(delta, rho).real()},
                                      {"sigma", uncertainty(delta, rho)},
                                      {"heisenberg_deviation", max_abs_difference(delta, delta_heisenberg)}};

    const SpinTpmJoint joint = tpm_spin_joint(model, prep, hbar);
    rec.group("tpm_joint").values = {{"p_plus_plus", joint.probability(1, 1)},
                                     {"p_plus_minus", joint.probability(1, -1)},
                                     {"p_minus_plus", joint.probability(-1, 1)},
                                     {"p_minus_minus", joint.probability(-1, -1)}};
    rec.group("tpm").values = {{"difference_mean", joint.difference_mean(hbar)},
                               {"product_mean", joint.product_mean(hbar)}};

    Table tpm_dist{"tpm_difference_distribution", {"delta_sy", "probability"}, {}};
    tpm_dist.rows = {{-hbar, joint.probability(1, -1)},
                     {0.0, joint.probability(1, 1) + joint.probability(-1, -1)},
                     {hbar, joint.probability(-1, 1)}};
    rec.tables.push_back(std::move(tpm_dist));
    return rec;
}

ResultRecord run_two_time(const ExperimentConfig& cfg, ResultRecord rec) {
    const double theta = cfg.number("theta", 0.6 * std::numbers::pi);
    const std::size_t n_theta = read_count(cfg, "n_theta", 50, 2);
    const double omega = cfg.positive("omega", 1.0);
    const double hbar = cfg.positive("hbar", 1.0);
    const TwoTimeWindow window = read_window(cfg, 0.0, 2.0 * std::numbers::pi / omega);
    if (window.degenerate()) throw ConfigError("t2", "time mixture needs t2 > t1");
    const int n_slices = static_cast<int>(read_count(cfg, "n_slices", 256, 2));

    const double r = 1.0 / std::numbers::sqrt2;
    Ket zero(2), plus(2);
    zero << 1.0, 0.0;
    plus << r, r;
    const DensityOperator rho0 = DensityOperator::pure(zero);
    const Operator lambda = Operator::projector(plus);
    const Operator id = Operator::identity(2);
    const PseudoState gamma = gamma_pseudo_state(rho0, lambda, id);

    auto gamma_at = [&](double th) {
        Ket k(2);
        k << std::cos(th), std::sin(th);
        return k.dot(gamma.op.apply(k)).real();
    };
    rec.group("gamma").values = {{"theta", theta},
                                 {"expectation", gamma_at(theta)},
                                 {"closed_form", std::cos(theta) * (std::cos(theta) + std::sin(theta))},
                                 {"min_eigenvalue", gamma.min_eigenvalue()},
                                 {"trace", gamma.op.trace().real()},
                                 {"weight", gamma.weight}};
    Table sweep{"gamma_theta", {"theta", "expectation"}, {}};
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double th = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
        sweep.rows.emplace_back(th, gamma_at(th));
    }
    rec.tables.push_back(std::move(sweep));

    RealVector zdiag(2);
    zdiag << 1.0, -1.0;
    const Operator sz = Operator::diagonal(zdiag);
    rec.group("means").values = {{"two_time", two_time_mean(lambda, sz, id, id, rho0)},
                                 {"tpm", tpm_two_time_mean(lambda, sz, id, id, rho0)},
                                 {"pseudo_joint", pseudo_joint_two_time_mean(lambda, sz, id, id, rho0)}};

    const Operator h = (0.5 * hbar * omega) * sz;
    const DensityOperator rho_plus = DensityOperator::pure(plus);
    const auto u_of_t = [&](double t) { return unitary_from_hamiltonian(h, t, hbar); };
    const TimeMixtureState mix = time_average_map(rho_plus, u_of_t, window, n_slices);
    rec.group("time_mixture").values = {{"entropy_initial", von_neumann_entropy(rho_plus)},
                                        {"entropy_mixture", von_neumann_entropy(mix.rho)},
                                        {"coherence", std::abs(mix.rho.op()(0, 1))},
                                        {"n_slices", static_cast<double>(n_slices)}};
    return rec;
}

ResultRecord run_uncertainty(const ExperimentConfig& cfg, ResultRecord rec) {
    const std::size_t n = read_count(cfg, "n_instances", 1000, 1);
    const std::int64_t dim_min = cfg.integer("dim_min", 2);
    const std::int64_t dim_max = cfg.integer("dim_max", 8);
    if (dim_min < 2) throw ConfigError("dim_min", "must be >= 2");
    if (dim_max < dim_min) throw ConfigError("dim_max", "must be >= dim_min");
    const std::uint64_t seed = cfg.seed("seed", 1);
    rec.seed = seed;

    std::size_t satisfied = 0;
    double min_margin = INFINITY;
    Table table{"instances", {"rhs", "lhs"}, {}};
    for (std::size_t i = 0; i < n; ++i) {
        CounterStream rng(seed, i);
        const auto dim = static_cast<Eigen::Index>(dim_min + static_cast<std::int64_t>(i) % (dim_max - dim_min + 1));
        const Operator h1 = random_hermitian(dim, rng);
        const Operator h2 = random_hermitian(dim, rng);
        const DensityOperator rho = random_density(dim, rng);
        const UncertaintyCheck check = uncertainty_relation_check(h2 - h1, h1, h2, rho);
        if (check.satisfied) ++satisfied;
        min_margin = std::min(min_margin, check.lhs - check.rhs);
        table.rows.emplace_back(check.rhs, check.lhs);
    }
    rec.group("summary").values = {{"instances", static_cast<double>(n)},
                                   {"satisfied", static_cast<double>(satisfied)},
                                   {"min_margin", min_margin}};
    rec.tables.push_back(std::move(table));
    return rec;
}

ResultRecord run_conservation(const ExperimentConfig& cfg, ResultRecord rec) {
    const double hbar = cfg.positive("hbar", 1.0);
    const GravityModel model(cfg.positive("m", 1.0), cfg.number("g", 1.0));
    const GaussianPacket packet = read_packet(cfg);
    const TwoTimeWindow window = read_window(cfg, 0.0, 1.0);
    const GridSpec grid = read_grid(cfg, "grid_", 1024, -40.0, 40.0);
    const int steps = static_cast<int>(read_count(cfg, "steps_per_unit_time", 10000, 1));
    const double k = cfg.positive("k", 1.0);
    const GridSpec h_grid = read_grid(cfg, "h_", 128, -12.0, 12.0);
    const GridSpec zw_grid = read_grid(cfg, "zw_", 2048, -200.0, 200.0);
    const double d_p = cfg.positive("d_p", 0.05);

    const double m = model.m;
    const double g = model.g;
    const WaveFunction1D psi0 = gaussian_wavefunction(packet, grid, hbar);
    const EnergyBalance grav =
        grid_energy_balance(psi0, [m, g](double x) { return m * g * x; }, m, window, steps, hbar);
    rec.group("gravity").values = {{"delta_kinetic", grav.delta_kinetic()},
                                   {"delta_potential", grav.delta_potential()},
                                   {"delta_total", grav.delta_total()}};

    const EnergyBalance harm =
        grid_energy_balance(psi0, [k](double x) { return 0.5 * k * x * x; }, m, window, steps, hbar);
    rec.group("harmonic_grid").values = {{"delta_kinetic", harm.delta_kinetic()},
                                         {"delta_potential", harm.delta_potential()},
                                         {"delta_total", harm.delta_total()}};

    const Operator h_total =
        momentum_function_operator(h_grid, [m](double p) { return Complex(p * p / (2.0 * m)); }, hbar) +
        position_function_operator(h_grid, [k](double x) { return Complex(0.5 * k * x * x); });
    const Operator h_herm(0.5 * (h_total.matrix() + h_total.matrix().adjoint()));
    const WaveFunction1D h_psi = gaussian_wavefunction(GaussianPacket{packet.x0, packet.p0, 1.0}, h_grid, hbar);
    const ConservationResult cons =
        conservation_element_of_reality(h_psi.density(), h_herm, unitary_from_hamiltonian(h_herm, window.t1(), hbar),
                                        unitary_from_hamiltonian(h_herm, window.t2(), hbar));
    rec.group("harmonic_operator").values = {
        {"mean", cons.mean}, {"sigma", cons.sigma}, {"operator_residual", cons.operator_residual}};

    const double p12 = gravity_zero_work_momentum(model, window);
    const WaveFunction1D surrogate = momentum_surrogate(p12, d_p, zw_grid, 0.0, hbar);
    const auto w = [&](double p) { return gravity_work_eigenvalue(model, window, p); };
    const double mean = surrogate.momentum_expectation(w, hbar);
    const double second = surrogate.momentum_expectation([&](double p) { return w(p) * w(p); }, hbar);
    rec.group("zero_work").values = {{"momentum", p12},
                                     {"mean", mean},
                                     {"sigma", std::sqrt(std::max(0.0, second - mean * mean))},
                                     {"bound", std::abs(g) * window.duration() * d_p}};
    return rec;
}

}  // namespace

const std::map<Experiment, std::vector<std::string>>& dispatch_targets() {
    static const std::map<Experiment, std::vector<std::string>> targets{
        {Experiment::gravity_work,
         {"work_distribution_observable", "gravity_work_eigenvalue", "gravity_zero_work_momentum",
          "grid_energy_balance", "gravity_power_expectation", "gravity_potential_commutator"}},
        {Experiment::gravity_tpm,
         {"tpm_work_distribution", "tpm_position_width_asymptote", "tpm_power_limit", "tpm_monte_carlo",
          "work_distribution_observable", "gravity_power_expectation"}},
        {Experiment::elastic,
         {"elastic_p1_coefficients", "elastic_work_eigenvalue", "elastic_work_operator_special",
          "elastic_work_operator_cm_rel", "elastic_work_operator", "hermitian_eigensystem",
          "elastic_zero_work_window", "elastic_zero_work_statistics", "gaussian_entanglement_alpha"}},
        {Experiment::displacement,
         {"displacement_distribution_observable", "tpm_displacement_distribution", "tpm_displacement_monte_carlo",
          "ehrenfest_time", "bohmian_trajectory", "bohmian_velocity"}},
        {Experiment::spin,
         {"spin_delta_sy_operator", "spin_propagator", "two_time_difference", "hermitian_eigensystem",
          "tpm_spin_joint"}},
        {Experiment::two_time,
         {"gamma_pseudo_state", "two_time_mean", "tpm_two_time_mean", "pseudo_joint_two_time_mean",
          "time_average_map", "von_neumann_entropy"}},
        {Experiment::uncertainty, {"uncertainty_relation_check"}},
        {Experiment::conservation,
         {"grid_energy_balance", "conservation_element_of_reality", "unitary_from_hamiltonian",
          "gravity_zero_work_momentum", "momentum_surrogate"}},
    };
    return targets;
}

ResultRecord run_experiment(const ExperimentConfig& config) {
    ResultRecord rec;
    rec.experiment = to_string(config.experiment);
    rec.version = qwork::version;

    switch (config.experiment) {
        case Experiment::gravity_work: rec = run_gravity_work(config, std::move(rec)); break;
        case Experiment::gravity_tpm: rec = run_gravity_tpm(config, std::move(rec)); break;
        case Experiment::elastic: rec = run_elastic(config, std::move(rec)); break;
        case Experiment::displacement: rec = run_displacement(config, std::move(rec)); break;
        case Experiment::spin: rec = run_spin(config, std::move(rec)); break;
        case Experiment::two_time: rec = run_two_time(config, std::move(rec)); break;
        case Experiment::uncertainty: rec = run_uncertainty(config, std::move(rec)); break;
        case Experiment::conservation: rec = run_conservation(config, std::move(rec)); break;
    }

    const auto unused = config.unused_keys();
    if (!unused.empty()) throw ConfigError(unused.front(), "unknown parameter for " + rec.experiment);
    rec.parameters = config.echo();
    return rec;
}

}  // namespace qwork::cli
