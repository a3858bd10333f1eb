#pragma once

// Fixtures and independent oracles shared by the test binaries.

#include <algorithm>
#include <cmath>
#include <vector>

#include <qwork/core.hpp>
#include <qwork/distributions.hpp>

namespace qtest {

using qwork::Complex;
using qwork::Ket;
using qwork::Matrix;
using qwork::Operator;

inline Operator pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return Operator(m);
}

inline Operator pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return Operator(m);
}

inline Operator pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return Operator(m);
}

inline Ket ket(Complex a, Complex b) {
    Ket v(2);
    v << a, b;
    return v;
}

inline Ket ket0() { return ket(1.0, 0.0); }
inline Ket ket1() { return ket(0.0, 1.0); }
inline Ket ket_plus() { return ket(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)); }

/// sup |F_n(u) - F(u)| over the sample points.
inline double ks_statistic(std::vector<double> samples, const qwork::GaussianDensity& dist) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = dist.cdf(samples[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

/// Velocity-Verlet point mass under constant force; returns (x, p) at t.
struct ClassicalState {
    double x;
    double p;
};

inline ClassicalState leapfrog(double x0, double p0, double mass, double force, double t, int steps) {
    const double dt = t / steps;
    double x = x0;
    double p = p0;
    for (int i = 0; i < steps; ++i) {
        p += 0.5 * dt * force;
        x += dt * p / mass;
        p += 0.5 * dt * force;
    }
    return {x, p};
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace qtest
