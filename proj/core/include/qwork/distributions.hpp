#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qwork/dynamics.hpp"

namespace qwork {

/// Normal density (2πσ²)^{-1/2} exp(-(u - center)²/2σ²), σ = width > 0.
class GaussianDensity {
public:
    GaussianDensity(double center, double width);

    double center() const { return center_; }
    double width() const { return width_; }
    double pdf(double u) const;
    double cdf(double u) const;

    friend bool operator==(const GaussianDensity&, const GaussianDensity&) = default;

private:
    double center_;
    double width_;
};

/// All probability at one value; stands in for a zero-width Gaussian.
struct PointMass {
    double value;

    friend bool operator==(const PointMass&, const PointMass&) = default;
};

/// Finite outcome table; probabilities sum to 1.
class DiscreteDistribution {
public:
    DiscreteDistribution(std::vector<double> values, std::vector<double> probabilities);

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& probabilities() const { return probabilities_; }

private:
    std::vector<double> values_;
    std::vector<double> probabilities_;
};

/// Statistics of a two-time quantity (work, displacement) over a window.
struct TwoTimeDistribution {
    std::variant<GaussianDensity, PointMass, DiscreteDistribution> density;
    TwoTimeWindow window;

    double mean() const;
    double stddev() const;
};

using WorkDistribution = TwoTimeDistribution;

/// Gaussian when width > 0, point mass when width == 0.
TwoTimeDistribution make_gaussian_or_point(double center, double width, const TwoTimeWindow& window);

/// Reproducible draws: identical (seed, n) give identical values.
struct SampleSet {
    std::vector<double> values;
    std::uint64_t seed;
    std::size_t n;

    double mean() const;
    double stddev() const;
};

}  // namespace qwork
