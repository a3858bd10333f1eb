#include "qwork/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qwork/error.hpp"
#include "qwork/random.hpp"

namespace qwork {

GaussianDensity::GaussianDensity(double center, double width) : center_(center), width_(width) {
    if (!std::isfinite(center)) throw ValidationError("GaussianDensity: center must be finite");
    if (!(width > 0.0) || !std::isfinite(width)) throw ValidationError("GaussianDensity: width must be positive");
}

double GaussianDensity::pdf(double u) const {
    const double z = (u - center_) / width_;
    return std::exp(-0.5 * z * z) / (width_ * std::sqrt(2.0 * std::numbers::pi));
}

double GaussianDensity::cdf(double u) const { return standard_normal_cdf((u - center_) / width_); }

DiscreteDistribution::DiscreteDistribution(std::vector<double> values, std::vector<double> probabilities)
    : values_(std::move(values)), probabilities_(std::move(probabilities)) {
    if (values_.size() != probabilities_.size() || values_.empty()) {
        throw ValidationError("DiscreteDistribution: need one probability per value");
    }
    double total = 0.0;
    for (const double p : probabilities_) {
        if (p < -tol::psd) throw ValidationError("DiscreteDistribution: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > tol::norm) throw ValidationError("DiscreteDistribution: probabilities do not sum to 1");
}

double TwoTimeDistribution::mean() const {
    struct Visitor {
        double operator()(const GaussianDensity& g) const { return g.center(); }
        double operator()(const PointMass& p) const { return p.value; }
        double operator()(const DiscreteDistribution& d) const {
            return std::inner_product(d.values().begin(), d.values().end(), d.probabilities().begin(), 0.0);
        }
    };
    return std::visit(Visitor{}, density);
}

double TwoTimeDistribution::stddev() const {
    struct Visitor {
        double operator()(const GaussianDensity& g) const { return g.width(); }
        double operator()(const PointMass&) const { return 0.0; }
        double operator()(const DiscreteDistribution& d) const {
            double m1 = 0.0;
            double m2 = 0.0;
            for (std::size_t i = 0; i < d.values().size(); ++i) {
                m1 += d.probabilities()[i] * d.values()[i];
                m2 += d.probabilities()[i] * d.values()[i] * d.values()[i];
            }
            return std::sqrt(std::max(0.0, m2 - m1 * m1));
        }
    };
    return std::visit(Visitor{}, density);
}

TwoTimeDistribution make_gaussian_or_point(double center, double width, const TwoTimeWindow& window) {
    if (width == 0.0) return {PointMass{center}, window};
    return {GaussianDensity(center, width), window};
}

double SampleSet::mean() const {
    if (values.empty()) return 0.0;
    return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double SampleSet::stddev() const {
    if (values.size() < 2) return 0.0;
    const double m = mean();
    double acc = 0.0;
    for (const double v : values) acc += (v - m) * (v - m);
    return std::sqrt(acc / static_cast<double>(values.size() - 1));
}

}  // namespace qwork
