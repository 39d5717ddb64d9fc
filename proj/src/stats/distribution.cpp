#include "sgst/stats/distribution.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

double GridDistribution::bin_width() const {
    return bin_count ? (support_max - support_min) / double(bin_count) : 0.0;
}

double GridDistribution::center(std::size_t i) const {
    return support_min + (double(i) + 0.5) * bin_width();
}

void GridDistribution::validate() const {
    if (bin_count == 0 || masses.size() != bin_count)
        throw ParameterError("GridDistribution: bin count mismatch");
    if (!(support_max > support_min))
        throw ParameterError("GridDistribution: empty support");
    double sum = 0.0;
    for (double m : masses) {
        if (m < 0.0) throw ParameterError("GridDistribution: negative mass");
        sum += m;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ParameterError("GridDistribution: masses sum to " + std::to_string(sum));
}

namespace {

double central_moment(const GridDistribution& d, double mean, int order) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d.bin_count; ++i)
        acc += d.masses[i] * std::pow(d.center(i) - mean, order);
    return acc;
}

}  // namespace

double GridDistribution::mean() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < bin_count; ++i) acc += masses[i] * center(i);
    return acc;
}

double GridDistribution::variance() const { return central_moment(*this, mean(), 2); }

double GridDistribution::skewness() const {
    const double m = mean();
    const double v = central_moment(*this, m, 2);
    return central_moment(*this, m, 3) / std::pow(v, 1.5);
}

double GridDistribution::excess_kurtosis() const {
    const double m = mean();
    const double v = central_moment(*this, m, 2);
    return central_moment(*this, m, 4) / (v * v) - 3.0;
}

GridDistribution GridDistribution::uniform(double lo, double hi, std::size_t bins) {
    GridDistribution d{lo, hi, bins, std::vector<double>(bins, 1.0 / double(bins))};
    d.validate();
    return d;
}

GridDistribution GridDistribution::triangular(double lo, double hi, std::size_t bins) {
    GridDistribution d{lo, hi, bins, std::vector<double>(bins, 0.0)};
    const double mid = (lo + hi) / 2.0, half = (hi - lo) / 2.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        d.masses[i] = std::max(0.0, 1.0 - std::abs(d.center(i) - mid) / half);
        sum += d.masses[i];
    }
    for (double& m : d.masses) m /= sum;
    d.validate();
    return d;
}

GridDistribution GridDistribution::gaussian(double mean, double sigma, std::size_t bins,
                                            double half_width_sigmas) {
    GridDistribution d{mean - half_width_sigmas * sigma, mean + half_width_sigmas * sigma, bins,
                       std::vector<double>(bins, 0.0)};
    double sum = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        const double x = (d.center(i) - mean) / sigma;
        d.masses[i] = std::exp(-0.5 * x * x);
        sum += d.masses[i];
    }
    for (double& m : d.masses) m /= sum;
    d.validate();
    return d;
}

GridDistribution GridDistribution::delta(double x, double bin_width) {
    GridDistribution d{x - bin_width / 2.0, x + bin_width / 2.0, 1, {1.0}};
    d.validate();
    return d;
}

GridDistribution GridDistribution::bimodal(double separation, double bin_width) {
    const std::size_t bins = std::size_t(std::ceil(separation / bin_width)) + 1;
    GridDistribution d{-separation / 2.0 - bin_width / 2.0,
                       -separation / 2.0 - bin_width / 2.0 + double(bins) * bin_width, bins,
                       std::vector<double>(bins, 0.0)};
    d.masses.front() = 0.5;
    d.masses.back() = 0.5;
    d.validate();
    return d;
}

GridDistribution convolve(const GridDistribution& d1, const GridDistribution& d2) {
    d1.validate();
    d2.validate();
    const double w = d1.bin_width();
    if (std::abs(w - d2.bin_width()) > 1e-12 * w)
        throw ParameterError("convolve: bin widths differ");

    const std::size_t n = d1.bin_count + d2.bin_count - 1;
    GridDistribution out;
    out.bin_count = n;
    out.masses.assign(n, 0.0);
    // atom positions add: center_k = center1_0 + center2_0 + k w
    const double first_center = d1.center(0) + d2.center(0);
    out.support_min = first_center - 0.5 * w;
    out.support_max = out.support_min + double(n) * w;

    for (std::size_t i = 0; i < d1.bin_count; ++i) {
        if (d1.masses[i] == 0.0) continue;
        for (std::size_t j = 0; j < d2.bin_count; ++j)
            out.masses[i + j] += d1.masses[i] * d2.masses[j];
    }
    double sum = 0.0;
    for (double m : out.masses) sum += m;
    for (double& m : out.masses) m /= sum;
    return out;
}

SpreadResult iterated_spread(const GridDistribution& d1, std::size_t n) {
    d1.validate();
    if (n < 1) throw ParameterError("iterated_spread: n must be >= 1");
    if (!(d1.variance() > 0.0)) throw ParameterError("iterated_spread: zero-variance seed");

    SpreadResult res;
    GridDistribution acc = d1;
    res.variance_series.push_back(acc.variance());
    for (std::size_t k = 2; k <= n; ++k) {
        acc = convolve(acc, d1);
        res.variance_series.push_back(acc.variance());
    }
    res.final_skewness = acc.skewness();
    res.final_excess_kurtosis = acc.excess_kurtosis();

    // slope of Var(k)/Var(1) against k
    const double v1 = res.variance_series.front();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < res.variance_series.size(); ++k) {
        const double x = double(k + 1), y = res.variance_series[k] / v1;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double m = double(res.variance_series.size());
    res.variance_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    res.final_distribution = std::move(acc);
    return res;
}

}  // namespace sgst
