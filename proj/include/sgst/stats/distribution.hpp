#pragma once

#include <cstddef>
#include <vector>

namespace sgst {

/// Probability masses on a uniform grid, interpreted as atoms at bin
/// centers. Masses sum to 1.
struct GridDistribution {
    double support_min = 0.0;
    double support_max = 0.0;
    std::size_t bin_count = 0;
    std::vector<double> masses;

    double bin_width() const;
    double center(std::size_t i) const;
    void validate() const;

    double mean() const;
    double variance() const;
    double skewness() const;
    double excess_kurtosis() const;

    static GridDistribution uniform(double lo, double hi, std::size_t bins);
    static GridDistribution triangular(double lo, double hi, std::size_t bins);
    static GridDistribution gaussian(double mean, double sigma, std::size_t bins,
                                     double half_width_sigmas = 8.0);
    static GridDistribution delta(double x, double bin_width);
    static GridDistribution bimodal(double separation, double bin_width);
};

/// Discrete convolution of two distributions with matching bin width,
/// renormalized to unit mass. Variances add exactly (atom semantics).
GridDistribution convolve(const GridDistribution& d1, const GridDistribution& d2);

struct SpreadResult {
    std::vector<double> variance_series;  // Var after 1..n convolutions
    double final_skewness;
    double final_excess_kurtosis;
    GridDistribution final_distribution;
    double variance_slope;  // least-squares slope of Var(n)/Var(1) vs n
};

/// n-fold self-convolution of d1 with the variance recorded after each
/// step and normality statistics of the final distribution. The grid
/// extends as the support grows; nothing is truncated.
SpreadResult iterated_spread(const GridDistribution& d1, std::size_t n);

}  // namespace sgst
