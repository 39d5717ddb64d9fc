#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgst/core/rng.hpp"

namespace sgst {

enum class ComponentLaw { Normal, Uniform, Bimodal };

std::string to_string(ComponentLaw law);

/// Per-point fluctuation of a stochastic metric component: standard
/// deviation sigma with one of the non-pathological laws.
struct MetricFluctuationSpec {
    double sigma = 1.0;
    ComponentLaw law = ComponentLaw::Normal;

    void validate() const;
    double draw(RngStream& rng) const;  // one component value; fixed 2-tick layout
};

struct AverageVariancePoint {
    std::uint64_t m;           // cells averaged
    double empirical_variance; // Var of the m-cell average
    double skewness;           // of the averaged values
    double excess_kurtosis;
};

struct AverageVarianceResult {
    std::vector<AverageVariancePoint> points;
    double loglog_slope;  // expected -1: Var ~ sigma^2 / m
};

/// Empirical variance of volume-averaged components: for each m, average m
/// iid component values, repeat `samples` times, record the variance, then
/// fit the log-log slope across the m grid.
AverageVarianceResult metric_average_variance(const MetricFluctuationSpec& spec,
                                              const std::vector<std::uint64_t>& m_points,
                                              std::uint64_t samples, const RngStream& rng);

struct UncertaintyRecord {
    double volume;   // one-dimensional volume V
    double delta_q;  // position spread, proportional to V
    double delta_g;  // std of the region-averaged fluctuating component
    double p_cov;    // fixed covariant momentum
    double product;  // delta_q * |p_cov| * delta_g
};

/// delta_q tracks the volume; the fluctuating component is averaged over the
/// space-time region attached to it (cell count grows as V^2: spatial window
/// times the matching time window), so delta_g falls as 1/V and the product
/// is volume-independent. p_cov = 0 gives a zero product.
std::vector<UncertaintyRecord> uncertainty_product(const MetricFluctuationSpec& spec,
                                                   double p_cov,
                                                   const std::vector<double>& volumes,
                                                   std::uint64_t samples, double cell_size,
                                                   const RngStream& rng);

}  // namespace sgst
