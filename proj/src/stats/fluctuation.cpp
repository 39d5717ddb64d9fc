#include "sgst/stats/fluctuation.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

std::string to_string(ComponentLaw law) {
    switch (law) {
        case ComponentLaw::Normal: return "normal";
        case ComponentLaw::Uniform: return "uniform";
        case ComponentLaw::Bimodal: return "bimodal";
    }
    return "?";
}

void MetricFluctuationSpec::validate() const {
    if (!(sigma > 0.0)) throw ParameterError("MetricFluctuationSpec: sigma must be > 0");
}

double MetricFluctuationSpec::draw(RngStream& rng) const {
    // every law consumes exactly two counter ticks so sample layouts are
    // identical across laws
    switch (law) {
        case ComponentLaw::Normal:
            return sigma * rng.normal();
        case ComponentLaw::Uniform: {
            const double u = rng.uniform01();
            rng.next_u64();
            return sigma * std::sqrt(3.0) * (2.0 * u - 1.0);
        }
        case ComponentLaw::Bimodal: {
            const double u = rng.uniform01();
            rng.next_u64();
            return u < 0.5 ? -sigma : sigma;
        }
    }
    throw ParameterError("MetricFluctuationSpec: unknown law");
}

namespace {

struct Moments {
    double variance, skewness, excess_kurtosis;
};

Moments sample_moments(const std::vector<double>& xs) {
    const double n = double(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double m2 = 0, m3 = 0, m4 = 0;
    for (double x : xs) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n; m3 /= n; m4 /= n;
    return {m2, m3 / std::pow(m2, 1.5), m4 / (m2 * m2) - 3.0};
}

}  // namespace

AverageVarianceResult metric_average_variance(const MetricFluctuationSpec& spec,
                                              const std::vector<std::uint64_t>& m_points,
                                              std::uint64_t samples, const RngStream& rng) {
    spec.validate();
    if (m_points.empty()) throw ParameterError("metric_average_variance: empty m grid");
    if (samples < 1000) throw ParameterError("metric_average_variance: samples must be >= 1000");

    AverageVarianceResult result;
    for (std::size_t pi = 0; pi < m_points.size(); ++pi) {
        const std::uint64_t m = m_points[pi];
        if (m < 1) throw ParameterError("metric_average_variance: m must be >= 1");
        std::vector<double> averages(samples);
        for (std::uint64_t s = 0; s < samples; ++s) {
            RngStream stream = rng.substream(pi * samples + s);
            double acc = 0.0;
            for (std::uint64_t i = 0; i < m; ++i) acc += spec.draw(stream);
            averages[s] = acc / double(m);
        }
        const Moments mm = sample_moments(averages);
        result.points.push_back({m, mm.variance, mm.skewness, mm.excess_kurtosis});
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& p : result.points) {
        const double x = std::log(double(p.m)), y = std::log(p.empirical_variance);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double n = double(result.points.size());
    result.loglog_slope = n > 1 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return result;
}

std::vector<UncertaintyRecord> uncertainty_product(const MetricFluctuationSpec& spec,
                                                   double p_cov,
                                                   const std::vector<double>& volumes,
                                                   std::uint64_t samples, double cell_size,
                                                   const RngStream& rng) {
    spec.validate();
    if (volumes.empty()) throw ParameterError("uncertainty_product: empty volume list");
    if (!(cell_size > 0.0)) throw ParameterError("uncertainty_product: cell size must be > 0");
    if (samples < 100) throw ParameterError("uncertainty_product: samples must be >= 100");

    std::vector<UncertaintyRecord> records;
    for (std::size_t vi = 0; vi < volumes.size(); ++vi) {
        const double v = volumes[vi];
        if (!(v > 0.0)) throw ParameterError("uncertainty_product: volumes must be positive");
        const double cells_1d = v / cell_size;
        const std::uint64_t cells = std::max<std::uint64_t>(1, std::uint64_t(cells_1d * cells_1d));

        std::vector<double> averages(samples);
        for (std::uint64_t s = 0; s < samples; ++s) {
            RngStream stream = rng.substream(vi * samples + s);
            double acc = 0.0;
            for (std::uint64_t i = 0; i < cells; ++i) acc += spec.draw(stream);
            averages[s] = acc / double(cells);
        }
        const double delta_g = std::sqrt(sample_moments(averages).variance);
        UncertaintyRecord rec;
        rec.volume = v;
        rec.delta_q = v;
        rec.delta_g = delta_g;
        rec.p_cov = p_cov;
        rec.product = rec.delta_q * std::abs(p_cov) * delta_g;
        records.push_back(rec);
    }
    return records;
}

}  // namespace sgst
