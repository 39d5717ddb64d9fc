#include "sgst/compton/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/FFT>

#include "sgst/core/error.hpp"

namespace sgst {

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + std::ptrdiff_t(mid), v.end());
    double hi = v[mid];
    if (v.size() % 2 == 0) {
        std::nth_element(v.begin(), v.begin() + std::ptrdiff_t(mid - 1), v.end());
        return (hi + v[mid - 1]) / 2.0;
    }
    return hi;
}

}  // namespace

SpectralReport spectral_detect(const std::vector<std::int64_t>& series, double detection_snr,
                               std::optional<double> expected_freq) {
    if (series.size() < 4) throw ParameterError("spectral_detect: series shorter than 4 samples");
    if (!(detection_snr > 0.0)) throw ParameterError("spectral_detect: snr threshold must be > 0");

    // difference, demean, pad to a power of two
    std::vector<double> x(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
        x[i] = double(series[i + 1] - series[i]);
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= double(x.size());
    for (double& v : x) v -= mean;
    x.resize(next_pow2(x.size()), 0.0);

    const std::size_t seglen = std::max<std::size_t>(4, x.size() / kWelchSegments);
    const std::size_t segments = x.size() / seglen;
    const std::size_t half = seglen / 2;

    SpectralReport rep;
    rep.power.assign(half + 1, 0.0);
    rep.frequencies.resize(half + 1);
    for (std::size_t k = 0; k <= half; ++k)
        rep.frequencies[k] = double(k) / double(seglen);

    Eigen::FFT<double> fft;
    std::vector<std::complex<double>> spectrum;
    for (std::size_t s = 0; s < segments; ++s) {
        std::vector<double> seg(x.begin() + std::ptrdiff_t(s * seglen),
                                x.begin() + std::ptrdiff_t((s + 1) * seglen));
        fft.fwd(spectrum, seg);
        for (std::size_t k = 0; k <= half; ++k) {
            const double fold = (k == 0 || k == half) ? 1.0 : 2.0;
            rep.power[k] += fold * std::norm(spectrum[k]) / double(seglen * seglen);
        }
    }
    for (double& p : rep.power) p /= double(segments);

    double sumsq = 0.0;
    for (std::size_t i = 0; i < segments * seglen; ++i) sumsq += x[i] * x[i];
    rep.series_variance = sumsq / double(segments * seglen);
    rep.total_power = 0.0;
    for (double p : rep.power) rep.total_power += p;

    std::vector<double> ac(rep.power.begin() + 1, rep.power.end());
    const double bg = median(ac);
    std::size_t dominant = 1;
    for (std::size_t k = 2; k <= half; ++k)
        if (rep.power[k] > rep.power[dominant]) dominant = k;
    rep.dominant_freq = rep.frequencies[dominant];

    double peak;
    if (expected_freq) {
        const double kb = *expected_freq * double(seglen);
        const long k0 = std::lround(kb);
        if (k0 < 1 || std::size_t(k0) > half) {
            rep.snr = 0.0;  // drive frequency not representable on this grid
            rep.detected = false;
            return rep;
        }
        const std::size_t lo = std::size_t(std::max(1L, k0 - 1));
        const std::size_t hi = std::size_t(std::min(long(half), k0 + 1));
        peak = *std::max_element(rep.power.begin() + std::ptrdiff_t(lo),
                                 rep.power.begin() + std::ptrdiff_t(hi + 1));
    } else {
        peak = rep.power[dominant];
    }
    rep.snr = bg > 0.0 ? peak / bg : (peak > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    rep.detected = rep.snr >= detection_snr;
    return rep;
}

SweepResult threshold_sweep(const std::vector<double>& t_bar_grid, double angle_measure,
                            std::uint64_t trials_per_point, double detection_snr,
                            const RngStream& rng, int axes, std::uint64_t min_steps) {
    if (t_bar_grid.size() < 3) throw ParameterError("threshold_sweep: grid too small");
    const auto [lo, hi] = std::minmax_element(t_bar_grid.begin(), t_bar_grid.end());
    if (!(*hi / *lo >= 100.0) || !(*lo < 1.0 && *hi > 1.0))
        throw ParameterError("threshold_sweep: grid must span two decades around 1");
    if (trials_per_point < 1) throw ParameterError("threshold_sweep: trials must be >= 1");

    SweepResult result;
    for (std::size_t gi = 0; gi < t_bar_grid.size(); ++gi) {
        const double t_bar = t_bar_grid[gi];
        OscillationConfig config;
        config.t_bar = t_bar;
        config.angle_measure = angle_measure;
        config.axes = axes;
        config.steps = std::max<std::uint64_t>(min_steps, next_pow2(std::size_t(64.0 * t_bar) + 1));

        std::uint64_t detections = 0;
        std::vector<double> snrs;
        for (std::uint64_t trial = 0; trial < trials_per_point; ++trial) {
            config.rng = rng.substream(gi * 1000003ULL + trial);
            const auto series = simulate_oscillation(config);
            const SpectralReport rep =
                spectral_detect(series[0], detection_snr, config.drive_frequency());
            if (rep.detected) ++detections;
            snrs.push_back(rep.snr);
        }
        result.points.push_back({t_bar, double(detections) / double(trials_per_point),
                                 median(snrs), trials_per_point});
    }

    bool any_detected = false, any_missed = false;
    for (const auto& p : result.points) {
        if (p.detection_probability > 0.5) any_detected = true;
        if (p.detection_probability < 0.5) any_missed = true;
    }
    if (!any_detected || !any_missed)
        throw BracketFailureError(
            "threshold_sweep: detection curve does not bracket 50% — widen the grid");

    // logistic fit p(t) = 1/(1+exp(-(ln t - ln t*)/w)) by Newton steps on the
    // Bernoulli log-likelihood in (a, b) with logit = a + b ln t
    double a = 0.0, b = 1.0;
    for (int iter = 0; iter < 200; ++iter) {
        double g0 = 0, g1 = 0, h00 = 0, h01 = 0, h11 = 0;
        for (const auto& pt : result.points) {
            const double xl = std::log(pt.t_bar);
            const double z = a + b * xl;
            const double p = 1.0 / (1.0 + std::exp(-z));
            const double w = double(pt.trials);
            g0 += w * (pt.detection_probability - p);
            g1 += w * (pt.detection_probability - p) * xl;
            const double q = w * p * (1.0 - p);
            h00 += q; h01 += q * xl; h11 += q * xl * xl;
        }
        const double det = h00 * h11 - h01 * h01;
        if (std::abs(det) < 1e-12) break;
        const double da = (h11 * g0 - h01 * g1) / det;
        const double db = (-h01 * g0 + h00 * g1) / det;
        a += da; b += db;
        if (std::abs(da) + std::abs(db) < 1e-10) break;
    }
    if (!(b > 0.0)) throw BracketFailureError("threshold_sweep: degenerate logistic fit");
    result.t_star = std::exp(-a / b);
    result.logistic_width = 1.0 / b;
    return result;
}

}  // namespace sgst
