#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgst/compton/oscillation.hpp"

namespace sgst {

/// Averaged periodogram of an angle series. The series is differenced,
/// demeaned, zero-padded to a power of two and split into 8 rectangular
/// segments whose periodograms are averaged (a single periodogram's
/// exponential bin statistics would false-alarm ~3% at snr 5; averaging
/// makes the same threshold effectively noise-free). Normalization is such
/// that the one-sided power sums exactly to the mean square of the padded
/// series (Parseval).
struct SpectralReport {
    std::vector<double> frequencies;  // cycles per step, DC..Nyquist
    std::vector<double> power;
    double dominant_freq = 0.0;  // argmax over AC bins
    double snr = 0.0;            // peak/median; at the expected bin when given
    bool detected = false;
    double total_power = 0.0;    // sum of power — equals padded-series variance
    double series_variance = 0.0;
};

inline constexpr int kWelchSegments = 8;

SpectralReport spectral_detect(const std::vector<std::int64_t>& series, double detection_snr,
                               std::optional<double> expected_freq = std::nullopt);

struct SweepPoint {
    double t_bar;
    double detection_probability;
    double median_snr;
    std::uint64_t trials;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    double t_star;           // 50% detection crossing from the logistic fit
    double logistic_width;   // fitted width in log t_bar
};

/// Detection-probability curve over a t_bar grid with a logistic fit for the
/// 50% threshold. The grid must span at least two decades and straddle 1.
/// Throws BracketFailureError when every point detects (or none does).
SweepResult threshold_sweep(const std::vector<double>& t_bar_grid, double angle_measure,
                            std::uint64_t trials_per_point, double detection_snr,
                            const RngStream& rng, int axes = 3,
                            std::uint64_t min_steps = 8192);

}  // namespace sgst
