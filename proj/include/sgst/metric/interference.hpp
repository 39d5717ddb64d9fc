#pragma once

#include <string>
#include <vector>

#include "sgst/metric/metric4.hpp"
#include "sgst/metric/plane_wave.hpp"

namespace sgst {

enum class InterferenceVariant { TwoSlit1976, PlaneWave2016 };

inline std::string to_string(InterferenceVariant v) {
    return v == InterferenceVariant::TwoSlit1976 ? "two_slit_1976" : "plane_wave_2016";
}

struct InterferencePoint {
    double alpha;
    double density;
};

inline Metric4 interference_source(InterferenceVariant v, double phase) {
    return v == InterferenceVariant::TwoSlit1976
               ? two_slit_metric(phase)
               : plane_wave_metric(PlaneWavePhase::at_alpha(phase));
}

/// Density of the equal-weight superposition of the two variant metrics at
/// phases alpha and beta, evaluated per grid point purely through the 4x4
/// determinant. Analytically this is |cos((a-b)/2)| for the 1976 metrics and
/// cos^2((a-b)/2) for the 2016 metrics; the density is computed, never
/// substituted from those closed forms.
inline std::vector<InterferencePoint> interference_pattern(const std::vector<double>& alpha_grid,
                                                           double beta,
                                                           InterferenceVariant variant) {
    if (alpha_grid.empty()) throw ParameterError("interference_pattern: empty grid");
    std::vector<InterferencePoint> out;
    out.reserve(alpha_grid.size());
    const Metric4 gb = interference_source(variant, beta);
    for (double a : alpha_grid) {
        const Metric4 ga = interference_source(variant, a);
        out.push_back({a, probability_density(superpose_equal(ga, gb))});
    }
    return out;
}

}  // namespace sgst
