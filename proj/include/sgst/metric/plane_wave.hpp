#pragma once

#include <cmath>

#include "sgst/core/error.hpp"
#include "sgst/metric/metric4.hpp"

namespace sgst {

/// Phase bookkeeping for the travelling-wave metrics: alpha = k z - omega t,
/// computed in exactly one place.
struct PlaneWavePhase {
    double k = 0.0;      // wave number, 1/length
    double omega = 0.0;  // angular frequency, 1/time
    double z = 0.0;
    double t = 0.0;

    double alpha() const { return k * z - omega * t; }

    static PlaneWavePhase at_alpha(double a) { return PlaneWavePhase{1.0, 0.0, a, 0.0}; }
};

inline Complex cis(double a) { return Complex(std::cos(a), std::sin(a)); }

/// diag(e^{-ia}, e^{-ia}, e^{ia}, -e^{ia}); det = -1 identically, so
/// sqrt(-det) = 1 at every phase.
inline Metric4 plane_wave_metric(const PlaneWavePhase& phase) {
    const double a = phase.alpha();
    return Metric4::diagonal(cis(-a), cis(-a), cis(a), -cis(a));
}

/// The diagonal two-slit toy metric diag(1, 1, e^{ia}, -e^{-ia}).
inline Metric4 two_slit_metric(double alpha) {
    return Metric4::diagonal(1.0, 1.0, cis(alpha), -cis(-alpha));
}

/// Plane wave riding on a Minkowski background:
/// diag(1+be^{-ia}, 1+be^{-ia}, 1+be^{ia}, -1-be^{ia}). Requires |b| < 1
/// (at |b| >= 1 the diagonal can vanish and the metric degenerate).
inline Metric4 perturbed_metric(const PlaneWavePhase& phase, double b) {
    if (!(std::abs(b) < 1.0))
        throw ParameterError("perturbed_metric: |b| must be < 1");
    const double a = phase.alpha();
    const Complex em = 1.0 + b * cis(-a);
    const Complex ep = 1.0 + b * cis(a);
    return Metric4::diagonal(em, em, ep, -ep);
}

}  // namespace sgst
