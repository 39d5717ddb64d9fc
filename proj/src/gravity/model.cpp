#include "sgst/gravity/model.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

double IndeterminacyField::u(double r, bool physical) const {
    if (r_s < 0.0) throw ParameterError("IndeterminacyField: r_s must be >= 0");
    if (r_s == 0.0) return 1.0;
    if (physical && !(r > r_s))
        throw ParameterError("IndeterminacyField: physical query requires r > r_s");
    return 1.0 - r_s / r;
}

double LineElement::g_tt(double r) const {
    if (!(r > r_s)) throw SingularMetricError("LineElement: r <= r_s");
    return -(1.0 - r_s / r);
}

double LineElement::g_rr(double r) const {
    if (!(r > r_s)) throw SingularMetricError("LineElement: r <= r_s");
    return 1.0 / (1.0 - r_s / r);
}

MetricField LineElement::to_metric_field(double characteristic_r) const {
    if (!(characteristic_r > r_s))
        throw ParameterError("LineElement: characteristic radius must exceed r_s");
    const double rs = r_s;
    MetricField field;
    field.coordinate_labels = {"theta", "phi", "r", "t"};
    field.evaluator = [rs](const Vec4d& p) {
        const double theta = p[0], r = p[2];
        if (!(r > rs)) throw SingularMetricError("schwarzschild field: r <= r_s");
        const double u = 1.0 - rs / r;
        Mat4c g = Mat4c::Zero();
        g(0, 0) = r * r;
        g(1, 1) = r * r * std::sin(theta) * std::sin(theta);
        g(2, 2) = 1.0 / u;
        g(3, 3) = -u;
        return g;
    };
    field.smoothness_scale = Vec4d(0.3, 0.3, characteristic_r, characteristic_r);
    return field;
}

double schwarzschild_radius(double mass_kg, double k, const PlanckUnits& units) {
    if (!(mass_kg > 0.0)) throw ParameterError("schwarzschild_radius: mass must be > 0");
    if (!(k > 0.0)) throw ParameterError("schwarzschild_radius: k must be > 0");
    return k * units.G * mass_kg / (units.c * units.c);
}

LineElement assemble_line_element(double r_s) {
    if (!(r_s > 0.0)) throw ParameterError("assemble_line_element: r_s must be > 0");
    return LineElement{r_s};
}

RadialDwellProfile radial_migration_mc(const IndeterminacyField& field, std::int64_t start_r,
                                       std::uint64_t walkers, std::uint64_t steps,
                                       const RngStream& rng, std::int64_t bin_width,
                                       std::int64_t r_max) {
    const std::int64_t rs = std::int64_t(std::llround(field.r_s));
    if (start_r <= rs) throw ParameterError("radial_migration_mc: start must be above r_s");
    if (walkers < 1 || steps < 1) throw ParameterError("radial_migration_mc: empty run");
    if (bin_width < 1) throw ParameterError("radial_migration_mc: bin width must be >= 1");
    if (r_max == 0) r_max = 3 * start_r;
    if (r_max <= start_r) throw ParameterError("radial_migration_mc: r_max must exceed start");

    const std::size_t bins = std::size_t((r_max - rs + bin_width - 1) / bin_width);
    RadialDwellProfile profile;
    profile.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        profile.bin_edges[i] = double(rs + std::int64_t(i) * bin_width);
    profile.dwell_counts.assign(bins, 0);
    profile.visit_counts.assign(bins, 0);

    const auto bin_of = [&](std::int64_t r) -> std::ptrdiff_t {
        if (r < rs || r >= r_max) return -1;
        return std::ptrdiff_t((r - rs) / bin_width);
    };

    for (std::uint64_t w = 0; w < walkers; ++w) {
        RngStream stream = rng.substream(w);
        std::int64_t r = start_r;
        if (const auto b = bin_of(r); b >= 0) ++profile.visit_counts[std::size_t(b)];
        for (std::uint64_t n = 0; n < steps; ++n) {
            if (r <= rs) break;  // absorbed: migrations cease
            if (const auto b = bin_of(r); b >= 0) ++profile.dwell_counts[std::size_t(b)];
            const double u = field.u(double(r));
            if (coin(stream, u) == CoinFace::Tails) continue;
            r += coin(stream, 0.5) == CoinFace::Heads ? 1 : -1;
            if (const auto b = bin_of(r); b >= 0) ++profile.visit_counts[std::size_t(b)];
        }
    }

    profile.predicted.assign(bins, 0.0);
    double model_sum = 0.0, stay_sum = 0.0;
    for (std::size_t i = 0; i < bins; ++i) {
        const double mid = profile.bin_mid(i);
        if (mid > field.r_s) {
            profile.predicted[i] = 1.0 / field.u(mid);
            model_sum += profile.predicted[i];
        }
        stay_sum += profile.mean_stay(i);
    }
    if (model_sum > 0.0)
        for (double& p : profile.predicted) p *= stay_sum / model_sum;
    return profile;
}

std::vector<CovariantDistanceRow> covariant_distance_demo(double r_bar, double r_s,
                                                          std::size_t samples) {
    if (!(r_s > 0.0)) throw ParameterError("covariant_distance_demo: r_s must be > 0");
    if (!(r_bar > r_s)) throw ParameterError("covariant_distance_demo: r_bar must exceed r_s");
    if (samples < 2) throw ParameterError("covariant_distance_demo: need at least 2 samples");

    // geometric approach in (r/r_s - 1): from the far distance down to 1e-6
    const double x_hi = r_bar / r_s - 1.0;
    const double x_lo = std::min(1e-6, x_hi / 10.0);
    std::vector<CovariantDistanceRow> rows;
    rows.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double f = double(i) / double(samples - 1);
        const double x = x_hi * std::pow(x_lo / x_hi, f);
        const double r = r_s * (1.0 + x);
        rows.push_back({r, r, r / (1.0 - r_s / r)});
    }
    return rows;
}

}  // namespace sgst
