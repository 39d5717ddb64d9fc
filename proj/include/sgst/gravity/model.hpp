#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sgst/core/constants.hpp"
#include "sgst/core/rng.hpp"
#include "sgst/geometry/metric_field.hpp"

namespace sgst {

/// Indeterminacy u(r) = 1 - r_s/r: the migration-gate probability, 1 in
/// empty space and 0 at the indeterminacy radius. Physical queries are
/// restricted to r > r_s; r_s = 0 gives u == 1 everywhere.
struct IndeterminacyField {
    double r_s = 0.0;

    double u(double r, bool physical = true) const;
};

/// ds^2 = -u dt^2 + u^-1 dr^2 + r^2 dOmega^2 with u = 1 - r_s/r. The
/// product g_tt * g_rr is -1 identically for this form.
struct LineElement {
    double r_s = 0.0;

    double g_tt(double r) const;
    double g_rr(double r) const;

    /// Full spherical metric field diag(r^2, r^2 sin^2 theta, 1/u, -u) in
    /// coordinates (theta, phi, r, t); evaluation at r <= r_s throws.
    /// characteristic_r sizes the finite-difference scale.
    MetricField to_metric_field(double characteristic_r) const;
};

double schwarzschild_radius(double mass_kg, double k, const PlanckUnits& units = planck_units());

LineElement assemble_line_element(double r_s);

/// Radial occupation profile. dwell_counts are steps spent per bin,
/// visit_counts are site arrivals per bin; dwell per visit is geometric
/// with mean 1/u, so dwell_counts[i]/visit_counts[i] tracks predicted[i]
/// (1/u at the bin midpoint, normalized over the same bins) regardless of
/// where the walkers started.
struct RadialDwellProfile {
    std::vector<double> bin_edges;           // size bins+1, radii in lattice steps
    std::vector<std::uint64_t> dwell_counts;
    std::vector<std::uint64_t> visit_counts;
    std::vector<double> predicted;

    double bin_mid(std::size_t i) const { return (bin_edges[i] + bin_edges[i + 1]) / 2.0; }
    double mean_stay(std::size_t i) const {
        return visit_counts[i] ? double(dwell_counts[i]) / double(visit_counts[i]) : 0.0;
    }
};

/// Radial +-1 lattice walk (measure 0.5) gated per step by u(r): the gate
/// passes (the venue migrates) with probability u. Walkers at r <= r_s are
/// absorbed and stop accumulating. Radii are integer lattice steps.
RadialDwellProfile radial_migration_mc(const IndeterminacyField& field, std::int64_t start_r,
                                       std::uint64_t walkers, std::uint64_t steps,
                                       const RngStream& rng, std::int64_t bin_width = 10,
                                       std::int64_t r_max = 0 /* 0: 3x start */);

struct CovariantDistanceRow {
    double r;
    double contravariant_distance;  // the coordinate distance: just r
    double covariant_coordinate;    // xi_1(r) = r / (1 - r_s/r)
};

/// Tabulates the covariant radial coordinate against r on a geometric
/// approach to r_s from r_bar: finite contravariant distance, divergent
/// covariant one.
std::vector<CovariantDistanceRow> covariant_distance_demo(double r_bar, double r_s,
                                                          std::size_t samples);

}  // namespace sgst
