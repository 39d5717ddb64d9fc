#pragma once

#include <array>
#include <string>
#include <vector>

#include "sgst/metric/metric4.hpp"

namespace sgst {

/// One entry of the F catalog: a real metric family F(alpha) = C*Pc + S*Ps
/// (C = cos alpha, S = sin alpha) together with the coordinate transform that
/// produces it from the plane-wave metric. All eight coordinate matrices are
/// singular, hence det F = 0 identically.
struct FCatalogEntry {
    std::string name;                             // "F1".."F8"
    Mat4d pattern_cos;                            // coefficient of cos(alpha)
    Mat4d pattern_sin;                            // coefficient of sin(alpha)
    Mat4c coordinate_matrix;                      // rows: x',y',z',t' in x,y,z,t
    std::array<std::string, 4> coordinate_lines;  // the transform, human-readable

    Metric4 metric_at(double alpha) const;
};

/// The eight F families with their coordinate-transform tables.
const std::vector<FCatalogEntry>& f_metric_catalog();

/// F metric by 1-based index.
Metric4 f_metric(int index, double alpha);

}  // namespace sgst
