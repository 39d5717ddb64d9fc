#pragma once

#include <string>
#include <vector>

namespace sgst {

/// Outcome of checking one printed coordinate table against its F metric.
/// Both congruence conventions are tried: F ?= s * A^T G A and
/// F ?= s * (A^-1)^T G A^-1 (the latter only when A is invertible), with the
/// overall scale s fitted by least squares across the sampled phases. A table
/// matching neither convention is reported unmatched, never adjusted.
struct FVerificationRecord {
    std::string name;
    bool matched = false;
    std::string convention;  // "AtGA", "invAtGinvA", or "unmatched"
    double scale = 0.0;
    double max_abs_error = 0.0;
    bool table_matrix_invertible = false;
    bool f_metric_singular = false;  // |det F(alpha)| < 1e-9 at all sampled phases
};

std::vector<FVerificationRecord> verify_f_transforms(int phase_samples = 20,
                                                     double tolerance = 1e-9);

}  // namespace sgst
