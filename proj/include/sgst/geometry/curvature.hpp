#pragma once

#include <array>

#include "sgst/geometry/metric_field.hpp"

namespace sgst {

/// Christoffel symbols of the second kind, gamma[lambda](mu, nu), symmetric
/// in the lower pair.
struct ChristoffelSet {
    std::array<Mat4c, 4> gamma;

    Complex at(int lambda, int mu, int nu) const {
        return gamma[std::size_t(lambda)](mu, nu);
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& g : gamma) m = std::max(m, g.cwiseAbs().maxCoeff());
        return m;
    }
};

/// The four contributions to R_{mu nu} before signs are combined:
///   R = d_lam Gamma^lam_{mu nu} - d_nu Gamma^lam_{mu lam}
///     + Gamma^lam_{lam sig} Gamma^sig_{mu nu} - Gamma^lam_{nu sig} Gamma^sig_{mu lam}
/// Exposed so callers can judge cancellation scales (the volume probe does).
struct RicciTerms {
    Mat4c div_gamma;       // d_lam Gamma^lam_{mu nu}
    Mat4c grad_trace;      // d_nu Gamma^lam_{mu lam}
    Mat4c trace_product;   // Gamma^lam_{lam sig} Gamma^sig_{mu nu}
    Mat4c cross_product;   // Gamma^lam_{nu sig} Gamma^sig_{mu lam}

    Mat4c combine() const { return div_gamma - grad_trace + trace_product - cross_product; }
    double cancellation_scale() const {
        return div_gamma.cwiseAbs().maxCoeff() + grad_trace.cwiseAbs().maxCoeff() +
               trace_product.cwiseAbs().maxCoeff() + cross_product.cwiseAbs().maxCoeff();
    }
};

inline constexpr double kFdStepFactor = 1e-4;     // h = factor * smoothness scale
inline constexpr double kSingularDetTol = 1e-9;   // |det g| at or below this is singular

template <typename Scalar>
ChristoffelSet christoffel(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                           double step_factor = kFdStepFactor);

inline ChristoffelSet christoffel(const MetricField& field, double z, double t) {
    return christoffel(field, Vec4d(0.0, 0.0, z, t));
}

template <typename Scalar>
RicciTerms ricci_terms(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                       double step_factor = kFdStepFactor);

/// Ricci tensor under the convention locked by calibration against the
/// plane-wave metric (see ricci_sign_convention).
template <typename Scalar>
Mat4c ricci(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
            double step_factor = kFdStepFactor);

inline Mat4c ricci(const MetricField& field, double z, double t) {
    return ricci(field, Vec4d(0.0, 0.0, z, t));
}

/// +1 or -1: the overall Ricci sign that reproduces R_zt = -3 k w / 2 on the
/// plane-wave calibration metric. Computed once and cached; throws
/// NumericalError if neither sign matches.
int ricci_sign_convention();

/// Richardson convergence ratio |D_h - D_{h/2}| / |D_{h/2} - D_{h/4}| of the
/// Christoffel stencil; second-order differences give ~4 on smooth fields.
template <typename Scalar>
double christoffel_richardson_ratio(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                                    double step_factor = kFdStepFactor);

}  // namespace sgst
