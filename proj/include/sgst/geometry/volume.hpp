#pragma once

#include "sgst/geometry/geodesic.hpp"

namespace sgst {

/// A small geodesic bundle for the volume-evolution law
///   D^2 o / dtau^2  -  D^2_flat o / dtau^2  =  -o R_{mu nu} T^mu T^nu.
/// Eight satellites at +-offset along each coordinate axis ride geodesics
/// with covariantly comoving initial velocities (D xi / dtau = 0), so the
/// bundle starts with zero expansion; o(tau) = sqrt(-det g) det[xi_1..xi_4].
template <typename Scalar>
struct VolumeProbeT {
    Vec4<Scalar> position = Vec4<Scalar>::Zero();
    Vec4<Scalar> tangent = Vec4<Scalar>::Zero();  // T = dx/dtau at tau = 0
    double offset = 1e-3;        // satellite separation (coordinate units)
    double tau_step = 1e-2;      // stencil spacing along tau
    int substeps = 8;            // RK4 integration substeps per stencil spacing
};
using VolumeProbe = VolumeProbeT<double>;

template <typename Scalar>
struct VolumeEvolutionT {
    Complex lhs;         // d^2 o/dtau^2 minus the flat-coordinate term
    Complex flat_term;   // the same probe with curvature switched off
    Complex rhs;         // -o R_{mu nu} T^mu T^nu
    Complex volume0;     // o at tau = 0
    double scale;        // normalization used for the residual
    double residual;     // |lhs - rhs| / scale
};
using VolumeEvolution = VolumeEvolutionT<double>;

template <typename Scalar>
VolumeEvolutionT<Scalar> volume_evolution(const MetricFieldT<Scalar>& field,
                                          const VolumeProbeT<Scalar>& probe);

/// Residual |LHS - RHS| / max(|LHS|, |RHS|, cancellation scale, eps).
template <typename Scalar>
double volume_evolution_residual(const MetricFieldT<Scalar>& field,
                                 const VolumeProbeT<Scalar>& probe) {
    return volume_evolution(field, probe).residual;
}

}  // namespace sgst
