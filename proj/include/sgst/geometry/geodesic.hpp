#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgst/geometry/curvature.hpp"
#include "sgst/walk/walk.hpp"

namespace sgst {

template <typename Scalar>
struct GeodesicStateT {
    Vec4<Scalar> position = Vec4<Scalar>::Zero();
    Vec4<Scalar> velocity = Vec4<Scalar>::Zero();
    double s = 0.0;  // affine parameter
};
using GeodesicState = GeodesicStateT<double>;

template <typename Scalar>
struct TrajectoryT {
    std::vector<GeodesicStateT<Scalar>> samples;
    bool truncated = false;
    std::string diagnostic;
};
using Trajectory = TrajectoryT<double>;

namespace detail {

template <typename Scalar>
Vec4<Scalar> geodesic_accel(const ChristoffelSet& cs, const Vec4<Scalar>& v) {
    Vec4<Scalar> acc = Vec4<Scalar>::Zero();
    for (int lam = 0; lam < 4; ++lam) {
        Scalar sum = Scalar(0);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const Complex g = cs.at(lam, mu, nu);
                if constexpr (std::is_same_v<Scalar, Complex>) {
                    sum += g * v[mu] * v[nu];
                } else {
                    sum += g.real() * v[mu] * v[nu];
                }
            }
        acc[lam] = -sum;
    }
    return acc;
}

}  // namespace detail

/// Classic fixed-step RK4 on x'' = -Gamma(x) x' x'. When `stochastic` is
/// supplied (real-scalar paths only), each completed step applies a granular
/// migration kick to the spatial coordinates: gated by the indeterminacy
/// coin, each axis moves +-step_length by its measure coin. A singularity on
/// the way truncates the trajectory and sets the diagnostic.
template <typename Scalar>
TrajectoryT<Scalar> geodesic_integrate(const MetricFieldT<Scalar>& field,
                                       const GeodesicStateT<Scalar>& start, std::size_t steps,
                                       double ds, const WalkConfig* stochastic = nullptr,
                                       RngStream rng = RngStream()) {
    TrajectoryT<Scalar> traj;
    traj.samples.reserve(steps + 1);
    traj.samples.push_back(start);

    GeodesicStateT<Scalar> cur = start;
    for (std::size_t n = 0; n < steps; ++n) {
        try {
            const auto gamma_at = [&](const Vec4<Scalar>& p) { return christoffel(field, p); };

            const Vec4<Scalar> x0 = cur.position, v0 = cur.velocity;
            const Vec4<Scalar> a1 = detail::geodesic_accel<Scalar>(gamma_at(x0), v0);
            const Vec4<Scalar> x2 = x0 + (ds / 2) * v0, v2 = v0 + (ds / 2) * a1;
            const Vec4<Scalar> a2 = detail::geodesic_accel<Scalar>(gamma_at(x2), v2);
            const Vec4<Scalar> x3 = x0 + (ds / 2) * v2, v3 = v0 + (ds / 2) * a2;
            const Vec4<Scalar> a3 = detail::geodesic_accel<Scalar>(gamma_at(x3), v3);
            const Vec4<Scalar> x4 = x0 + ds * v3, v4 = v0 + ds * a3;
            const Vec4<Scalar> a4 = detail::geodesic_accel<Scalar>(gamma_at(x4), v4);

            cur.position = x0 + (ds / 6) * (v0 + 2.0 * v2 + 2.0 * v3 + v4);
            cur.velocity = v0 + (ds / 6) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
            cur.s += ds;
        } catch (const SingularMetricError& e) {
            traj.truncated = true;
            traj.diagnostic = std::string("singularity at step ") + std::to_string(n) + ": " + e.what();
            break;
        }

        if (stochastic) {
            if constexpr (std::is_same_v<Scalar, double>) {
                if (coin(rng, stochastic->indeterminacy) == CoinFace::Heads) {
                    for (int axis = 0; axis < 3; ++axis) {
                        const int dir =
                            coin(rng, stochastic->measures[std::size_t(axis)]) == CoinFace::Heads
                                ? 1 : -1;
                        cur.position[axis] += dir * stochastic->step_length;
                    }
                }
            }
        }
        traj.samples.push_back(cur);
    }
    return traj;
}

/// g_{mu nu} x'^mu x'^nu along the path — conserved on exact geodesics.
template <typename Scalar>
Complex line_element_norm(const MetricFieldT<Scalar>& field, const GeodesicStateT<Scalar>& st) {
    const Mat4c g = field.at(st.position);
    Complex sum = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            if constexpr (std::is_same_v<Scalar, Complex>) {
                sum += g(mu, nu) * st.velocity[mu] * st.velocity[nu];
            } else {
                sum += g(mu, nu) * Complex(st.velocity[mu] * st.velocity[nu], 0.0);
            }
        }
    return sum;
}

}  // namespace sgst
