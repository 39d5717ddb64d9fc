#include "sgst/geometry/volume.hpp"

#include <cmath>

#include "sgst/core/error.hpp"

namespace sgst {

namespace {

template <typename Scalar>
Complex to_complex(Scalar v) {
    if constexpr (std::is_same_v<Scalar, Complex>) return v;
    else return Complex(v, 0.0);
}

// Volume element sqrt(-det g) * det[xi_1..xi_4] from a center and the 8
// satellite positions (central differences across each +- pair).
template <typename Scalar>
Complex bundle_volume(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& center,
                      const std::array<Vec4<Scalar>, 8>& satellites) {
    Mat4c xi;
    for (int a = 0; a < 4; ++a) {
        const Vec4<Scalar> d =
            (satellites[std::size_t(2 * a)] - satellites[std::size_t(2 * a + 1)]) / Scalar(2);
        for (int mu = 0; mu < 4; ++mu) xi(mu, a) = to_complex<Scalar>(d[mu]);
    }
    const Complex det_xi = xi.determinant();
    const Complex det_g = field.at(center).determinant();
    return std::sqrt(-det_g) * det_xi;
}

// RK4 geodesic march without trajectory recording.
template <typename Scalar>
void advance(const MetricFieldT<Scalar>& field, Vec4<Scalar>& x, Vec4<Scalar>& v, double ds,
             int steps, bool flat) {
    for (int n = 0; n < steps; ++n) {
        if (flat) {
            x += Scalar(ds) * v;
            continue;
        }
        const auto acc = [&](const Vec4<Scalar>& p, const Vec4<Scalar>& vel) {
            return detail::geodesic_accel<Scalar>(christoffel(field, p), vel);
        };
        const Vec4<Scalar> a1 = acc(x, v);
        const Vec4<Scalar> x2 = x + (ds / 2) * v, v2 = v + (ds / 2) * a1;
        const Vec4<Scalar> a2 = acc(x2, v2);
        const Vec4<Scalar> x3 = x + (ds / 2) * v2, v3 = v + (ds / 2) * a2;
        const Vec4<Scalar> a3 = acc(x3, v3);
        const Vec4<Scalar> x4 = x + ds * v3, v4 = v + ds * a3;
        const Vec4<Scalar> a4 = acc(x4, v4);
        x += (ds / 6) * (v + 2.0 * v2 + 2.0 * v3 + v4);
        v += (ds / 6) * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
    }
}

// o(tau) at the five stencil times tau = j * dt, j in {-2..2}.
template <typename Scalar>
std::array<Complex, 5> volume_series(const MetricFieldT<Scalar>& field,
                                     const VolumeProbeT<Scalar>& probe, bool flat) {
    const double delta = probe.offset;
    const Vec4<Scalar>& T = probe.tangent;

    // Covariantly comoving start: satellite velocity = T - Gamma(T, xi).
    std::array<Vec4<Scalar>, 8> pos;
    std::array<Vec4<Scalar>, 8> vel;
    ChristoffelSet gamma0;
    if (!flat) gamma0 = christoffel(field, probe.position);
    for (int a = 0; a < 4; ++a) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            const double sign = sgn == 0 ? 1.0 : -1.0;
            Vec4<Scalar> xi = Vec4<Scalar>::Zero();
            xi[a] = Scalar(sign * delta);
            Vec4<Scalar> v = T;
            if (!flat) {
                for (int mu = 0; mu < 4; ++mu) {
                    Scalar corr = Scalar(0);
                    for (int al = 0; al < 4; ++al) {
                        const Complex g = gamma0.at(mu, al, a);
                        if constexpr (std::is_same_v<Scalar, Complex>) {
                            corr += g * T[al] * xi[a];
                        } else {
                            corr += g.real() * T[al] * xi[a];
                        }
                    }
                    v[mu] -= corr;
                }
            }
            pos[std::size_t(2 * a + sgn)] = probe.position + xi;
            vel[std::size_t(2 * a + sgn)] = v;
        }
    }

    std::array<Complex, 5> o{};
    const double ds = probe.tau_step / probe.substeps;

    for (int direction = 0; direction < 2; ++direction) {
        const double step = direction == 0 ? ds : -ds;
        Vec4<Scalar> xc = probe.position, vc = T;
        auto p = pos;
        auto v = vel;
        if (direction == 0) o[2] = bundle_volume(field, xc, p);
        for (int j = 1; j <= 2; ++j) {
            advance(field, xc, vc, step, probe.substeps, flat);
            for (int b = 0; b < 8; ++b)
                advance(field, p[std::size_t(b)], v[std::size_t(b)], step, probe.substeps, flat);
            o[std::size_t(direction == 0 ? 2 + j : 2 - j)] = bundle_volume(field, xc, p);
        }
    }
    return o;
}

Complex second_derivative_5pt(const std::array<Complex, 5>& o, double dt) {
    return (-o[4] + 16.0 * o[3] - 30.0 * o[2] + 16.0 * o[1] - o[0]) / (12.0 * dt * dt);
}

}  // namespace

template <typename Scalar>
VolumeEvolutionT<Scalar> volume_evolution(const MetricFieldT<Scalar>& field,
                                          const VolumeProbeT<Scalar>& probe) {
    if (probe.offset <= 0 || probe.tau_step <= 0 || probe.substeps < 1)
        throw ParameterError("volume_evolution: offset, tau_step, substeps must be positive");

    const auto curved = volume_series(field, probe, /*flat=*/false);
    const Complex o0 = curved[2];
    for (const Complex& o : curved)
        if (std::abs(o) < 1e-18 * std::abs(o0))
            throw IllConditionedProbeError("volume_evolution: bundle volume collapsed");

    // Flat comparison: identical probe in the coordinate-frozen field
    // (curvature off). For this covariantly comoving bundle the apparent
    // coordinate change is zero, so the term only removes stencil bias.
    const Mat4c g0 = field.at(probe.position);
    MetricFieldT<Scalar> frozen;
    frozen.evaluator = [g0](const Vec4<Scalar>&) { return g0; };
    frozen.smoothness_scale = field.smoothness_scale;
    const auto flat = volume_series(frozen, probe, /*flat=*/true);

    VolumeEvolutionT<Scalar> out;
    out.volume0 = o0;
    out.flat_term = second_derivative_5pt(flat, probe.tau_step);
    out.lhs = second_derivative_5pt(curved, probe.tau_step) - out.flat_term;

    const RicciTerms terms = ricci_terms(field, probe.position);
    const Mat4c r = double(ricci_sign_convention()) * terms.combine();
    Complex rtt = 0.0;
    double tmag = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        tmag += std::abs(to_complex<Scalar>(probe.tangent[mu]));
        for (int nu = 0; nu < 4; ++nu)
            rtt += r(mu, nu) * to_complex<Scalar>(probe.tangent[mu]) *
                   to_complex<Scalar>(probe.tangent[nu]);
    }
    out.rhs = -o0 * rtt;

    const double cancel = std::abs(o0) * terms.cancellation_scale() * tmag * tmag;
    out.scale = std::max({std::abs(out.lhs), std::abs(out.rhs), cancel, 1e-300});
    out.residual = std::abs(out.lhs - out.rhs) / out.scale;
    return out;
}

template VolumeEvolutionT<double> volume_evolution<double>(const MetricField&,
                                                           const VolumeProbeT<double>&);
template VolumeEvolutionT<Complex> volume_evolution<Complex>(const MetricFieldC&,
                                                             const VolumeProbeT<Complex>&);

}  // namespace sgst
