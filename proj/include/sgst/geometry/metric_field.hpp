#pragma once

#include <array>
#include <functional>
#include <string>

#include "sgst/metric/metric4.hpp"
#include "sgst/metric/plane_wave.hpp"
#include "sgst/types.hpp"

namespace sgst {

/// A metric-valued function of position. The evaluator must be pure and
/// deterministic. Positions are 4-vectors (x, y, z, t); fields that depend
/// only on (z, t) wrap via from_zt. The scalar parameter is the coordinate
/// type: double for ordinary fields, Complex when probing complex metrics
/// along complexified paths.
///
/// smoothness_scale gives the per-coordinate characteristic length used to
/// size finite-difference steps (h = 1e-4 * scale by default).
template <typename Scalar>
struct MetricFieldT {
    std::function<Mat4c(const Vec4<Scalar>&)> evaluator;
    Vec4d smoothness_scale = Vec4d::Ones();
    std::array<std::string, 4> coordinate_labels = default_labels();

    Mat4c at(const Vec4<Scalar>& pos) const { return evaluator(pos); }

    static MetricFieldT from_zt(std::function<Mat4c(Scalar z, Scalar t)> f,
                                double scale = 1.0) {
        MetricFieldT field;
        field.evaluator = [f = std::move(f)](const Vec4<Scalar>& p) { return f(p[2], p[3]); };
        field.smoothness_scale = Vec4d::Constant(scale);
        return field;
    }
};

using MetricField = MetricFieldT<double>;
using MetricFieldC = MetricFieldT<Complex>;

namespace detail {
template <typename Scalar>
Complex cis_of(Scalar a) {
    if constexpr (std::is_same_v<Scalar, Complex>) {
        return std::exp(Complex(0, 1) * a);
    } else {
        return cis(a);
    }
}
}  // namespace detail

/// Pure plane-wave field diag(e^{-ia}, e^{-ia}, e^{ia}, -e^{ia}), a = kz - wt.
template <typename Scalar = double>
MetricFieldT<Scalar> plane_wave_field(double k, double omega) {
    MetricFieldT<Scalar> field;
    field.evaluator = [k, omega](const Vec4<Scalar>& p) {
        const Scalar a = Scalar(k) * p[2] - Scalar(omega) * p[3];
        const Complex em = detail::cis_of(Scalar(-1) * a);
        const Complex ep = detail::cis_of(a);
        Mat4c g = Mat4c::Zero();
        g(0, 0) = em; g(1, 1) = em; g(2, 2) = ep; g(3, 3) = -ep;
        return g;
    };
    const double scale = 1.0 / std::max({std::abs(k), std::abs(omega), 1e-9});
    field.smoothness_scale = Vec4d::Constant(scale);
    return field;
}

/// Perturbed field diag(1+be^{-ia}, 1+be^{-ia}, 1+be^{ia}, -1-be^{ia}).
template <typename Scalar = double>
MetricFieldT<Scalar> perturbed_field(double k, double omega, double b) {
    if (!(std::abs(b) < 1.0)) throw ParameterError("perturbed_field: |b| must be < 1");
    MetricFieldT<Scalar> field;
    field.evaluator = [k, omega, b](const Vec4<Scalar>& p) {
        const Scalar a = Scalar(k) * p[2] - Scalar(omega) * p[3];
        const Complex em = 1.0 + b * detail::cis_of(Scalar(-1) * a);
        const Complex ep = 1.0 + b * detail::cis_of(a);
        Mat4c g = Mat4c::Zero();
        g(0, 0) = em; g(1, 1) = em; g(2, 2) = ep; g(3, 3) = -ep;
        return g;
    };
    const double scale = 1.0 / std::max({std::abs(k), std::abs(omega), 1e-9});
    field.smoothness_scale = Vec4d::Constant(scale);
    return field;
}

inline MetricField minkowski_field() {
    MetricField field;
    field.evaluator = [](const Vec4d&) {
        Mat4c g = Mat4c::Identity();
        g(3, 3) = Complex(-1, 0);
        return g;
    };
    return field;
}

/// F-metric field F_i(kz - wt) (singular at every point).
MetricField f_metric_field(int index, double k, double omega);

}  // namespace sgst
