#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sgst/core/error.hpp"
#include "sgst/types.hpp"

namespace sgst {

inline std::array<std::string, 4> default_labels() { return {"x", "y", "z", "t"}; }

/// A 4x4 complex symmetric metric with coordinate labels. Construction
/// symmetrizes via (M + M^T)/2; asymmetry beyond 1e-12 is rejected so a
/// genuinely lopsided matrix cannot silently pass as a metric.
struct Metric4 {
    Mat4c entries = Mat4c::Identity();
    std::array<std::string, 4> coordinate_labels = default_labels();

    Metric4() = default;

    explicit Metric4(const Mat4c& m, std::array<std::string, 4> labels = default_labels())
        : coordinate_labels(std::move(labels)) {
        const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
        if (asym > 1e-12)
            throw ParameterError("Metric4: input asymmetry " + std::to_string(asym) +
                                 " exceeds 1e-12");
        entries = (m + m.transpose()) / 2.0;
    }

    static Metric4 minkowski() {
        Mat4c m = Mat4c::Identity();
        m(3, 3) = Complex(-1.0, 0.0);
        return Metric4(m);
    }

    static Metric4 diagonal(Complex a, Complex b, Complex c, Complex d,
                            std::array<std::string, 4> labels = default_labels()) {
        Mat4c m = Mat4c::Zero();
        m(0, 0) = a; m(1, 1) = b; m(2, 2) = c; m(3, 3) = d;
        return Metric4(m, std::move(labels));
    }

    bool is_real(double tol = 1e-12) const {
        return entries.imag().cwiseAbs().maxCoeff() < tol;
    }

    bool same_frame(const Metric4& other) const {
        return coordinate_labels == other.coordinate_labels;
    }
};

/// Determinant of a 4x4 complex matrix (Eigen closed-form cofactor path).
template <typename Derived>
typename Derived::Scalar det4(const Eigen::MatrixBase<Derived>& m) {
    static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4);
    return m.determinant();
}

inline Complex det4(const Metric4& m) { return det4(m.entries); }

/// sqrt(-Re det g) — the relative probability density attached to a metric.
/// Defined only for determinants on the physical branch: Re det <= 0 (up to
/// roundoff) and negligible imaginary part.
inline double probability_density(const Metric4& m) {
    const Complex d = det4(m);
    constexpr double tol = 1e-9;
    if (std::abs(d.imag()) >= tol)
        throw NonphysicalDeterminantError("probability_density: determinant has imaginary part " +
                                          std::to_string(d.imag()));
    if (d.real() > tol)
        throw NonphysicalDeterminantError("probability_density: determinant has positive real part " +
                                          std::to_string(d.real()));
    return std::sqrt(std::max(0.0, -d.real()));
}

/// Probability-weighted mixture of metrics. Weights must sum to 1.
struct MetricMixture {
    std::vector<std::pair<double, Metric4>> components;

    void validate() const {
        if (components.empty()) throw ParameterError("MetricMixture: no components");
        double sum = 0.0;
        for (const auto& [w, m] : components) {
            (void)m;
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw ParameterError("MetricMixture: weights sum to " + std::to_string(sum));
        for (std::size_t i = 1; i < components.size(); ++i)
            if (!components[i].second.same_frame(components[0].second))
                throw CoordinateFrameError("MetricMixture: mismatched coordinate labels");
    }
};

/// Entrywise weighted sum g(3) = sum_i P_i g(i).
inline Metric4 superpose(const MetricMixture& mix) {
    mix.validate();
    Mat4c sum = Mat4c::Zero();
    for (const auto& [w, m] : mix.components) sum += w * m.entries;
    return Metric4(sum, mix.components[0].second.coordinate_labels);
}

inline Metric4 superpose_equal(const Metric4& a, const Metric4& b) {
    return superpose(MetricMixture{{{0.5, a}, {0.5, b}}});
}

/// Quadratic-form change of basis G' = W^T G W (transpose, not adjoint).
/// Preserves symmetry; requires |det W| > 1e-12.
template <typename Derived>
Metric4 congruence_transform(const Metric4& g, const Eigen::MatrixBase<Derived>& w) {
    static_assert(Derived::RowsAtCompileTime == 4 && Derived::ColsAtCompileTime == 4);
    const Mat4c wc = w.template cast<Complex>();
    if (std::abs(wc.determinant()) <= 1e-12)
        throw SingularTransformError("congruence_transform: |det W| <= 1e-12");
    const Mat4c out = wc.transpose() * g.entries * wc;
    // Symmetry is exact up to roundoff for symmetric G; symmetrize anyway.
    return Metric4((out + out.transpose()) / 2.0, g.coordinate_labels);
}

/// The scaled rotation-like mixer with (-i, 1)/sqrt(2) in the z,t block: the
/// basis change that turns the complex diagonal two-slit metric into a real
/// one. det = -1, |det| = 1.
inline Mat4c zt_mixer_w() {
    const double r = 1.0 / std::sqrt(2.0);
    Mat4c w = Mat4c::Identity();
    w(2, 2) = Complex(0, -r); w(2, 3) = Complex(r, 0);
    w(3, 2) = Complex(r, 0);  w(3, 3) = Complex(0, -r);
    return w;
}

}  // namespace sgst
