#include "sgst/search/f_verify.hpp"

#include <cmath>

#include "sgst/metric/f_catalog.hpp"
#include "sgst/metric/plane_wave.hpp"

namespace sgst {

namespace {

std::vector<double> phase_grid(int n) {
    std::vector<double> a;
    a.reserve(std::size_t(n));
    for (int j = 0; j < n; ++j) a.push_back(-2.9 + 0.317 * j);  // clear of special angles
    return a;
}

struct ScaleFit {
    double scale;
    double max_err;
};

// Least-squares real scale s minimizing sum |s*M - F|^2, then the worst
// entrywise deviation of s*M from F across the phases.
ScaleFit fit_scale(const std::vector<Mat4c>& ms, const std::vector<Mat4c>& fs) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        num += (ms[i].conjugate().cwiseProduct(fs[i])).sum().real();
        den += ms[i].squaredNorm();
    }
    const double s = den > 0 ? num / den : 0.0;
    double err = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        err = std::max(err, (s * ms[i] - fs[i]).cwiseAbs().maxCoeff());
    return {s, err};
}

}  // namespace

std::vector<FVerificationRecord> verify_f_transforms(int phase_samples, double tolerance) {
    const auto alphas = phase_grid(phase_samples);
    std::vector<FVerificationRecord> records;

    for (const auto& entry : f_metric_catalog()) {
        FVerificationRecord rec;
        rec.name = entry.name;

        const Mat4c A = entry.coordinate_matrix;
        rec.table_matrix_invertible = std::abs(A.determinant()) > 1e-9;

        std::vector<Mat4c> f_at, atga, inv_conv;
        rec.f_metric_singular = true;
        for (double a : alphas) {
            const Mat4c g = plane_wave_metric(PlaneWavePhase::at_alpha(a)).entries;
            const Mat4c f = entry.metric_at(a).entries;
            f_at.push_back(f);
            atga.push_back(A.transpose() * g * A);
            if (rec.table_matrix_invertible) {
                const Mat4c Ai = A.inverse();
                inv_conv.push_back(Ai.transpose() * g * Ai);
            }
            if (std::abs(f.determinant()) >= 1e-9) rec.f_metric_singular = false;
        }

        const ScaleFit direct = fit_scale(atga, f_at);
        if (direct.max_err < tolerance) {
            rec.matched = true;
            rec.convention = "AtGA";
            rec.scale = direct.scale;
            rec.max_abs_error = direct.max_err;
        } else if (rec.table_matrix_invertible) {
            const ScaleFit inv = fit_scale(inv_conv, f_at);
            if (inv.max_err < tolerance) {
                rec.matched = true;
                rec.convention = "invAtGinvA";
                rec.scale = inv.scale;
                rec.max_abs_error = inv.max_err;
            }
        }
        if (!rec.matched) {
            rec.convention = "unmatched";
            rec.max_abs_error = direct.max_err;
        }
        records.push_back(rec);
    }
    return records;
}

}  // namespace sgst
