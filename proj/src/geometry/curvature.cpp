#include "sgst/geometry/curvature.hpp"

#include <mutex>

#include "sgst/core/error.hpp"
#include "sgst/metric/f_catalog.hpp"

namespace sgst {

namespace {

template <typename Scalar>
struct Stencil {
    Mat4c g;
    Mat4c ginv;
    std::array<Mat4c, 4> dg;                    // d_mu g
    std::array<std::array<Mat4c, 4>, 4> d2g;    // d_mu d_nu g

    static Stencil first_order(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                               double step_factor) {
        Stencil s;
        s.g = field.at(pos);
        if (std::abs(s.g.determinant()) <= kSingularDetTol)
            throw SingularMetricError("christoffel: |det g| <= 1e-9 at evaluation point");
        s.ginv = s.g.inverse();
        for (int mu = 0; mu < 4; ++mu) {
            const double h = step_factor * field.smoothness_scale[mu];
            Vec4<Scalar> pp = pos, pm = pos;
            pp[mu] += Scalar(h);
            pm[mu] -= Scalar(h);
            s.dg[std::size_t(mu)] = (field.at(pp) - field.at(pm)) / (2.0 * h);
        }
        return s;
    }

    void add_second_order(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                          double step_factor) {
        for (int mu = 0; mu < 4; ++mu) {
            const double hm = step_factor * field.smoothness_scale[mu];
            for (int nu = mu; nu < 4; ++nu) {
                const double hn = step_factor * field.smoothness_scale[nu];
                Mat4c dd;
                if (mu == nu) {
                    Vec4<Scalar> pp = pos, pm = pos;
                    pp[mu] += Scalar(hm);
                    pm[mu] -= Scalar(hm);
                    dd = (field.at(pp) - 2.0 * g + field.at(pm)) / (hm * hm);
                } else {
                    Vec4<Scalar> a = pos, b = pos, c = pos, d = pos;
                    a[mu] += Scalar(hm); a[nu] += Scalar(hn);
                    b[mu] += Scalar(hm); b[nu] -= Scalar(hn);
                    c[mu] -= Scalar(hm); c[nu] += Scalar(hn);
                    d[mu] -= Scalar(hm); d[nu] -= Scalar(hn);
                    dd = (field.at(a) - field.at(b) - field.at(c) + field.at(d)) / (4.0 * hm * hn);
                }
                d2g[std::size_t(mu)][std::size_t(nu)] = dd;
                d2g[std::size_t(nu)][std::size_t(mu)] = dd;
            }
        }
    }

    ChristoffelSet christoffel() const {
        ChristoffelSet cs;
        for (int lam = 0; lam < 4; ++lam) cs.gamma[std::size_t(lam)].setZero();
        for (int lam = 0; lam < 4; ++lam)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu; nu < 4; ++nu) {
                    Complex sum = 0.0;
                    for (int sig = 0; sig < 4; ++sig)
                        sum += ginv(lam, sig) * (dg[std::size_t(mu)](sig, nu) +
                                                 dg[std::size_t(nu)](sig, mu) -
                                                 dg[std::size_t(sig)](mu, nu));
                    cs.gamma[std::size_t(lam)](mu, nu) = 0.5 * sum;
                    cs.gamma[std::size_t(lam)](nu, mu) = cs.gamma[std::size_t(lam)](mu, nu);
                }
        return cs;
    }

    // d_rho Gamma^lam_{mu nu}, assembled from dg, d2g and d ginv.
    std::array<ChristoffelSet, 4> dchristoffel() const {
        std::array<Mat4c, 4> dginv;
        for (int rho = 0; rho < 4; ++rho)
            dginv[std::size_t(rho)] = -ginv * dg[std::size_t(rho)] * ginv;

        std::array<ChristoffelSet, 4> out;
        for (int rho = 0; rho < 4; ++rho) {
            for (int lam = 0; lam < 4; ++lam) out[std::size_t(rho)].gamma[std::size_t(lam)].setZero();
            for (int lam = 0; lam < 4; ++lam)
                for (int mu = 0; mu < 4; ++mu)
                    for (int nu = mu; nu < 4; ++nu) {
                        Complex sum = 0.0;
                        for (int sig = 0; sig < 4; ++sig) {
                            sum += dginv[std::size_t(rho)](lam, sig) *
                                   (dg[std::size_t(mu)](sig, nu) + dg[std::size_t(nu)](sig, mu) -
                                    dg[std::size_t(sig)](mu, nu));
                            sum += ginv(lam, sig) *
                                   (d2g[std::size_t(rho)][std::size_t(mu)](sig, nu) +
                                    d2g[std::size_t(rho)][std::size_t(nu)](sig, mu) -
                                    d2g[std::size_t(rho)][std::size_t(sig)](mu, nu));
                        }
                        out[std::size_t(rho)].gamma[std::size_t(lam)](mu, nu) = 0.5 * sum;
                        out[std::size_t(rho)].gamma[std::size_t(lam)](nu, mu) =
                            out[std::size_t(rho)].gamma[std::size_t(lam)](mu, nu);
                    }
        }
        return out;
    }
};

}  // namespace

template <typename Scalar>
ChristoffelSet christoffel(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                           double step_factor) {
    return Stencil<Scalar>::first_order(field, pos, step_factor).christoffel();
}

template <typename Scalar>
RicciTerms ricci_terms(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                       double step_factor) {
    auto st = Stencil<Scalar>::first_order(field, pos, step_factor);
    st.add_second_order(field, pos, step_factor);
    const ChristoffelSet cs = st.christoffel();
    const auto dcs = st.dchristoffel();

    RicciTerms terms;
    terms.div_gamma.setZero();
    terms.grad_trace.setZero();
    terms.trace_product.setZero();
    terms.cross_product.setZero();
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Complex t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0;
            for (int lam = 0; lam < 4; ++lam) {
                t1 += dcs[std::size_t(lam)].at(lam, mu, nu);
                t2 += dcs[std::size_t(nu)].at(lam, mu, lam);
                for (int sig = 0; sig < 4; ++sig) {
                    t3 += cs.at(lam, lam, sig) * cs.at(sig, mu, nu);
                    t4 += cs.at(lam, nu, sig) * cs.at(sig, mu, lam);
                }
            }
            terms.div_gamma(mu, nu) = t1;
            terms.grad_trace(mu, nu) = t2;
            terms.trace_product(mu, nu) = t3;
            terms.cross_product(mu, nu) = t4;
        }
    return terms;
}

namespace {

Mat4c ricci_uncalibrated(const MetricField& field, const Vec4d& pos, double step_factor) {
    return ricci_terms(field, pos, step_factor).combine();
}

int calibrate_sign() {
    const double k = 1.3, w = 0.7, z = 0.4, t = 0.25;
    const MetricField field = plane_wave_field(k, w);
    const Mat4c r = ricci_uncalibrated(field, Vec4d(0, 0, z, t), kFdStepFactor);
    const double target = -3.0 * k * w / 2.0;
    const double err_plus = std::abs(r(2, 3).real() - target) + std::abs(r(2, 3).imag());
    const double err_minus = std::abs(-r(2, 3).real() - target) + std::abs(r(2, 3).imag());
    const double tol = 1e-4 * std::abs(target);
    if (err_plus < tol) return 1;
    if (err_minus < tol) return -1;
    throw NumericalError("ricci: sign-convention calibration matched neither sign");
}

}  // namespace

int ricci_sign_convention() {
    static std::once_flag flag;
    static int sign = 0;
    std::call_once(flag, [] { sign = calibrate_sign(); });
    return sign;
}

template <typename Scalar>
Mat4c ricci(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos, double step_factor) {
    return double(ricci_sign_convention()) * ricci_terms(field, pos, step_factor).combine();
}

template <typename Scalar>
double christoffel_richardson_ratio(const MetricFieldT<Scalar>& field, const Vec4<Scalar>& pos,
                                    double step_factor) {
    const ChristoffelSet g1 = christoffel(field, pos, step_factor);
    const ChristoffelSet g2 = christoffel(field, pos, step_factor / 2.0);
    const ChristoffelSet g4 = christoffel(field, pos, step_factor / 4.0);
    double num = 0.0, den = 0.0;
    for (int lam = 0; lam < 4; ++lam) {
        num += (g1.gamma[std::size_t(lam)] - g2.gamma[std::size_t(lam)]).norm();
        den += (g2.gamma[std::size_t(lam)] - g4.gamma[std::size_t(lam)]).norm();
    }
    if (den < 1e-300) throw NumericalError("richardson: differences vanished (field too flat)");
    return num / den;
}

MetricField f_metric_field(int index, double k, double omega) {
    MetricField field;
    field.evaluator = [index, k, omega](const Vec4d& p) {
        return f_metric(index, k * p[2] - omega * p[3]).entries;
    };
    field.smoothness_scale =
        Vec4d::Constant(1.0 / std::max({std::abs(k), std::abs(omega), 1e-9}));
    return field;
}

template ChristoffelSet christoffel<double>(const MetricField&, const Vec4d&, double);
template ChristoffelSet christoffel<Complex>(const MetricFieldC&, const Vec4c&, double);
template RicciTerms ricci_terms<double>(const MetricField&, const Vec4d&, double);
template RicciTerms ricci_terms<Complex>(const MetricFieldC&, const Vec4c&, double);
template Mat4c ricci<double>(const MetricField&, const Vec4d&, double);
template Mat4c ricci<Complex>(const MetricFieldC&, const Vec4c&, double);
template double christoffel_richardson_ratio<double>(const MetricField&, const Vec4d&, double);
template double christoffel_richardson_ratio<Complex>(const MetricFieldC&, const Vec4c&, double);

}  // namespace sgst
