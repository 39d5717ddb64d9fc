#pragma once

#include <Eigen/Dense>
#include <complex>

namespace sgst {

using Complex = std::complex<double>;

template <typename Scalar> using Mat4 = Eigen::Matrix<Scalar, 4, 4>;
template <typename Scalar> using Vec4 = Eigen::Matrix<Scalar, 4, 1>;

using Mat4c = Mat4<Complex>;
using Mat4d = Mat4<double>;
using Vec4c = Vec4<Complex>;
using Vec4d = Vec4<double>;

inline constexpr const char* kToolkitVersion = "sgst 0.1.0";

}  // namespace sgst
