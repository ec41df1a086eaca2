/* Copyright 2026 The Relax Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#include "relax/expm.hpp"

#include <cmath>

namespace relax {
namespace {

// Higham's 1-norm thresholds for Pade orders 3, 5, 7, 9, 13.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

template <typename Mat>
Mat pade_low(const Mat& a, const double* b, int order) {
  const Eigen::Index n = a.rows();
  const Mat a2 = a * a;
  Mat u = b[1] * Mat::Identity(n, n);
  Mat v = b[0] * Mat::Identity(n, n);
  Mat apow = Mat::Identity(n, n);
  for (int k = 1; 2 * k <= order; ++k) {
    apow = apow * a2;
    u += b[2 * k + 1] * apow;
    v += b[2 * k] * apow;
  }
  u = a * u;
  return (v - u).partialPivLu().solve(v + u);
}

template <typename Mat>
Mat pade13(const Mat& a) {
  static const double c[] = {64764752532480000., 32382376266240000.,
                             7771770303897600.,  1187353796428800.,
                             129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,
                             1323241920.,        40840800.,
                             960960.,            16380.,
                             182.,               1.};
  const Eigen::Index n = a.rows();
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a2 * a4;
  Mat u = a * (a6 * (c[13] * a6 + c[11] * a4 + c[9] * a2) + c[7] * a6 +
               c[5] * a4 + c[3] * a2 + c[1] * Mat::Identity(n, n));
  Mat v = a6 * (c[12] * a6 + c[10] * a4 + c[8] * a2) + c[6] * a6 + c[4] * a4 +
          c[2] * a2 + c[0] * Mat::Identity(n, n);
  return (v - u).partialPivLu().solve(v + u);
}

template <typename Mat>
Mat expm_impl(const Mat& m) {
  static const double b3[] = {120., 60., 12., 1.};
  static const double b5[] = {30240., 15120., 3360., 420., 30., 1.};
  static const double b7[] = {17297280., 8648640., 1995840., 277200.,
                              25200.,    1512.,    56.,      1.};
  static const double b9[] = {17643225600., 8821612800., 2075673600.,
                              302702400.,   30270240.,   2162160.,
                              110880.,      3960.,       90.,
                              1.};

  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  if (norm <= kTheta3) return pade_low(m, b3, 3);
  if (norm <= kTheta5) return pade_low(m, b5, 5);
  if (norm <= kTheta7) return pade_low(m, b7, 7);
  if (norm <= kTheta9) return pade_low(m, b9, 9);

  int squarings = 0;
  if (norm > kTheta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  const Mat scaled = m / std::pow(2.0, squarings);
  Mat result = pade13(scaled);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd& m) { return expm_impl(m); }
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) { return expm_impl(m); }

}  // namespace relax
