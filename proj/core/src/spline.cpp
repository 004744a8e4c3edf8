// core/src/spline.cpp

// Copyright 2026  The emdsep Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "emdsep/spline.hpp"

#include <cassert>
#include <stdexcept>

namespace emdsep {

void CubicSpline::fit(std::span<const double> xs, std::span<const double> ys) {
  const int k = static_cast<int>(xs.size());
  if (k < 2 || ys.size() != xs.size()) {
    throw std::invalid_argument("CubicSpline: need >= 2 knots, equal sizes");
  }
  for (int i = 1; i < k; ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw std::invalid_argument("CubicSpline: knot x must be strictly increasing");
    }
  }

  x_.assign(xs.begin(), xs.end());
  y_.assign(ys.begin(), ys.end());
  m_.assign(static_cast<std::size_t>(k), 0.0);
  if (k == 2) return;  // natural spline through 2 knots is the chord

  // Tridiagonal system for interior second derivatives (Thomas algorithm):
  //   h_{i-1} M_{i-1} + 2(h_{i-1}+h_i) M_i + h_i M_{i+1}
  //     = 6 [ (y_{i+1}-y_i)/h_i - (y_i-y_{i-1})/h_{i-1} ]
  const int interior = k - 2;
  diag_.resize(static_cast<std::size_t>(interior));
  upper_.resize(static_cast<std::size_t>(interior));
  rhs_.resize(static_cast<std::size_t>(interior));
  std::vector<double>&diag = diag_, &upper = upper_, &rhs = rhs_;
  for (int i = 0; i < interior; ++i) {
    const double h0 = x_[i + 1] - x_[i];
    const double h1 = x_[i + 2] - x_[i + 1];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0);
  }
  // forward elimination; sub-diagonal of row i is h_i = upper[i-1]... the
  // system is symmetric, so the sub-diagonal entry equals the previous
  // row's upper entry.
  for (int i = 1; i < interior; ++i) {
    const double w = upper[i - 1] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  // back substitution
  m_[interior] = rhs[interior - 1] / diag[interior - 1];
  for (int i = interior - 2; i >= 0; --i) {
    m_[i + 1] = (rhs[i] - upper[i] * m_[i + 2]) / diag[i];
  }
}

double CubicSpline::eval_segment(int seg, double x) const {
  const double h = x_[seg + 1] - x_[seg];
  const double t = x - x_[seg];
  const double slope = (y_[seg + 1] - y_[seg]) / h - h * (2.0 * m_[seg] + m_[seg + 1]) / 6.0;
  return y_[seg] + t * (slope + t * (m_[seg] / 2.0 + t * (m_[seg + 1] - m_[seg]) / (6.0 * h)));
}

double CubicSpline::extrapolate(double x) const {
  const int k = knot_count();
  if (x < x_[0]) {
    const double h = x_[1] - x_[0];
    const double slope = (y_[1] - y_[0]) / h - h * (2.0 * m_[0] + m_[1]) / 6.0;
    return y_[0] + slope * (x - x_[0]);
  }
  const double h = x_[k - 1] - x_[k - 2];
  const double slope = (y_[k - 1] - y_[k - 2]) / h + h * (m_[k - 2] + 2.0 * m_[k - 1]) / 6.0;
  return y_[k - 1] + slope * (x - x_[k - 1]);
}

double CubicSpline::operator()(double x) const {
  assert(knot_count() >= 2);
  const int k = knot_count();
  if (x < x_[0] || x > x_[k - 1]) return extrapolate(x);
  int lo = 0, hi = k - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (x_[mid] <= x) lo = mid; else hi = mid;
  }
  return eval_segment(lo, x);
}

void CubicSpline::evaluate_uniform(int n, std::span<double> out) const {
  assert(knot_count() >= 2);
  assert(static_cast<int>(out.size()) >= n);
  const int k = knot_count();
  int seg = 0;
  for (int i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    if (x < x_[0] || x > x_[k - 1]) {
      out[i] = extrapolate(x);
      continue;
    }
    while (seg < k - 2 && x >= x_[seg + 1]) ++seg;
    out[i] = eval_segment(seg, x);
  }
}

}  // namespace emdsep
