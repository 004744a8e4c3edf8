// core/include/emdsep/spline.hpp

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

#ifndef EMDSEP_SPLINE_HPP
#define EMDSEP_SPLINE_HPP

#include <span>
#include <vector>

namespace emdsep {

// Natural cubic spline: second derivative forced to zero at both end knots,
// so two knots degenerate to a straight line.  Sites outside the knot range
// are extrapolated linearly with the end-segment slope.
class CubicSpline {
 public:
  // Knot x values must be strictly increasing; at least 2 knots.
  void fit(std::span<const double> xs, std::span<const double> ys);

  // Evaluates at the integer sites 0, 1, ..., n-1 in one sweep.
  void evaluate_uniform(int n, std::span<double> out) const;

  double operator()(double x) const;

  int knot_count() const { return static_cast<int>(x_.size()); }

 private:
  double eval_segment(int seg, double x) const;
  double extrapolate(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
  std::vector<double> diag_, upper_, rhs_;  // solver scratch, reused
};

}  // namespace emdsep

#endif  // EMDSEP_SPLINE_HPP
