// tests/test_spline.cpp

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

#include <doctest.h>

#include <vector>

#include "emdsep/rng.hpp"
#include "emdsep/spline.hpp"

using namespace emdsep;

TEST_CASE("spline through constant knots is constant") {
  CubicSpline s;
  const std::vector<double> xs = {0.0, 3.0, 7.0, 11.0};
  const std::vector<double> ys = {2.5, 2.5, 2.5, 2.5};
  s.fit(xs, ys);
  for (double x = -2.0; x <= 13.0; x += 0.5) {
    CHECK(s(x) == doctest::Approx(2.5).epsilon(1e-12));
  }
}

TEST_CASE("two knots degenerate to the chord") {
  CubicSpline s;
  s.fit(std::vector<double>{1.0, 5.0}, std::vector<double>{2.0, 10.0});
  CHECK(s(1.0) == doctest::Approx(2.0));
  CHECK(s(3.0) == doctest::Approx(6.0));
  CHECK(s(5.0) == doctest::Approx(10.0));
  // linear continuation outside the knots
  CHECK(s(0.0) == doctest::Approx(0.0));
  CHECK(s(6.0) == doctest::Approx(12.0));
}

TEST_CASE("spline interpolates every knot exactly") {
  KeyedRng rng(3, 1);
  std::vector<double> xs, ys;
  double x = 0.0;
  for (int i = 0; i < 12; ++i) {
    x += 1.0 + 4.0 * rng.next_unit();
    xs.push_back(x);
    ys.push_back(rng.next_normal());
  }
  CubicSpline s;
  s.fit(xs, ys);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::abs(s(xs[i]) - ys[i]) <= 1e-10);
  }
}

TEST_CASE("natural boundary: curvature vanishes at the end knots") {
  CubicSpline s;
  const std::vector<double> xs = {0.0, 2.0, 5.0, 6.0, 9.0};
  const std::vector<double> ys = {1.0, -2.0, 0.5, 3.0, -1.0};
  s.fit(xs, ys);
  const double h = 1e-4;
  const double curv_left = (s(xs.front() + h) - 2 * s(xs.front()) + s(xs.front() - h)) / (h * h);
  const double curv_right = (s(xs.back() + h) - 2 * s(xs.back()) + s(xs.back() - h)) / (h * h);
  CHECK(std::abs(curv_left) <= 1e-3);
  CHECK(std::abs(curv_right) <= 1e-3);
}

TEST_CASE("uniform evaluation agrees with single-site evaluation") {
  CubicSpline s;
  const std::vector<double> xs = {-3.0, 1.0, 4.0, 9.5, 15.0};
  const std::vector<double> ys = {0.2, -1.0, 2.0, 1.5, -0.7};
  s.fit(xs, ys);
  std::vector<double> out(13);
  s.evaluate_uniform(13, out);
  for (int i = 0; i < 13; ++i) {
    CHECK(out[static_cast<std::size_t>(i)] ==
          doctest::Approx(s(static_cast<double>(i))).epsilon(1e-13));
  }
}

TEST_CASE("spline rejects bad knot sets") {
  CubicSpline s;
  CHECK_THROWS(s.fit(std::vector<double>{1.0}, std::vector<double>{1.0}));
  CHECK_THROWS(s.fit(std::vector<double>{1.0, 1.0}, std::vector<double>{1.0, 2.0}));
  CHECK_THROWS(s.fit(std::vector<double>{2.0, 1.0}, std::vector<double>{1.0, 2.0}));
}
