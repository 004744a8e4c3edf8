// tests/test_extrema.cpp

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

#include <cmath>
#include <cstdlib>
#include <vector>

#include "emdsep/extrema.hpp"
#include "emdsep/rng.hpp"
#include "emdsep/signal.hpp"

using namespace emdsep;

namespace {

// Independent run-based oracle for the plateau rule: group the samples into
// maximal runs of equal value; an interior run bounded by lower (higher)
// runs on both sides is one maximum (minimum) at the run's first index.
void oracle_extrema(const std::vector<double>& x, std::vector<int>& max_idx,
                    std::vector<int>& min_idx) {
  max_idx.clear();
  min_idx.clear();
  const int n = static_cast<int>(x.size());
  std::vector<std::pair<int, int>> runs;  // [first, last]
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(start)]) {
      runs.emplace_back(start, i - 1);
      start = i;
    }
  }
  for (std::size_t r = 1; r + 1 < runs.size(); ++r) {
    const double before = x[static_cast<std::size_t>(runs[r - 1].second)];
    const double val = x[static_cast<std::size_t>(runs[r].first)];
    const double after = x[static_cast<std::size_t>(runs[r + 1].first)];
    if (before < val && after < val) max_idx.push_back(runs[r].first);
    if (before > val && after > val) min_idx.push_back(runs[r].first);
  }
}

// Independent zero-crossing oracle: resolve each zero sample to the sign of
// the next nonzero sample, then count sign flips.
int oracle_zero_crossings(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    const double v = x[static_cast<std::size_t>(i)];
    if (v > 0.0) sign[static_cast<std::size_t>(i)] = 1;
    else if (v < 0.0) sign[static_cast<std::size_t>(i)] = -1;
    else if (i + 1 < n) sign[static_cast<std::size_t>(i)] = sign[static_cast<std::size_t>(i + 1)];
  }
  int count = 0;
  for (int i = 1; i < n; ++i) {
    if (sign[static_cast<std::size_t>(i - 1)] != 0 && sign[static_cast<std::size_t>(i)] != 0 &&
        sign[static_cast<std::size_t>(i - 1)] != sign[static_cast<std::size_t>(i)]) {
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("two dense sine periods give two maxima and two minima") {
  const Signal s = synth_sine(2.0, 1.0, 0.0, 1.0, 1000);
  const ExtremaSet e = find_local_extrema(s);
  CHECK(e.maxima.size() == 2);
  CHECK(e.minima.size() == 2);
}

TEST_CASE("monotone ramp has no extrema") {
  std::vector<double> ramp(64);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i);
  const ExtremaSet e = find_local_extrema(ramp);
  CHECK(e.maxima.empty());
  CHECK(e.minima.empty());
}

TEST_CASE("plateau contributes one extremum at its first index") {
  const std::vector<double> x = {0.0, 1.0, 1.0, 0.0};
  const ExtremaSet e = find_local_extrema(x);
  REQUIRE(e.maxima.size() == 1);
  CHECK(e.maxima[0].index == 1);
  CHECK(e.maxima[0].value == 1.0);
  CHECK(e.minima.empty());
}

TEST_CASE("plateau rule matches the run oracle on all length-4 0/1 signals") {
  for (int bits = 0; bits < 16; ++bits) {
    std::vector<double> x(4);
    for (int i = 0; i < 4; ++i) x[static_cast<std::size_t>(i)] = (bits >> i) & 1;
    CAPTURE(bits);

    std::vector<int> want_max, want_min;
    oracle_extrema(x, want_max, want_min);
    const ExtremaSet got = find_local_extrema(x);

    REQUIRE(got.maxima.size() == want_max.size());
    REQUIRE(got.minima.size() == want_min.size());
    for (std::size_t j = 0; j < want_max.size(); ++j) {
      CHECK(got.maxima[j].index == want_max[j]);
    }
    for (std::size_t j = 0; j < want_min.size(); ++j) {
      CHECK(got.minima[j].index == want_min[j]);
    }
  }
}

TEST_CASE("extrema and crossing counts match oracles on random signals") {
  KeyedRng rng(99, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(64);
    for (double& v : x) {
      // quantized values so plateaus and exact zeros actually occur
      v = std::floor(rng.next_normal() * 2.0) / 2.0;
    }
    CAPTURE(trial);

    std::vector<int> want_max, want_min;
    oracle_extrema(x, want_max, want_min);
    const ExtremaSet got = find_local_extrema(x);
    REQUIRE(got.maxima.size() == want_max.size());
    REQUIRE(got.minima.size() == want_min.size());

    const int want_zc = oracle_zero_crossings(x);
    CHECK(count_zero_crossings(x) == want_zc);

    const bool want_imf =
        std::abs(static_cast<int>(want_max.size() + want_min.size()) - want_zc) <= 1;
    CHECK(is_imf(std::span<const double>(x)) == want_imf);
  }
}

TEST_CASE("is_imf on canonical shapes") {
  const Signal sine = synth_sine(440.0, 1.0, 0.0, 0.25, 8000);
  CHECK(is_imf(sine));

  Signal offset = sine;
  for (double& v : offset.samples) v += 2.0;  // no zero crossings left
  CHECK_FALSE(is_imf(offset));
}

TEST_CASE("endpoints are never extrema") {
  const std::vector<double> x = {5.0, 1.0, 2.0, 0.5, 9.0};
  const ExtremaSet e = find_local_extrema(x);
  for (const Extremum& m : e.maxima) {
    CHECK(m.index > 0);
    CHECK(m.index < static_cast<int>(x.size()) - 1);
  }
  for (const Extremum& m : e.minima) {
    CHECK(m.index > 0);
    CHECK(m.index < static_cast<int>(x.size()) - 1);
  }
}
