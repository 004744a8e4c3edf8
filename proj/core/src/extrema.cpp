// core/src/extrema.cpp

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

#include "emdsep/extrema.hpp"

#include <cmath>
#include <cstdlib>

namespace emdsep {

ExtremaSet find_local_extrema(std::span<const double> x) {
  ExtremaSet out;
  find_local_extrema_into(x, out);
  return out;
}

void find_local_extrema_into(std::span<const double> x, ExtremaSet& out) {
  out.maxima.clear();
  out.minima.clear();
  const int n = static_cast<int>(x.size());
  if (n < 3) return;

  int i = 1;
  while (i < n - 1) {
    // skip samples that do not start a candidate run
    if (!(x[i] != x[i - 1])) {
      ++i;
      continue;
    }
    // j = last index of the flat run starting at i
    int j = i;
    while (j + 1 < n && x[j + 1] == x[i]) ++j;
    if (j == n - 1) break;  // run touches the endpoint: not an extremum

    const bool up_before = x[i - 1] < x[i];
    const bool down_after = x[j + 1] < x[i];
    if (up_before && down_after) {
      out.maxima.push_back({i, x[i]});
    } else if (!up_before && !down_after) {
      out.minima.push_back({i, x[i]});
    }
    i = j + 1;
  }
}

bool has_enough_extrema(std::span<const double> samples) {
  const ExtremaSet e = find_local_extrema(samples);
  return e.maxima.size() >= 2 && e.minima.size() >= 2;
}

int count_zero_crossings(std::span<const double> x) {
  int count = 0;
  int last_sign = 0;
  for (double v : x) {
    if (v == 0.0) continue;  // adopts the following sample's sign
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++count;
    last_sign = s;
  }
  return count;
}

bool is_imf(std::span<const double> samples) {
  const ExtremaSet e = find_local_extrema(samples);
  const int crossings = count_zero_crossings(samples);
  return std::abs(e.count() - crossings) <= 1;
}

}  // namespace emdsep
