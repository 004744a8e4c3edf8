// core/include/emdsep/extrema.hpp

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

#ifndef EMDSEP_EXTREMA_HPP
#define EMDSEP_EXTREMA_HPP

#include <span>
#include <vector>

#include "emdsep/signal.hpp"

namespace emdsep {

struct Extremum {
  int index = 0;
  double value = 0.0;
};

// Strict local extrema of a sampled signal.  A flat run bounded on both
// sides by lower (resp. higher) samples contributes one maximum (resp.
// minimum) at the run's first index.  Signal endpoints are never extrema.
struct ExtremaSet {
  std::vector<Extremum> maxima;
  std::vector<Extremum> minima;

  int count() const {
    return static_cast<int>(maxima.size() + minima.size());
  }
};

ExtremaSet find_local_extrema(std::span<const double> samples);
inline ExtremaSet find_local_extrema(const Signal& signal) {
  return find_local_extrema(std::span(signal.samples));
}

// Allocation-free variant for hot loops: clears and refills `out`.
void find_local_extrema_into(std::span<const double> samples, ExtremaSet& out);

// True when the signal has at least two maxima and two minima, i.e. both
// envelopes can be formed without relying on boundary extension alone.
bool has_enough_extrema(std::span<const double> samples);

// Sign changes between consecutive samples; a zero sample counts with the
// sign of the sample that follows it.
int count_zero_crossings(std::span<const double> samples);

// IMF test: |#extrema - #zero_crossings| <= 1 with the counting rules above.
bool is_imf(std::span<const double> samples);
inline bool is_imf(const Signal& candidate) {
  return is_imf(std::span(candidate.samples));
}

}  // namespace emdsep

#endif  // EMDSEP_EXTREMA_HPP
