// core/include/emdsep/spectrogram.hpp

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

#ifndef EMDSEP_SPECTROGRAM_HPP
#define EMDSEP_SPECTROGRAM_HPP

#include <string>
#include <vector>

#include "emdsep/signal.hpp"

namespace emdsep {

// Hann-windowed short-time magnitude spectrum.  rows = frames in time
// order; each row has frame_len/2 + 1 bins.
struct Spectrogram {
  std::vector<std::vector<double>> magnitudes;
  int frame_len = 0;
  int hop = 0;
  int sample_rate = 0;

  int frames() const { return static_cast<int>(magnitudes.size()); }
  int bins() const { return frame_len / 2 + 1; }
  double bin_hz(int bin) const {
    return static_cast<double>(bin) * sample_rate / frame_len;
  }
};

// frame count = floor((N - frame_len)/hop) + 1.  Rejects signals shorter
// than one frame, frame_len < 2, or hop outside (0, frame_len].
Spectrogram spectrogram(const Signal& signal, int frame_len, int hop);

// One row per frame, one column per bin ("bin0".."binB"), for external
// plotting tools.
void write_spectrogram_csv(const std::string& path, const Spectrogram& spec);

}  // namespace emdsep

#endif  // EMDSEP_SPECTROGRAM_HPP
