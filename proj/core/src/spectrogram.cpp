// core/src/spectrogram.cpp

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

#include "emdsep/spectrogram.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "emdsep/csv.hpp"

namespace emdsep {

Spectrogram spectrogram(const Signal& signal, int frame_len, int hop) {
  validate(signal, "spectrogram");
  if (frame_len < 2) {
    throw std::invalid_argument("spectrogram: frame_len must be >= 2");
  }
  if (hop < 1 || hop > frame_len) {
    throw std::invalid_argument("spectrogram: hop must be in (0, frame_len]");
  }
  const int n = signal.size();
  if (n < frame_len) {
    throw std::invalid_argument("spectrogram: signal shorter than one frame");
  }

  Spectrogram out;
  out.frame_len = frame_len;
  out.hop = hop;
  out.sample_rate = signal.sample_rate;

  std::vector<double> window(static_cast<std::size_t>(frame_len));
  for (int i = 0; i < frame_len; ++i) {
    window[static_cast<std::size_t>(i)] =
        0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * i / (frame_len - 1));
  }

  const int bins = frame_len / 2 + 1;
  const int frames = (n - frame_len) / hop + 1;
  out.magnitudes.resize(static_cast<std::size_t>(frames));

  // Direct real DFT per frame; frames are short, so O(frame_len^2) is fine
  // and keeps the module dependency-free.
  std::vector<double> frame(static_cast<std::size_t>(frame_len));
  for (int f = 0; f < frames; ++f) {
    const int start = f * hop;
    for (int i = 0; i < frame_len; ++i) {
      frame[static_cast<std::size_t>(i)] =
          window[static_cast<std::size_t>(i)] *
          signal.samples[static_cast<std::size_t>(start + i)];
    }
    auto& row = out.magnitudes[static_cast<std::size_t>(f)];
    row.resize(static_cast<std::size_t>(bins));
    for (int b = 0; b < bins; ++b) {
      double re = 0.0, im = 0.0;
      const double w = -2.0 * std::numbers::pi * b / frame_len;
      for (int i = 0; i < frame_len; ++i) {
        re += frame[static_cast<std::size_t>(i)] * std::cos(w * i);
        im += frame[static_cast<std::size_t>(i)] * std::sin(w * i);
      }
      row[static_cast<std::size_t>(b)] = std::sqrt(re * re + im * im);
    }
  }
  return out;
}

void write_spectrogram_csv(const std::string& path, const Spectrogram& spec) {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  const int bins = spec.bins();
  header.reserve(static_cast<std::size_t>(bins));
  columns.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    header.push_back("bin" + std::to_string(b));
    auto& col = columns[static_cast<std::size_t>(b)];
    col.reserve(spec.magnitudes.size());
    for (const auto& row : spec.magnitudes) {
      col.push_back(row[static_cast<std::size_t>(b)]);
    }
  }
  write_csv(path, header, columns);
}

}  // namespace emdsep
