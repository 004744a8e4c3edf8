// core/include/emdsep/signal.hpp

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

#ifndef EMDSEP_SIGNAL_HPP
#define EMDSEP_SIGNAL_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace emdsep {

// Uniformly sampled real-valued time series.  Amplitudes are dimensionless
// (typically in [-1, 1]); sample_rate is in Hz.
struct Signal {
  std::vector<double> samples;
  int sample_rate = 8000;

  int size() const { return static_cast<int>(samples.size()); }
  double duration_s() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
  double& operator[](std::size_t i) { return samples[i]; }
  double operator[](std::size_t i) const { return samples[i]; }
};

// Throws std::invalid_argument unless the signal is non-empty, all samples
// are finite, and the sample rate is positive.
void validate(const Signal& signal, const char* context = "signal");

// -- small numeric helpers shared across modules ----------------------------

double energy(std::span<const double> x);        // sum of squares
double dot(std::span<const double> a, std::span<const double> b);
double mean(std::span<const double> x);
double stddev(std::span<const double> x);        // population standard deviation
double max_abs(std::span<const double> x);

inline double energy(const Signal& s) { return energy(std::span(s.samples)); }
inline double stddev(const Signal& s) { return stddev(std::span(s.samples)); }

// -- synthesis and mixing ----------------------------------------------------

// samples[n] = amplitude * sin(2*pi*freq_hz*n/sample_rate + phase_rad),
// length = round(duration_s * sample_rate).  Rejects frequencies outside
// (0, sample_rate/2) and non-positive durations.
Signal synth_sine(double freq_hz, double amplitude, double phase_rad,
                  double duration_s, int sample_rate);

// gain_a*a + gain_b*b, samplewise.  Sample rates must match.  Unequal lengths
// are truncated to the shortest; *truncated (when non-null) reports whether
// that happened.
Signal mix(const Signal& a, const Signal& b, double gain_a, double gain_b,
           bool* truncated = nullptr);

struct NoisyMix {
  Signal noisy;         // clean + scaled noise
  Signal scaled_noise;  // g * noise, kept for reference-based metrics
};

// Scales `noise` by g so that 10*log10(E(clean)/E(g*noise)) == snr_db and
// returns clean + g*noise along with the scaled noise.  Rejects zero-energy
// clean or noise and mismatched rates/lengths.
NoisyMix mix_at_snr(const Signal& clean, const Signal& noise, double snr_db);

}  // namespace emdsep

#endif  // EMDSEP_SIGNAL_HPP
