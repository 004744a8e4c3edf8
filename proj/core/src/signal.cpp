// core/src/signal.cpp

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

#include "emdsep/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace emdsep {

void validate(const Signal& signal, const char* context) {
  if (signal.samples.empty()) {
    throw std::invalid_argument(std::string(context) + ": empty signal");
  }
  if (signal.sample_rate <= 0) {
    throw std::invalid_argument(std::string(context) +
                                ": sample rate must be positive");
  }
  for (double v : signal.samples) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument(std::string(context) +
                                  ": non-finite sample value");
    }
  }
}

double energy(std::span<const double> x) {
  double e = 0.0;
  for (double v : x) e += v * v;
  return e;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) d += a[i] * b[i];
  return d;
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double m = 0.0;
  for (double v : x) m += v;
  return m / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double m = mean(x);
  double var = 0.0;
  for (double v : x) var += (v - m) * (v - m);
  return std::sqrt(var / static_cast<double>(x.size()));
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

Signal synth_sine(double freq_hz, double amplitude, double phase_rad,
                  double duration_s, int sample_rate) {
  if (sample_rate <= 0) {
    throw std::invalid_argument("synth_sine: sample rate must be positive");
  }
  if (!(freq_hz > 0.0) || freq_hz >= sample_rate / 2.0) {
    throw std::invalid_argument(
        "synth_sine: frequency " + std::to_string(freq_hz) +
        " Hz must lie in (0, " + std::to_string(sample_rate / 2.0) +
        ") Hz at " + std::to_string(sample_rate) + " Hz sampling");
  }
  if (!(duration_s > 0.0)) {
    throw std::invalid_argument("synth_sine: duration must be positive");
  }
  const auto length = static_cast<long long>(std::llround(duration_s * sample_rate));
  if (length < 1) {
    throw std::invalid_argument("synth_sine: duration rounds to zero samples");
  }

  Signal out;
  out.sample_rate = sample_rate;
  out.samples.resize(static_cast<std::size_t>(length));
  const double w = 2.0 * std::numbers::pi * freq_hz / sample_rate;
  for (long long n = 0; n < length; ++n) {
    out.samples[static_cast<std::size_t>(n)] =
        amplitude * std::sin(w * static_cast<double>(n) + phase_rad);
  }
  return out;
}

Signal mix(const Signal& a, const Signal& b, double gain_a, double gain_b,
           bool* truncated) {
  if (a.sample_rate != b.sample_rate) {
    throw std::invalid_argument("mix: sample rate mismatch (" +
                                std::to_string(a.sample_rate) + " vs " +
                                std::to_string(b.sample_rate) + " Hz)");
  }
  const std::size_t n = std::min(a.samples.size(), b.samples.size());
  if (n == 0) throw std::invalid_argument("mix: empty input signal");
  if (truncated) *truncated = a.samples.size() != b.samples.size();

  Signal out;
  out.sample_rate = a.sample_rate;
  out.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.samples[i] = gain_a * a.samples[i] + gain_b * b.samples[i];
  }
  return out;
}

NoisyMix mix_at_snr(const Signal& clean, const Signal& noise, double snr_db) {
  if (clean.sample_rate != noise.sample_rate) {
    throw std::invalid_argument("mix_at_snr: sample rate mismatch");
  }
  if (clean.samples.size() != noise.samples.size()) {
    throw std::invalid_argument("mix_at_snr: length mismatch");
  }
  const double e_clean = energy(clean);
  const double e_noise = energy(noise);
  if (e_clean <= 0.0) {
    throw std::invalid_argument("mix_at_snr: clean signal has zero energy");
  }
  if (e_noise <= 0.0) {
    throw std::invalid_argument("mix_at_snr: noise has zero energy");
  }

  // E(g*noise) = E(clean) / 10^(snr/10)
  const double g = std::sqrt(e_clean / (e_noise * std::pow(10.0, snr_db / 10.0)));

  NoisyMix out;
  out.scaled_noise.sample_rate = noise.sample_rate;
  out.noisy.sample_rate = clean.sample_rate;
  const std::size_t n = clean.samples.size();
  out.scaled_noise.samples.resize(n);
  out.noisy.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.scaled_noise.samples[i] = g * noise.samples[i];
    out.noisy.samples[i] = clean.samples[i] + out.scaled_noise.samples[i];
  }
  return out;
}

}  // namespace emdsep
