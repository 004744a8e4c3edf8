// core/src/emd.cpp

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

#include "emdsep/emd.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "emdsep/errors.hpp"

namespace emdsep {

namespace {

// Builds spline knots from one kind of extrema, reflecting up to two of them
// across each end of the signal so the spline interpolates (rather than
// extrapolates) over [0, n-1].  Extrema indices are interior, so mirrored
// knots land strictly outside the signal range and stay sorted.
void mirror_extend(const std::vector<Extremum>& extrema, int n,
                   std::vector<double>& xs, std::vector<double>& ys) {
  xs.clear();
  ys.clear();
  const int k = static_cast<int>(extrema.size());
  const int ext = std::min(2, k);

  for (int j = ext - 1; j >= 0; --j) {
    xs.push_back(-static_cast<double>(extrema[j].index));
    ys.push_back(extrema[j].value);
  }
  for (const Extremum& e : extrema) {
    xs.push_back(static_cast<double>(e.index));
    ys.push_back(e.value);
  }
  const double right = 2.0 * (n - 1);
  for (int j = 0; j < ext; ++j) {
    xs.push_back(right - extrema[k - 1 - j].index);
    ys.push_back(extrema[k - 1 - j].value);
  }
}

}  // namespace

Signal Decomposition::reconstruct() const {
  Signal out = residue;
  for (const Signal& imf : imfs) {
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
      out.samples[i] += imf.samples[i];
    }
  }
  return out;
}

Signal envelope(const Signal& signal, const std::vector<Extremum>& knots,
                BoundaryPolicy /*boundary*/) {
  validate(signal, "envelope");
  if (knots.empty()) {
    throw InsufficientExtrema("envelope: no extrema to interpolate");
  }
  std::vector<double> xs, ys;
  mirror_extend(knots, signal.size(), xs, ys);

  CubicSpline spline;
  spline.fit(xs, ys);

  Signal out;
  out.sample_rate = signal.sample_rate;
  out.samples.resize(signal.samples.size());
  spline.evaluate_uniform(signal.size(), out.samples);
  return out;
}

Signal sift_once(const Signal& signal, const SiftConfig& config) {
  validate(signal, "sift_once");
  Sifter sifter(config);
  std::vector<double> m;
  if (!sifter.mean_envelope(signal.samples, m)) {
    throw InsufficientExtrema("sift_once: need at least 2 maxima and 2 minima");
  }
  Signal out;
  out.sample_rate = signal.sample_rate;
  out.samples.resize(signal.samples.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.samples[i] = signal.samples[i] - m[i];
  }
  return out;
}

double sd_criterion(std::span<const double> prev, std::span<const double> curr) {
  const std::size_t n = std::min(prev.size(), curr.size());
  double sd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (prev[i] == 0.0) continue;
    const double d = prev[i] - curr[i];
    sd += (d * d) / (prev[i] * prev[i]);
  }
  return sd;
}

Sifter::Sifter(SiftConfig config) : config_(config) {}

bool Sifter::mean_envelope(std::span<const double> x, std::vector<double>& mean) {
  find_local_extrema_into(x, extrema_);
  if (extrema_.maxima.size() < 2 || extrema_.minima.size() < 2) return false;
  mean_envelope_from_extrema(x, mean);
  return true;
}

// Spline envelopes through the extrema already stored in extrema_.
void Sifter::mean_envelope_from_extrema(std::span<const double> x,
                                        std::vector<double>& mean) {
  const int n = static_cast<int>(x.size());
  mirror_extend(extrema_.maxima, n, knot_x_, knot_y_);
  upper_.fit(knot_x_, knot_y_);
  upper_env_.resize(x.size());
  upper_.evaluate_uniform(n, upper_env_);

  mirror_extend(extrema_.minima, n, knot_x_, knot_y_);
  lower_.fit(knot_x_, knot_y_);
  lower_env_.resize(x.size());
  lower_.evaluate_uniform(n, lower_env_);

  mean.resize(x.size());
  for (int i = 0; i < n; ++i) {
    mean[i] = 0.5 * (upper_env_[i] + lower_env_[i]);
  }
}

namespace {

double rms(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::sqrt(energy(x) / static_cast<double>(x.size()));
}

}  // namespace

bool Sifter::extract_imf(std::span<const double> x, std::vector<double>& imf) {
  if (!mean_envelope(x, mean_)) return false;

  const std::size_t n = x.size();
  work_.resize(n);
  for (std::size_t i = 0; i < n; ++i) work_[i] = x[i] - mean_[i];
  double sd = sd_criterion(x, work_);

  for (int iter = 1; iter < config_.max_sift_iterations; ++iter) {
    if (sd < config_.sd_threshold) break;
    find_local_extrema_into(work_, extrema_);
    if (extrema_.maxima.size() < 2 || extrema_.minima.size() < 2) {
      break;  // cannot sift further; accept as-is
    }
    // Both IMF conditions: extrema/crossing balance plus a near-zero mean
    // envelope.  The envelope doubles as the next sift step when we continue.
    const bool condition1 =
        std::abs(extrema_.count() -
                 count_zero_crossings(std::span<const double>(work_))) <= 1;
    mean_envelope_from_extrema(work_, mean_);
    if (condition1 &&
        rms(mean_) <= config_.mean_env_rms_tol * rms(work_)) {
      break;
    }
    next_.resize(n);
    for (std::size_t i = 0; i < n; ++i) next_[i] = work_[i] - mean_[i];
    sd = sd_criterion(work_, next_);
    std::swap(work_, next_);
  }

  imf = work_;
  return true;
}

Decomposition emd(const Signal& signal, const SiftConfig& config, int max_imfs) {
  validate(signal, "emd");

  Decomposition out;
  out.residue = signal;

  Sifter sifter(config);
  std::vector<double> imf;
  while (max_imfs <= 0 || static_cast<int>(out.imfs.size()) < max_imfs) {
    if (!sifter.extract_imf(out.residue.samples, imf)) break;
    Signal mode;
    mode.sample_rate = signal.sample_rate;
    mode.samples = imf;
    for (std::size_t i = 0; i < out.residue.samples.size(); ++i) {
      out.residue.samples[i] -= imf[i];
    }
    out.imfs.push_back(std::move(mode));
  }
  return out;
}

}  // namespace emdsep
