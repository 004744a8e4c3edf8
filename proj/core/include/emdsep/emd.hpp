// core/include/emdsep/emd.hpp

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

#ifndef EMDSEP_EMD_HPP
#define EMDSEP_EMD_HPP

#include <span>
#include <vector>

#include "emdsep/extrema.hpp"
#include "emdsep/signal.hpp"
#include "emdsep/spline.hpp"

namespace emdsep {

enum class BoundaryPolicy {
  mirror,  // reflect two extrema of each kind across the signal ends
};

struct SiftConfig {
  double sd_threshold = 0.2;
  int max_sift_iterations = 100;
  BoundaryPolicy boundary = BoundaryPolicy::mirror;
  // Approximate form of the second IMF condition: the candidate's mean
  // envelope must be this small, in RMS, relative to the candidate.  Exact
  // zero is unattainable on sampled data.
  double mean_env_rms_tol = 0.05;
};

// Ordered IMFs (high frequency first) plus the final residue.  Every
// component has the source signal's length and sample rate, and
// sum(imfs) + residue telescopes back to the input exactly up to
// floating-point rounding.
struct Decomposition {
  std::vector<Signal> imfs;
  Signal residue;

  int source_length() const { return residue.size(); }
  Signal reconstruct() const;
};

// Natural cubic spline through the given extrema of one kind, evaluated at
// every sample index after boundary extension.  Throws InsufficientExtrema
// when fewer than 2 knots are available even after extension.
Signal envelope(const Signal& signal, const std::vector<Extremum>& knots,
                BoundaryPolicy boundary = BoundaryPolicy::mirror);

// One sifting pass: subtracts the mean of upper and lower envelopes.
// Requires at least 2 maxima and 2 minima.
Signal sift_once(const Signal& signal, const SiftConfig& config);

// Cauchy-style convergence sum between consecutive sift iterates:
//   SD = sum_n (prev[n]-curr[n])^2 / prev[n]^2,
// skipping terms where prev[n] == 0.
double sd_criterion(std::span<const double> prev, std::span<const double> curr);
inline double sd_criterion(const Signal& prev, const Signal& curr) {
  return sd_criterion(std::span(prev.samples), std::span(curr.samples));
}

// Full empirical mode decomposition.  Extraction stops once the running
// residue lacks 2 maxima or 2 minima, or after max_imfs modes when
// max_imfs > 0.
Decomposition emd(const Signal& signal, const SiftConfig& config = {},
                  int max_imfs = 0);

// Reusable sifting engine.  Scratch buffers persist across calls, which
// matters inside ensemble trial loops; one instance per thread.
class Sifter {
 public:
  explicit Sifter(SiftConfig config = {});

  // Extracts one IMF from x.  Returns false (imf untouched) when x lacks
  // the extrema needed to form both envelopes.
  bool extract_imf(std::span<const double> x, std::vector<double>& imf);

  // Mean of upper and lower envelopes; false when extrema are insufficient.
  bool mean_envelope(std::span<const double> x, std::vector<double>& mean);

  const SiftConfig& config() const { return config_; }

 private:
  void mean_envelope_from_extrema(std::span<const double> x,
                                  std::vector<double>& mean);

  SiftConfig config_;
  CubicSpline upper_, lower_;
  ExtremaSet extrema_;
  std::vector<double> knot_x_, knot_y_;
  std::vector<double> upper_env_, lower_env_;
  std::vector<double> work_, next_, mean_;
};

}  // namespace emdsep

#endif  // EMDSEP_EMD_HPP
