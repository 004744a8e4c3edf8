// core/include/emdsep/metrics.hpp

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

#ifndef EMDSEP_METRICS_HPP
#define EMDSEP_METRICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "emdsep/emd.hpp"
#include "emdsep/signal.hpp"

namespace emdsep {

// Signal-to-distortion ratio in dB: 10*log10(||ref||^2 / ||ref - est||^2).
// Note this penalizes gain mismatch; it is not the projection-based
// BSS-eval SDR.  Returns +infinity when the estimate is exact.
double sdr(const Signal& reference, const Signal& estimate);

// 10*log10(||clean||^2 / ||degraded - clean||^2); +infinity when equal.
double snr(const Signal& clean, const Signal& degraded);

// Split of an estimate into a rescaled-reference target plus interference,
// noise, and artifact errors.  The four parts always sum back to the
// estimate.
struct ErrorDecomposition {
  Signal target;
  Signal e_interf;
  Signal e_noise;
  Signal e_artif;
};

ErrorDecomposition decompose_error(
    const Signal& reference, const Signal& estimate,
    const Signal* noise_ref = nullptr,
    const std::vector<Signal>* interferers = nullptr);

// Signal-to-artifact ratio in dB:
//   10*log10(||target + e_interf + e_noise||^2 / ||e_artif||^2).
// +infinity when there are no artifacts; rejects a zero-energy numerator.
double sar(const ErrorDecomposition& error);

// Partition of decomposition modes (IMFs plus, as the last element, the
// residue) into one group per reference signal.
struct Assignment {
  std::vector<std::vector<int>> groups;  // mode indices per reference
  std::vector<Signal> estimates;         // per-reference sum of its modes
  std::vector<double> per_source_sdr_db;
  double total_sdr_db = 0.0;
  double mean_sdr_db = 0.0;
};

// Searches over assignments of each mode to a reference and returns the one
// maximizing the sum of per-reference SDRs.  Exhaustive up to 16 modes;
// greedy by normalized correlation above that.
Assignment assign_imfs(const Decomposition& decomposition,
                       const std::vector<Signal>& references);

// Greedy assignment only (each mode goes to the reference it correlates
// with best); exposed for comparison against the exhaustive search.
Assignment assign_imfs_greedy(const Decomposition& decomposition,
                              const std::vector<Signal>& references);

struct PerSourceMetrics {
  std::string source_id;
  double sdr_db = 0.0;
  double sar_db = 0.0;
};

struct MetricsReport {
  double sdr_db = 0.0;
  double sar_db = 0.0;
  std::optional<double> snr_db;
  std::vector<PerSourceMetrics> per_source;
};

// JSON object; infinities render as the string "inf".
std::string to_json_string(const MetricsReport& report);

// CSV row in the experiment tables' column order (snr_db,sdr_db,sar_db).
std::vector<std::string> metrics_csv_header();
std::vector<std::string> to_csv_row(const MetricsReport& report);

}  // namespace emdsep

#endif  // EMDSEP_METRICS_HPP
