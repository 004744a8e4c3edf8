// core/include/emdsep/ensemble.hpp

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

#ifndef EMDSEP_ENSEMBLE_HPP
#define EMDSEP_ENSEMBLE_HPP

#include <cstdint>

#include "emdsep/emd.hpp"
#include "emdsep/signal.hpp"

namespace emdsep {

struct EnsembleConfig {
  int trials = 100;        // I, the number of noise realizations
  double epsilon0 = 0.2;   // noise amplitude relative to residue std dev
  std::uint64_t base_seed = 0;
  SiftConfig sift;
  int max_imfs = 0;  // 0 -> ceil(log2(N)) + 2 safety cap
  int threads = 0;   // 0 -> hardware concurrency; results identical either way
};

struct EnsembleResult {
  Decomposition decomposition;
  // L2 norm of (signal - raw reconstruction).  For EEMD the raw
  // reconstruction sums the trial-averaged modes and the trial-averaged
  // residue, which misses the signal by design; for CEEMDAN it is the
  // stored decomposition itself and the defect is floating-point rounding.
  double raw_reconstruction_defect = 0.0;
};

int resolve_max_imfs(const EnsembleConfig& config, int signal_length);

// k-th IMF of EMD(noise); the all-zero signal when the decomposition yields
// fewer than k modes.
Signal noise_mode(int k, const Signal& noise, const SiftConfig& sift = {});

// Ensemble EMD: averages the k-th IMFs of EMD(signal + eps0*sigma*w_i)
// across trials, trials lacking mode k contributing zeros.  The stored
// residue is signal - sum(modes) so the result reconstructs exactly; the
// averaging defect is reported separately.
EnsembleResult eemd(const Signal& signal, const EnsembleConfig& config);

// Complete ensemble EMD with adaptive noise.  Stage k feeds the running
// residue plus eps_k * E_k(w_i) back through first-mode extraction, with
// eps_k = epsilon0 * stddev(residue); reconstruction telescopes exactly.
EnsembleResult ceemdan(const Signal& signal, const EnsembleConfig& config);

}  // namespace emdsep

#endif  // EMDSEP_ENSEMBLE_HPP
