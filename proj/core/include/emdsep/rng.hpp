// core/include/emdsep/rng.hpp

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

#ifndef EMDSEP_RNG_HPP
#define EMDSEP_RNG_HPP

#include <cstdint>

#include "emdsep/signal.hpp"

namespace emdsep {

// Stateless keyed random stream built on splitmix64.  Every (seed, stream)
// pair names an independent sequence, so ensemble trials can run in any
// order or in parallel without changing their draws.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  double next_unit();    // uniform in (0, 1)
  double next_normal();  // standard normal via Box-Muller

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Standard normal i.i.d. samples keyed by (base_seed, trial_index).  The
// same key always reproduces the same sequence.
Signal gaussian_noise(int length, std::uint64_t base_seed,
                      std::uint64_t trial_index, int sample_rate = 8000);

}  // namespace emdsep

#endif  // EMDSEP_RNG_HPP
