// core/src/rng.cpp

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

#include "emdsep/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace emdsep {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

KeyedRng::KeyedRng(std::uint64_t seed, std::uint64_t stream) {
  // Mix seed and stream through two rounds so nearby keys decorrelate.
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s = stream ^ 0xd1b54a32d192ed03ULL;
  std::uint64_t b = splitmix64(s);
  state_ = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

std::uint64_t KeyedRng::next_u64() { return splitmix64(state_); }

double KeyedRng::next_unit() {
  // 53-bit mantissa, offset by half an ulp so the value is never 0 or 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double KeyedRng::next_normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Signal gaussian_noise(int length, std::uint64_t base_seed,
                      std::uint64_t trial_index, int sample_rate) {
  if (length < 1) {
    throw std::invalid_argument("gaussian_noise: length must be >= 1");
  }
  KeyedRng rng(base_seed, trial_index);
  Signal out;
  out.sample_rate = sample_rate;
  out.samples.resize(static_cast<std::size_t>(length));
  for (double& v : out.samples) v = rng.next_normal();
  return out;
}

}  // namespace emdsep
