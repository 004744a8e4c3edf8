// core/src/ensemble.cpp

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

#include "emdsep/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include "emdsep/rng.hpp"

namespace emdsep {

namespace {

int resolve_threads(int requested, int trials) {
  int t = requested > 0 ? requested
                        : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  return std::min(t, trials);
}

// Runs fn(trial, worker) for every trial index, partitioned over workers.
// Workers own disjoint trial sets, so fn needs no locking as long as it
// only touches per-trial slots.
void run_trials(int trials, int threads,
                const std::function<void(int, int)>& fn) {
  if (threads <= 1) {
    for (int i = 0; i < trials; ++i) fn(i, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < trials; i += threads) fn(i, w);
    });
  }
  for (auto& t : pool) t.join();
}

double l2_norm_of_difference(std::span<const double> a,
                             std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

bool all_zero(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
}

}  // namespace

int resolve_max_imfs(const EnsembleConfig& config, int signal_length) {
  if (config.max_imfs > 0) return config.max_imfs;
  const int log2n =
      static_cast<int>(std::ceil(std::log2(std::max(signal_length, 2))));
  return log2n + 2;
}

Signal noise_mode(int k, const Signal& noise, const SiftConfig& sift) {
  if (k < 1) throw std::invalid_argument("noise_mode: k must be >= 1");
  validate(noise, "noise_mode");
  const Decomposition d = emd(noise, sift, k);
  Signal out;
  out.sample_rate = noise.sample_rate;
  if (static_cast<int>(d.imfs.size()) >= k) {
    out.samples = d.imfs[static_cast<std::size_t>(k - 1)].samples;
  } else {
    out.samples.assign(noise.samples.size(), 0.0);
  }
  return out;
}

EnsembleResult eemd(const Signal& signal, const EnsembleConfig& config) {
  validate(signal, "eemd");
  if (config.trials < 1) throw std::invalid_argument("eemd: trials must be >= 1");
  if (!(config.epsilon0 > 0.0)) {
    throw std::invalid_argument("eemd: epsilon0 must be positive");
  }

  const int n = signal.size();
  const int cap = resolve_max_imfs(config, n);
  const int trials = config.trials;
  const int threads = resolve_threads(config.threads, trials);
  const double noise_amp = config.epsilon0 * stddev(signal);

  struct TrialOutput {
    std::vector<std::vector<double>> modes;
    std::vector<double> residue;
  };

  // Trials execute in parallel into per-trial slots; accumulation below
  // walks the slots in trial order so the result is independent of the
  // thread count.
  std::vector<TrialOutput> slots(static_cast<std::size_t>(trials));
  run_trials(trials, threads, [&](int trial, int /*worker*/) {
    const Signal w = gaussian_noise(n, config.base_seed,
                                    static_cast<std::uint64_t>(trial),
                                    signal.sample_rate);
    Signal perturbed;
    perturbed.sample_rate = signal.sample_rate;
    perturbed.samples.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      perturbed.samples[static_cast<std::size_t>(i)] =
          signal.samples[static_cast<std::size_t>(i)] +
          noise_amp * w.samples[static_cast<std::size_t>(i)];
    }
    Decomposition d = emd(perturbed, config.sift, cap);
    TrialOutput& out = slots[static_cast<std::size_t>(trial)];
    out.modes.reserve(d.imfs.size());
    for (Signal& m : d.imfs) out.modes.push_back(std::move(m.samples));
    out.residue = std::move(d.residue.samples);
  });

  std::vector<std::vector<double>> mode_sums;
  std::vector<double> residue_sum(static_cast<std::size_t>(n), 0.0);
  for (const TrialOutput& out : slots) {
    for (std::size_t k = 0; k < out.modes.size(); ++k) {
      if (k >= mode_sums.size()) {
        mode_sums.emplace_back(static_cast<std::size_t>(n), 0.0);
      }
      for (int i = 0; i < n; ++i) {
        mode_sums[k][static_cast<std::size_t>(i)] +=
            out.modes[k][static_cast<std::size_t>(i)];
      }
    }
    for (int i = 0; i < n; ++i) {
      residue_sum[static_cast<std::size_t>(i)] +=
          out.residue[static_cast<std::size_t>(i)];
    }
  }

  const double inv = 1.0 / trials;
  EnsembleResult result;
  result.decomposition.imfs.reserve(mode_sums.size());
  std::vector<double> raw(static_cast<std::size_t>(n), 0.0);
  for (std::vector<double>& sum : mode_sums) {
    Signal mode;
    mode.sample_rate = signal.sample_rate;
    mode.samples.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double v = sum[static_cast<std::size_t>(i)] * inv;
      mode.samples[static_cast<std::size_t>(i)] = v;
      raw[static_cast<std::size_t>(i)] += v;
    }
    result.decomposition.imfs.push_back(std::move(mode));
  }

  // Raw reconstruction per the averaging definition misses the signal; the
  // stored residue absorbs that defect so the decomposition sums back
  // exactly.
  std::vector<double> raw_with_residue = raw;
  for (int i = 0; i < n; ++i) {
    raw_with_residue[static_cast<std::size_t>(i)] +=
        residue_sum[static_cast<std::size_t>(i)] * inv;
  }
  result.raw_reconstruction_defect =
      l2_norm_of_difference(signal.samples, raw_with_residue);

  result.decomposition.residue.sample_rate = signal.sample_rate;
  result.decomposition.residue.samples.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.decomposition.residue.samples[static_cast<std::size_t>(i)] =
        signal.samples[static_cast<std::size_t>(i)] -
        raw[static_cast<std::size_t>(i)];
  }
  return result;
}

EnsembleResult ceemdan(const Signal& signal, const EnsembleConfig& config) {
  validate(signal, "ceemdan");
  if (config.trials < 1) {
    throw std::invalid_argument("ceemdan: trials must be >= 1");
  }
  if (!(config.epsilon0 > 0.0)) {
    throw std::invalid_argument("ceemdan: epsilon0 must be positive");
  }

  const int n = signal.size();
  const int cap = resolve_max_imfs(config, n);
  const int trials = config.trials;
  const int threads = resolve_threads(config.threads, trials);

  // Per-trial state: the noise realization's running EMD residue, consumed
  // one mode per stage (stage k needs E_k(w_i)); exhausted trials yield
  // zero noise modes from then on.
  std::vector<std::vector<double>> noise_state(
      static_cast<std::size_t>(trials));
  // plain bytes, not vector<bool>: workers write disjoint elements
  std::vector<unsigned char> noise_exhausted(static_cast<std::size_t>(trials), 0);
  std::vector<Sifter> sifters;
  sifters.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) sifters.emplace_back(config.sift);

  // Per-stage per-trial mode outputs (zeros when a trial produced none).
  std::vector<std::vector<double>> stage_out(static_cast<std::size_t>(trials));
  for (auto& v : stage_out) v.assign(static_cast<std::size_t>(n), 0.0);

  auto average_stage = [&](std::vector<double>& avg) {
    avg.assign(static_cast<std::size_t>(n), 0.0);
    for (const auto& v : stage_out) {
      for (int i = 0; i < n; ++i) {
        avg[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
      }
    }
    const double inv = 1.0 / trials;
    for (double& x : avg) x *= inv;
  };

  EnsembleResult result;
  result.decomposition.residue = signal;
  std::vector<double>& residue = result.decomposition.residue.samples;

  // Stage 1: first mode as in EEMD, raw noise scaled to the signal.
  const double eps_first = config.epsilon0 * stddev(signal);
  run_trials(trials, threads, [&](int trial, int worker) {
    Signal w = gaussian_noise(n, config.base_seed,
                              static_cast<std::uint64_t>(trial),
                              signal.sample_rate);
    std::vector<double> perturbed(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      perturbed[static_cast<std::size_t>(i)] =
          signal.samples[static_cast<std::size_t>(i)] +
          eps_first * w.samples[static_cast<std::size_t>(i)];
    }
    auto& out = stage_out[static_cast<std::size_t>(trial)];
    if (!sifters[static_cast<std::size_t>(worker)].extract_imf(perturbed, out)) {
      std::fill(out.begin(), out.end(), 0.0);
    }
    noise_state[static_cast<std::size_t>(trial)] = std::move(w.samples);
  });

  std::vector<double> mode;
  average_stage(mode);
  if (all_zero(mode)) {
    // Nothing extractable at all: the residue is the input.
    result.raw_reconstruction_defect = 0.0;
    return result;
  }

  auto append_mode = [&](const std::vector<double>& m) {
    Signal s;
    s.sample_rate = signal.sample_rate;
    s.samples = m;
    for (int i = 0; i < n; ++i) {
      residue[static_cast<std::size_t>(i)] -= m[static_cast<std::size_t>(i)];
    }
    result.decomposition.imfs.push_back(std::move(s));
  };
  append_mode(mode);

  while (static_cast<int>(result.decomposition.imfs.size()) < cap) {
    if (!has_enough_extrema(residue)) break;  // un-decomposable remainder
    const double eps_k = config.epsilon0 * stddev(std::span<const double>(residue));

    run_trials(trials, threads, [&](int trial, int worker) {
      Sifter& sifter = sifters[static_cast<std::size_t>(worker)];
      auto& state = noise_state[static_cast<std::size_t>(trial)];
      auto& out = stage_out[static_cast<std::size_t>(trial)];

      // Advance this trial's noise decomposition by one mode: E_k(w_i).
      std::vector<double> noise_imf;
      bool have_noise_mode = false;
      if (!noise_exhausted[static_cast<std::size_t>(trial)]) {
        if (sifter.extract_imf(state, noise_imf)) {
          for (int i = 0; i < n; ++i) {
            state[static_cast<std::size_t>(i)] -=
                noise_imf[static_cast<std::size_t>(i)];
          }
          have_noise_mode = true;
        } else {
          noise_exhausted[static_cast<std::size_t>(trial)] = 1;
        }
      }

      std::vector<double> perturbed(static_cast<std::size_t>(n));
      if (have_noise_mode) {
        for (int i = 0; i < n; ++i) {
          perturbed[static_cast<std::size_t>(i)] =
              residue[static_cast<std::size_t>(i)] +
              eps_k * noise_imf[static_cast<std::size_t>(i)];
        }
      } else {
        perturbed.assign(residue.begin(), residue.end());
      }
      if (!sifter.extract_imf(perturbed, out)) {
        std::fill(out.begin(), out.end(), 0.0);
      }
    });

    average_stage(mode);
    if (all_zero(mode)) break;
    append_mode(mode);
  }

  const Signal recon = result.decomposition.reconstruct();
  result.raw_reconstruction_defect =
      l2_norm_of_difference(signal.samples, recon.samples);
  return result;
}

}  // namespace emdsep
