// tests/test_ensemble.cpp

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

#include <doctest.h>

#include <cmath>

#include "emdsep/ensemble.hpp"
#include "emdsep/extrema.hpp"
#include "emdsep/metrics.hpp"
#include "emdsep/rng.hpp"
#include "emdsep/signal.hpp"

using namespace emdsep;

namespace {

Signal two_tone() {
  const Signal t1 = synth_sine(700.0, 1.0, 0.0, 0.5, 8000);
  const Signal t2 = synth_sine(300.0, 1.0, 0.0, 0.5, 8000);
  return mix(t1, t2, 1.0, 1.0);
}

// Worst relative deviation across modes carrying at least `energy_floor`
// of the input energy.  Near-zero leftover modes are excluded: their sift
// iteration counts flip under perturbations at any noise level, which is
// inherent to the discrete acceptance rules, not an averaging defect.
double max_rel_mode_diff(const Decomposition& a, const Decomposition& b,
                         double input_energy, double energy_floor = 1e-5) {
  double worst = 0.0;
  const std::size_t k = std::min(a.imfs.size(), b.imfs.size());
  for (std::size_t m = 0; m < k; ++m) {
    if (energy(a.imfs[m]) < energy_floor * input_energy) continue;
    const double scale = std::max(max_abs(a.imfs[m].samples), 1e-30);
    for (int i = 0; i < a.imfs[m].size(); ++i) {
      worst = std::max(worst, std::abs(a.imfs[m][i] - b.imfs[m][i]) / scale);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("noise_mode ordering and fallbacks") {
  const Signal w = gaussian_noise(4000, 11, 0);

  SUBCASE("mode 1 oscillates faster than mode 2") {
    const Signal m1 = noise_mode(1, w);
    const Signal m2 = noise_mode(2, w);
    CHECK(count_zero_crossings(m1.samples) > count_zero_crossings(m2.samples));
  }
  SUBCASE("k beyond the available modes yields zeros") {
    const Signal m = noise_mode(40, w);
    CHECK(max_abs(m.samples) == 0.0);
  }
  SUBCASE("noise modes plus residue rebuild the noise") {
    const Decomposition d = emd(w);
    const Signal recon = d.reconstruct();
    const double scale = max_abs(w.samples);
    for (int i = 0; i < w.size(); ++i) {
      CHECK(std::abs(recon[i] - w[i]) <= 1e-10 * scale);
    }
  }
  SUBCASE("k < 1 is rejected") {
    CHECK_THROWS(noise_mode(0, w));
  }
}

TEST_CASE("eemd with one trial and vanishing noise matches plain emd") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 1;
  cfg.epsilon0 = 1e-12;
  cfg.base_seed = 5;

  const EnsembleResult r = eemd(x, cfg);
  const Decomposition d = emd(x, cfg.sift, resolve_max_imfs(cfg, x.size()));
  REQUIRE(r.decomposition.imfs.size() == d.imfs.size());
  CHECK(max_rel_mode_diff(r.decomposition, d, energy(x)) <= 1e-8);
}

TEST_CASE("eemd is deterministic and reconstructs exactly as stored") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 8;
  cfg.base_seed = 17;

  const EnsembleResult a = eemd(x, cfg);
  const EnsembleResult b = eemd(x, cfg);
  REQUIRE(a.decomposition.imfs.size() == b.decomposition.imfs.size());
  for (std::size_t k = 0; k < a.decomposition.imfs.size(); ++k) {
    CHECK(a.decomposition.imfs[k].samples == b.decomposition.imfs[k].samples);
  }
  CHECK(a.raw_reconstruction_defect == b.raw_reconstruction_defect);

  const Signal recon = a.decomposition.reconstruct();
  const double scale = max_abs(x.samples);
  for (int i = 0; i < x.size(); ++i) {
    CHECK(std::abs(recon[i] - x[i]) <= 1e-12 * scale);
  }
  CHECK(a.raw_reconstruction_defect > 0.0);
}

TEST_CASE("ceemdan reconstruction is exact up to rounding") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 8;
  cfg.base_seed = 3;

  const EnsembleResult r = ceemdan(x, cfg);
  REQUIRE(!r.decomposition.imfs.empty());
  const Signal recon = r.decomposition.reconstruct();
  const double scale = max_abs(x.samples);
  for (int i = 0; i < x.size(); ++i) {
    CHECK(std::abs(recon[i] - x[i]) <= 1e-10 * scale);
  }
}

TEST_CASE("eemd raw defect strictly exceeds ceemdan raw defect") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 6;
  cfg.base_seed = 23;

  const double eemd_defect = eemd(x, cfg).raw_reconstruction_defect;
  const double ceemdan_defect = ceemdan(x, cfg).raw_reconstruction_defect;
  CHECK(eemd_defect > ceemdan_defect);
}

TEST_CASE("ceemdan with one trial and vanishing noise tracks plain emd") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 1;
  cfg.epsilon0 = 1e-12;
  cfg.base_seed = 9;

  const EnsembleResult r = ceemdan(x, cfg);
  const Decomposition d = emd(x, cfg.sift, resolve_max_imfs(cfg, x.size()));
  REQUIRE(!r.decomposition.imfs.empty());
  const std::size_t shared = std::min(r.decomposition.imfs.size(), d.imfs.size());
  REQUIRE(shared >= 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const double scale = std::max(max_abs(d.imfs[k].samples), 1e-30);
    for (int i = 0; i < d.imfs[k].size(); ++i) {
      CHECK(std::abs(r.decomposition.imfs[k][i] - d.imfs[k][i]) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("ceemdan separates the 700/300 mix well") {
  const Signal t1 = synth_sine(700.0, 1.0, 0.0, 0.5, 8000);
  const Signal t2 = synth_sine(300.0, 1.0, 0.0, 0.5, 8000);
  const Signal x = mix(t1, t2, 1.0, 1.0);
  EnsembleConfig cfg;
  cfg.trials = 40;  // averaging noise shrinks as 1/I; 40 clears the bar
  cfg.base_seed = 41;

  const EnsembleResult r = ceemdan(x, cfg);
  const Assignment a = assign_imfs(r.decomposition, {t1, t2});
  CHECK(a.mean_sdr_db >= 15.0);
}

TEST_CASE("ceemdan is positively homogeneous") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 4;
  cfg.base_seed = 29;

  const EnsembleResult base = ceemdan(x, cfg);
  Signal scaled = x;
  const double c = 3.7;
  for (double& v : scaled.samples) v *= c;
  const EnsembleResult big = ceemdan(scaled, cfg);

  REQUIRE(big.decomposition.imfs.size() == base.decomposition.imfs.size());
  for (std::size_t k = 0; k < base.decomposition.imfs.size(); ++k) {
    const double scale = std::max(c * max_abs(base.decomposition.imfs[k].samples), 1e-30);
    for (int i = 0; i < x.size(); ++i) {
      CHECK(std::abs(big.decomposition.imfs[k][i] -
                     c * base.decomposition.imfs[k][i]) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("ceemdan results do not depend on the thread count") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 6;
  cfg.base_seed = 31;

  cfg.threads = 1;
  const EnsembleResult serial = ceemdan(x, cfg);
  cfg.threads = 8;
  const EnsembleResult parallel = ceemdan(x, cfg);

  REQUIRE(serial.decomposition.imfs.size() == parallel.decomposition.imfs.size());
  for (std::size_t k = 0; k < serial.decomposition.imfs.size(); ++k) {
    CHECK(serial.decomposition.imfs[k].samples ==
          parallel.decomposition.imfs[k].samples);
  }
  CHECK(serial.decomposition.residue.samples ==
        parallel.decomposition.residue.samples);
}

TEST_CASE("ensemble configs are validated") {
  const Signal x = two_tone();
  EnsembleConfig cfg;
  cfg.trials = 0;
  CHECK_THROWS(ceemdan(x, cfg));
  cfg.trials = 2;
  cfg.epsilon0 = 0.0;
  CHECK_THROWS(eemd(x, cfg));
}

TEST_CASE("max_imfs cap resolves from the signal length") {
  EnsembleConfig cfg;
  CHECK(resolve_max_imfs(cfg, 8000) == 15);  // ceil(log2(8000)) + 2
  cfg.max_imfs = 4;
  CHECK(resolve_max_imfs(cfg, 8000) == 4);
}
