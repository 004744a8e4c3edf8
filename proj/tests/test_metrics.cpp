// tests/test_metrics.cpp

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
#include <limits>
#include <vector>

#include "emdsep/metrics.hpp"
#include "emdsep/rng.hpp"
#include "emdsep/signal.hpp"

using namespace emdsep;

namespace {

Signal from(std::vector<double> v) {
  Signal s;
  s.sample_rate = 8000;
  s.samples = std::move(v);
  return s;
}

Signal random_signal(int n, std::uint64_t seed, std::uint64_t stream) {
  Signal s;
  s.sample_rate = 8000;
  s.samples.resize(static_cast<std::size_t>(n));
  KeyedRng rng(seed, stream);
  for (double& v : s.samples) v = rng.next_normal();
  return s;
}

// Orthogonalize b against a and rescale to the requested energy.
Signal orthogonal_error(const Signal& a, std::uint64_t seed, double target_energy) {
  Signal e = random_signal(a.size(), seed, 50);
  const double c = dot(e.samples, a.samples) / energy(a);
  for (int i = 0; i < a.size(); ++i) e.samples[static_cast<std::size_t>(i)] -= c * a[i];
  const double g = std::sqrt(target_energy / energy(e));
  for (double& v : e.samples) v *= g;
  return e;
}

}  // namespace

TEST_CASE("sdr closed forms") {
  const Signal ref = synth_sine(700.0, 1.0, 0.0, 0.25, 8000);

  SUBCASE("exact estimate gives the +infinity sentinel") {
    CHECK(std::isinf(sdr(ref, ref)));
    CHECK(sdr(ref, ref) > 0);
  }
  SUBCASE("half-scale estimate gives 10*log10(4)") {
    Signal half = ref;
    for (double& v : half.samples) v *= 0.5;
    CHECK(sdr(ref, half) == doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-9));
    CHECK(sdr(ref, half) == doctest::Approx(6.0206).epsilon(1e-4));
  }
  SUBCASE("orthogonal equal-energy error gives 0 dB") {
    const Signal err = orthogonal_error(ref, 1, energy(ref));
    Signal est = ref;
    for (int i = 0; i < ref.size(); ++i) est.samples[static_cast<std::size_t>(i)] += err[i];
    CHECK(std::abs(sdr(ref, est)) <= 1e-6);
  }
  SUBCASE("scale family matches -10*log10((1-c)^2)") {
    for (double c : {0.25, 0.75, 1.5, 2.0, -0.5}) {
      Signal est = ref;
      for (double& v : est.samples) v *= c;
      const double want = -10.0 * std::log10((1.0 - c) * (1.0 - c));
      CHECK(sdr(ref, est) == doctest::Approx(want).epsilon(1e-9));
    }
  }
  SUBCASE("joint rescaling leaves sdr unchanged") {
    Signal est = ref;
    KeyedRng rng(2, 0);
    for (double& v : est.samples) v += 0.1 * rng.next_normal();
    const double base = sdr(ref, est);
    Signal ref2 = ref, est2 = est;
    for (double& v : ref2.samples) v *= 11.0;
    for (double& v : est2.samples) v *= 11.0;
    CHECK(sdr(ref2, est2) == doctest::Approx(base).epsilon(1e-10));
  }
  SUBCASE("zero-energy reference is rejected") {
    CHECK_THROWS(sdr(from({0, 0, 0}), from({1, 2, 3})));
  }
}

TEST_CASE("snr mirrors mix_at_snr") {
  const Signal clean = synth_sine(440.0, 0.8, 0.0, 0.25, 8000);
  const Signal noise = random_signal(clean.size(), 3, 0);
  for (double want : {0.0, 5.0, 10.0, 15.0}) {
    const NoisyMix mixed = mix_at_snr(clean, noise, want);
    CHECK(std::abs(snr(clean, mixed.noisy) - want) <= 1e-9);
  }
  CHECK(std::isinf(snr(clean, clean)));
  const Signal err = orthogonal_error(clean, 4, energy(clean));
  Signal degraded = clean;
  for (int i = 0; i < clean.size(); ++i) degraded.samples[static_cast<std::size_t>(i)] += err[i];
  CHECK(std::abs(snr(clean, degraded)) <= 1e-6);
}

TEST_CASE("decompose_error identities") {
  const Signal ref = synth_sine(500.0, 1.0, 0.0, 0.25, 8000);

  SUBCASE("pure rescale: everything lands in the target") {
    Signal est = ref;
    for (double& v : est.samples) v *= 2.0;
    const ErrorDecomposition e = decompose_error(ref, est);
    for (int i = 0; i < ref.size(); ++i) {
      CHECK(e.target[i] == doctest::Approx(2.0 * ref[i]).epsilon(1e-12));
      CHECK(std::abs(e.e_interf[i]) <= 1e-12);
      CHECK(std::abs(e.e_noise[i]) <= 1e-12);
      CHECK(std::abs(e.e_artif[i]) <= 1e-12);
    }
  }
  SUBCASE("orthogonal noise reference is recovered exactly") {
    const Signal noise = orthogonal_error(ref, 5, 0.5 * energy(ref));
    Signal est = ref;
    for (int i = 0; i < ref.size(); ++i) est.samples[static_cast<std::size_t>(i)] += noise[i];
    const ErrorDecomposition e = decompose_error(ref, est, &noise);
    for (int i = 0; i < ref.size(); ++i) {
      CHECK(std::abs(e.e_noise[i] - noise[i]) <= 1e-10);
      CHECK(std::abs(e.e_artif[i]) <= 1e-10);
    }
  }
  SUBCASE("component sum equals the estimate on random inputs") {
    for (int trial = 0; trial < 10; ++trial) {
      const Signal reference = random_signal(512, 60 + trial, 0);
      const Signal estimate = random_signal(512, 60 + trial, 1);
      const Signal noise = random_signal(512, 60 + trial, 2);
      const std::vector<Signal> interferers = {
          random_signal(512, 60 + trial, 3), random_signal(512, 60 + trial, 4)};
      const ErrorDecomposition e =
          decompose_error(reference, estimate, &noise, &interferers);
      double worst = 0.0;
      for (int i = 0; i < 512; ++i) {
        const double sum = e.target[i] + e.e_interf[i] + e.e_noise[i] + e.e_artif[i];
        worst = std::max(worst, std::abs(sum - estimate[i]));
      }
      CHECK(worst <= 1e-10);
    }
  }
  SUBCASE("zero-energy reference is rejected") {
    CHECK_THROWS(decompose_error(from({0, 0}), from({1, 1})));
  }
}

TEST_CASE("sar identities") {
  const Signal ref = synth_sine(500.0, 1.0, 0.0, 0.25, 8000);

  SUBCASE("no artifacts gives the +infinity sentinel") {
    Signal est = ref;
    for (double& v : est.samples) v *= 1.3;
    const ErrorDecomposition e = decompose_error(ref, est);
    CHECK(std::isinf(sar(e)));
  }
  SUBCASE("artifact energy equal to legitimate energy gives 0 dB") {
    ErrorDecomposition e;
    e.target = ref;
    e.e_interf = from(std::vector<double>(ref.samples.size(), 0.0));
    e.e_noise = from(std::vector<double>(ref.samples.size(), 0.0));
    e.e_artif = orthogonal_error(ref, 6, energy(ref));
    CHECK(std::abs(sar(e)) <= 1e-6);
  }
  SUBCASE("zero legitimate energy is rejected") {
    ErrorDecomposition e;
    e.target = from({0, 0});
    e.e_interf = from({0, 0});
    e.e_noise = from({0, 0});
    e.e_artif = from({1, 1});
    CHECK_THROWS(sar(e));
  }
}

TEST_CASE("assign_imfs recovers exact modes") {
  const Signal t1 = synth_sine(700.0, 1.0, 0.0, 0.25, 8000);
  const Signal t2 = synth_sine(300.0, 1.0, 0.0, 0.25, 8000);
  Decomposition d;
  d.imfs = {t1, t2};
  d.residue = from(std::vector<double>(t1.samples.size(), 0.0));

  const Assignment a = assign_imfs(d, {t1, t2});
  REQUIRE(a.groups.size() == 2);
  CHECK(std::isinf(a.per_source_sdr_db[0]));
  CHECK(std::isinf(a.per_source_sdr_db[1]));
  // group 0 must hold imf 0, group 1 imf 1; the zero residue can sit anywhere
  CHECK(std::find(a.groups[0].begin(), a.groups[0].end(), 0) != a.groups[0].end());
  CHECK(std::find(a.groups[1].begin(), a.groups[1].end(), 1) != a.groups[1].end());
}

TEST_CASE("exhaustive assignment is at least as good as greedy") {
  for (int trial = 0; trial < 100; ++trial) {
    Decomposition d;
    for (int k = 0; k < 7; ++k) {
      d.imfs.push_back(random_signal(128, 100 + trial, static_cast<std::uint64_t>(k)));
    }
    d.residue = random_signal(128, 100 + trial, 99);
    const std::vector<Signal> refs = {random_signal(128, 200 + trial, 0),
                                      random_signal(128, 200 + trial, 1)};
    const Assignment ex = assign_imfs(d, refs);
    const Assignment gr = assign_imfs_greedy(d, refs);
    CHECK(ex.total_sdr_db >= gr.total_sdr_db - 1e-12);
  }
}

TEST_CASE("exhaustive assignment is single-move optimal") {
  for (int trial = 0; trial < 10; ++trial) {
    Decomposition d;
    for (int k = 0; k < 5; ++k) {
      d.imfs.push_back(random_signal(64, 300 + trial, static_cast<std::uint64_t>(k)));
    }
    d.residue = random_signal(64, 300 + trial, 99);
    const std::vector<Signal> refs = {random_signal(64, 400 + trial, 0),
                                      random_signal(64, 400 + trial, 1)};
    const Assignment best = assign_imfs(d, refs);

    // flipping any single mode to the other group must not improve the total
    std::vector<int> group(d.imfs.size() + 1, 0);
    for (int idx : best.groups[1]) group[static_cast<std::size_t>(idx)] = 1;
    for (std::size_t j = 0; j < group.size(); ++j) {
      Decomposition copy = d;
      std::vector<int> flipped = group;
      flipped[j] ^= 1;
      // rebuild the flipped assignment's total via per-source SDRs
      std::vector<Signal> est(2);
      for (int g = 0; g < 2; ++g) {
        est[static_cast<std::size_t>(g)] = from(std::vector<double>(64, 0.0));
      }
      auto modes = d.imfs;
      modes.push_back(d.residue);
      for (std::size_t k = 0; k < modes.size(); ++k) {
        auto& dst = est[static_cast<std::size_t>(flipped[k])].samples;
        for (int i = 0; i < 64; ++i) dst[static_cast<std::size_t>(i)] += modes[k][i];
      }
      double total = 0.0;
      for (int g = 0; g < 2; ++g) {
        total += std::min(sdr(refs[static_cast<std::size_t>(g)],
                              est[static_cast<std::size_t>(g)]), 1.0e4);
      }
      CHECK(total <= best.total_sdr_db + 1e-9);
    }
  }
}

TEST_CASE("greedy fallback engages above the exhaustive limit") {
  Decomposition d;
  for (int k = 0; k < 18; ++k) {  // 19 modes with the residue: 2^19 > limit
    d.imfs.push_back(random_signal(32, 500, static_cast<std::uint64_t>(k)));
  }
  d.residue = random_signal(32, 500, 99);
  const std::vector<Signal> refs = {random_signal(32, 501, 0),
                                    random_signal(32, 501, 1)};
  const Assignment a = assign_imfs(d, refs);
  const Assignment g = assign_imfs_greedy(d, refs);
  CHECK(a.total_sdr_db == doctest::Approx(g.total_sdr_db));
}

TEST_CASE("metrics report serializes with inf sentinels") {
  MetricsReport report;
  report.sdr_db = 8.625;
  report.sar_db = std::numeric_limits<double>::infinity();
  report.snr_db = 15.0;
  report.per_source.push_back({"speech", 8.625, 8.58});

  const std::string j = to_json_string(report);
  CHECK(j.find("\"sdr_db\": 8.625") != std::string::npos);
  CHECK(j.find("\"sar_db\": \"inf\"") != std::string::npos);
  CHECK(j.find("\"snr_db\": 15") != std::string::npos);
  CHECK(j.find("\"source\": \"speech\"") != std::string::npos);

  CHECK(metrics_csv_header() == std::vector<std::string>{"snr_db", "sdr_db", "sar_db"});
  const auto row = to_csv_row(report);
  REQUIRE(row.size() == 3);
  CHECK(row[0] == "15");
  CHECK(row[1] == "8.625");
  CHECK(row[2] == "inf");
}

TEST_CASE("assign_imfs validates inputs") {
  Decomposition d;
  const Signal ref = synth_sine(700.0, 1.0, 0.0, 0.1, 8000);
  CHECK_THROWS(assign_imfs(d, {ref}));  // empty decomposition
  d.residue = from({1.0, 2.0});
  CHECK_THROWS(assign_imfs(d, {}));                 // no references
  CHECK_THROWS(assign_imfs(d, {from({0.0, 0.0})}));  // zero-energy reference
  CHECK_THROWS(assign_imfs(d, {ref}));              // length mismatch
}
