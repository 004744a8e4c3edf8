// core/include/emdsep/experiments.hpp

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

#ifndef EMDSEP_EXPERIMENTS_HPP
#define EMDSEP_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "emdsep/ensemble.hpp"
#include "emdsep/metrics.hpp"
#include "emdsep/signal.hpp"

namespace emdsep {

// Default two-tone study grids.
std::vector<double> default_freq_grid();  // F2 values, F1 fixed at 700 Hz
std::vector<double> default_amp_grid();   // A2 values, A1 fixed at 1

struct SweepConfig {
  double fixed_freq_hz = 700.0;
  std::vector<double> variable_freqs_hz = default_freq_grid();
  double fixed_amp = 1.0;
  std::vector<double> variable_amps = default_amp_grid();
  int sample_rate = 8000;
  double duration_s = 1.0;
  EnsembleConfig ensemble;
};

struct SweepRow {
  double fixed_value = 0.0;     // F1 or A1
  double variable_value = 0.0;  // F2 or A2
  double ratio = 0.0;           // variable / fixed
  double sdr_db = 0.0;          // mean of the two per-source SDRs
  bool predicted_separable = false;
  bool ok = true;               // false when this row failed; sdr_db is NaN
  std::string error;
};

struct SeparabilityVerdict {
  bool freq_condition_met = false;
  bool amp_condition_met = false;
  bool predicted_separable = false;
};

// Working conditions for two-tone separation: frequency ratio below 0.6 or
// above 1.6, and amplitude ratio inside [0.3, 3].
SeparabilityVerdict separability_verdict(double f1, double f2, double a1,
                                         double a2);

// Equal-amplitude two-tone mixtures across the F2 grid: synthesize, mix,
// decompose with CEEMDAN, score by best-assignment SDR.  Row failures are
// recorded and the sweep continues.
std::vector<SweepRow> frequency_sweep(const SweepConfig& config);

// Same protocol at fixed 700/300 Hz with the A2 grid varying.
std::vector<SweepRow> amplitude_sweep(const SweepConfig& config);

struct DenoiseRow {
  double snr_db = 0.0;  // requested input SNR
  double sdr_db = 0.0;  // speech-group SDR after separation
  double sar_db = 0.0;  // speech-group SAR
  bool ok = true;
  std::string error;
};

struct DenoiseResult {
  std::vector<DenoiseRow> rows;
  std::vector<Signal> enhanced;  // speech estimate, one per row
};

// For each requested SNR: mix clean and noise at that SNR, run CEEMDAN on
// the mixture, group modes against {clean, scaled noise}, and report the
// speech group's SDR and SAR.
DenoiseResult denoise_eval(const Signal& clean, const Signal& noise,
                           const std::vector<double>& snr_db_list,
                           const EnsembleConfig& ensemble);

struct SpeechSeparationReport {
  double sdr_a_db = 0.0;
  double sdr_b_db = 0.0;
  bool degenerate = false;  // one input was silent; mixture equals the other
  Signal mixture;
  Signal estimate_a;
  Signal estimate_b;
};

// Instantaneous 1:1 mix of two speech signals, decomposed and grouped
// against the originals.  Demonstrates the speech-speech failure mode.
SpeechSeparationReport speech_speech_demo(const Signal& speech_a,
                                          const Signal& speech_b,
                                          const EnsembleConfig& ensemble);

// -- synthetic material, used when no speech corpus is supplied -------------

// Formant-shaped noise with a syllabic amplitude envelope; deterministic
// per seed, with seed-dependent formant placement.
Signal synth_speech_like(double duration_s, int sample_rate,
                         std::uint64_t seed);

enum class NoiseKind {
  white,   // flat-spectrum hiss
  car,     // low-frequency rumble
  babble,  // stationary speech-shaped noise
};

const char* noise_kind_name(NoiseKind kind);
Signal synth_noise(NoiseKind kind, double duration_s, int sample_rate,
                   std::uint64_t seed);

// -- table emission ----------------------------------------------------------

enum class SweepKind { frequency, amplitude };

void write_sweep_csv(const std::string& path, SweepKind kind,
                     const std::vector<SweepRow>& rows);
void write_denoise_csv(const std::string& path, const std::string& noise_name,
                       const std::vector<DenoiseRow>& rows);
// Time-domain panels: sources, mixture, and estimates side by side.
void write_speech_demo_csv(const std::string& path, const Signal& a,
                           const Signal& b,
                           const SpeechSeparationReport& report);

}  // namespace emdsep

#endif  // EMDSEP_EXPERIMENTS_HPP
