// core/src/experiments.cpp

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

#include "emdsep/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "emdsep/csv.hpp"
#include "emdsep/rng.hpp"

namespace emdsep {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_sweep_config(const SweepConfig& config) {
  const double nyquist = config.sample_rate / 2.0;
  if (!(config.fixed_freq_hz > 0.0) || config.fixed_freq_hz >= nyquist) {
    throw std::invalid_argument("sweep: fixed frequency outside (0, Nyquist)");
  }
  for (double f : config.variable_freqs_hz) {
    if (!(f > 0.0) || f >= nyquist) {
      throw std::invalid_argument("sweep: grid frequency outside (0, Nyquist)");
    }
  }
  if (!(config.duration_s > 0.0)) {
    throw std::invalid_argument("sweep: duration must be positive");
  }
}

// Two-tone protocol shared by both sweeps: mix, decompose, score.
double two_tone_sdr(double f1, double a1, double f2, double a2,
                    const SweepConfig& config) {
  const Signal tone1 =
      synth_sine(f1, a1, 0.0, config.duration_s, config.sample_rate);
  const Signal tone2 =
      synth_sine(f2, a2, 0.0, config.duration_s, config.sample_rate);
  const Signal mixture = mix(tone1, tone2, 1.0, 1.0);
  const EnsembleResult result = ceemdan(mixture, config.ensemble);
  const Assignment assignment =
      assign_imfs(result.decomposition, {tone1, tone2});
  return assignment.mean_sdr_db;
}

// One-pole lowpass, applied in place.
void lowpass(std::vector<double>& x, double cutoff_hz, int sample_rate) {
  const double a = std::exp(-2.0 * std::numbers::pi * cutoff_hz / sample_rate);
  double y = 0.0;
  for (double& v : x) {
    y = a * y + (1.0 - a) * v;
    v = y;
  }
}

// Two-pole resonator at center_hz with the given bandwidth, applied to a
// copy of the input.
std::vector<double> resonate(const std::vector<double>& x, double center_hz,
                             double bandwidth_hz, int sample_rate) {
  const double r = std::exp(-std::numbers::pi * bandwidth_hz / sample_rate);
  const double theta = 2.0 * std::numbers::pi * center_hz / sample_rate;
  const double b1 = 2.0 * r * std::cos(theta);
  const double b2 = -r * r;
  std::vector<double> y(x.size(), 0.0);
  double y1 = 0.0, y2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i] + b1 * y1 + b2 * y2;
    y[i] = v;
    y2 = y1;
    y1 = v;
  }
  return y;
}

void normalize_peak(std::vector<double>& x, double peak) {
  const double m = max_abs(x);
  if (m <= 0.0) return;
  const double g = peak / m;
  for (double& v : x) v *= g;
}

}  // namespace

std::vector<double> default_freq_grid() {
  return {300,  350,  400,  450,  500,  550,  600,  650,  750,  800,  850,
          900,  950,  1000, 1050, 1100, 1150, 1200, 1250, 1300, 1350};
}

std::vector<double> default_amp_grid() {
  return {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0,
          1.2, 1.5, 1.9, 2.0, 2.5, 3.0, 3.5, 4.0, 4.1};
}

SeparabilityVerdict separability_verdict(double f1, double f2, double a1,
                                         double a2) {
  if (!(f1 > 0.0) || !(f2 > 0.0) || !(a1 > 0.0) || !(a2 > 0.0)) {
    throw std::invalid_argument("separability_verdict: inputs must be positive");
  }
  SeparabilityVerdict v;
  const double freq_ratio = f2 / f1;
  const double amp_ratio = a2 / a1;
  v.freq_condition_met = freq_ratio < 0.6 || freq_ratio > 1.6;
  v.amp_condition_met = amp_ratio >= 0.3 && amp_ratio <= 3.0;
  v.predicted_separable = v.freq_condition_met && v.amp_condition_met;
  return v;
}

std::vector<SweepRow> frequency_sweep(const SweepConfig& config) {
  check_sweep_config(config);
  std::vector<SweepRow> rows;
  rows.reserve(config.variable_freqs_hz.size());
  for (double f2 : config.variable_freqs_hz) {
    SweepRow row;
    row.fixed_value = config.fixed_freq_hz;
    row.variable_value = f2;
    row.ratio = f2 / config.fixed_freq_hz;
    try {
      row.predicted_separable =
          separability_verdict(config.fixed_freq_hz, f2, 1.0, 1.0)
              .predicted_separable;
      row.sdr_db = two_tone_sdr(config.fixed_freq_hz, config.fixed_amp, f2,
                                config.fixed_amp, config);
    } catch (const std::exception& e) {
      row.ok = false;
      row.sdr_db = kNan;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> amplitude_sweep(const SweepConfig& config) {
  check_sweep_config(config);
  // Amplitude study runs at the best-separating tone pair, 700/300 Hz.
  const double f1 = config.fixed_freq_hz;
  const double f2 = 300.0;
  std::vector<SweepRow> rows;
  rows.reserve(config.variable_amps.size());
  for (double a2 : config.variable_amps) {
    SweepRow row;
    row.fixed_value = config.fixed_amp;
    row.variable_value = a2;
    row.ratio = a2 / config.fixed_amp;
    try {
      row.predicted_separable =
          separability_verdict(f1, f2, config.fixed_amp, a2).predicted_separable;
      row.sdr_db = two_tone_sdr(f1, config.fixed_amp, f2, a2, config);
    } catch (const std::exception& e) {
      row.ok = false;
      row.sdr_db = kNan;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DenoiseResult denoise_eval(const Signal& clean, const Signal& noise,
                           const std::vector<double>& snr_db_list,
                           const EnsembleConfig& ensemble) {
  validate(clean, "denoise_eval clean");
  validate(noise, "denoise_eval noise");
  DenoiseResult result;
  for (double snr_db : snr_db_list) {
    DenoiseRow row;
    row.snr_db = snr_db;
    Signal enhanced;
    try {
      const NoisyMix mixed = mix_at_snr(clean, noise, snr_db);
      const EnsembleResult decomp = ceemdan(mixed.noisy, ensemble);
      const Assignment assignment =
          assign_imfs(decomp.decomposition, {clean, mixed.scaled_noise});
      enhanced = assignment.estimates[0];
      row.sdr_db = assignment.per_source_sdr_db[0];
      const ErrorDecomposition split =
          decompose_error(clean, enhanced, &mixed.scaled_noise, nullptr);
      row.sar_db = sar(split);
    } catch (const std::exception& e) {
      row.ok = false;
      row.sdr_db = kNan;
      row.sar_db = kNan;
      row.error = e.what();
      enhanced.sample_rate = clean.sample_rate;
      enhanced.samples.assign(clean.samples.size(), 0.0);
    }
    result.rows.push_back(std::move(row));
    result.enhanced.push_back(std::move(enhanced));
  }
  return result;
}

SpeechSeparationReport speech_speech_demo(const Signal& speech_a,
                                          const Signal& speech_b,
                                          const EnsembleConfig& ensemble) {
  validate(speech_a, "speech_speech_demo a");
  validate(speech_b, "speech_speech_demo b");
  if (speech_a.sample_rate != speech_b.sample_rate) {
    throw std::invalid_argument("speech_speech_demo: sample rate mismatch");
  }

  SpeechSeparationReport report;
  const std::size_t n =
      std::min(speech_a.samples.size(), speech_b.samples.size());
  Signal a = speech_a;
  a.samples.resize(n);
  Signal b = speech_b;
  b.samples.resize(n);
  report.mixture = mix(a, b, 1.0, 1.0);

  if (energy(a) <= 0.0 || energy(b) <= 0.0) {
    // Mixture degenerates to the non-silent input; nothing to separate.
    report.degenerate = true;
    const bool b_silent = energy(b) <= 0.0;
    report.estimate_a = b_silent ? report.mixture : Signal{std::vector<double>(n, 0.0), a.sample_rate};
    report.estimate_b = b_silent ? Signal{std::vector<double>(n, 0.0), a.sample_rate} : report.mixture;
    report.sdr_a_db = b_silent ? sdr(a, report.estimate_a) : kNan;
    report.sdr_b_db = b_silent ? kNan : sdr(b, report.estimate_b);
    return report;
  }

  const EnsembleResult decomp = ceemdan(report.mixture, ensemble);
  const Assignment assignment = assign_imfs(decomp.decomposition, {a, b});
  report.estimate_a = assignment.estimates[0];
  report.estimate_b = assignment.estimates[1];
  report.sdr_a_db = assignment.per_source_sdr_db[0];
  report.sdr_b_db = assignment.per_source_sdr_db[1];
  return report;
}

Signal synth_speech_like(double duration_s, int sample_rate,
                         std::uint64_t seed) {
  if (!(duration_s > 0.0) || sample_rate <= 0) {
    throw std::invalid_argument("synth_speech_like: bad duration or rate");
  }
  const int n = static_cast<int>(std::llround(duration_s * sample_rate));
  KeyedRng rng(seed, 7001);
  std::vector<double> white(static_cast<std::size_t>(n));
  for (double& v : white) v = rng.next_normal();

  // Seed-dependent formant placement, spread like different talkers.
  const double f1 = 420.0 + 180.0 * rng.next_unit();
  const double f2 = 1250.0 + 450.0 * rng.next_unit();
  const double f3 = 2400.0 + 500.0 * rng.next_unit();

  const auto band1 = resonate(white, f1, 220.0, sample_rate);
  const auto band2 = resonate(white, f2, 320.0, sample_rate);
  const auto band3 = resonate(white, f3, 420.0, sample_rate);

  std::vector<double> shaped(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    shaped[static_cast<std::size_t>(i)] =
        band1[static_cast<std::size_t>(i)] +
        0.5 * band2[static_cast<std::size_t>(i)] +
        0.25 * band3[static_cast<std::size_t>(i)];
  }

  // Syllabic envelope: two incommensurate slow modulators, floored so the
  // signal never goes fully silent.
  const double syll_hz = 2.6 + 1.6 * rng.next_unit();
  const double pause_hz = 0.5 + 0.5 * rng.next_unit();
  const double phi1 = 2.0 * std::numbers::pi * rng.next_unit();
  const double phi2 = 2.0 * std::numbers::pi * rng.next_unit();
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / sample_rate;
    const double s1 =
        0.5 + 0.5 * std::sin(2.0 * std::numbers::pi * syll_hz * t + phi1);
    const double s2 =
        0.6 + 0.4 * std::sin(2.0 * std::numbers::pi * pause_hz * t + phi2);
    shaped[static_cast<std::size_t>(i)] *= 0.1 + 0.9 * s1 * s2;
  }

  normalize_peak(shaped, 0.7);
  Signal out;
  out.sample_rate = sample_rate;
  out.samples = std::move(shaped);
  return out;
}

const char* noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::white: return "white";
    case NoiseKind::car: return "car";
    case NoiseKind::babble: return "babble";
  }
  return "unknown";
}

Signal synth_noise(NoiseKind kind, double duration_s, int sample_rate,
                   std::uint64_t seed) {
  if (!(duration_s > 0.0) || sample_rate <= 0) {
    throw std::invalid_argument("synth_noise: bad duration or rate");
  }
  const int n = static_cast<int>(std::llround(duration_s * sample_rate));
  KeyedRng rng(seed, 7002 + static_cast<std::uint64_t>(kind));
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.next_normal();

  switch (kind) {
    case NoiseKind::white:
      break;
    case NoiseKind::car:
      lowpass(x, 120.0, sample_rate);
      lowpass(x, 120.0, sample_rate);
      break;
    case NoiseKind::babble: {
      const auto band1 = resonate(x, 500.0, 260.0, sample_rate);
      const auto band2 = resonate(x, 1500.0, 380.0, sample_rate);
      const auto band3 = resonate(x, 2500.0, 480.0, sample_rate);
      for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] =
            band1[static_cast<std::size_t>(i)] +
            0.5 * band2[static_cast<std::size_t>(i)] +
            0.25 * band3[static_cast<std::size_t>(i)];
      }
      break;
    }
  }
  normalize_peak(x, 0.7);
  Signal out;
  out.sample_rate = sample_rate;
  out.samples = std::move(x);
  return out;
}

void write_sweep_csv(const std::string& path, SweepKind kind,
                     const std::vector<SweepRow>& rows) {
  const bool freq = kind == SweepKind::frequency;
  const std::vector<std::string> header =
      freq ? std::vector<std::string>{"f1_hz", "f2_hz", "ratio", "sdr_db",
                                      "separable"}
           : std::vector<std::string>{"a1", "a2", "ratio", "sdr_db",
                                      "separable"};
  std::vector<std::vector<std::string>> table;
  table.reserve(rows.size());
  for (const SweepRow& row : rows) {
    table.push_back({format_number(row.fixed_value),
                     format_number(row.variable_value),
                     format_number(row.ratio), format_number(row.sdr_db),
                     row.predicted_separable ? "1" : "0"});
  }
  write_table_csv(path, header, table);
}

void write_denoise_csv(const std::string& path, const std::string& noise_name,
                       const std::vector<DenoiseRow>& rows) {
  std::vector<std::vector<std::string>> table;
  table.reserve(rows.size());
  for (const DenoiseRow& row : rows) {
    table.push_back({noise_name, format_number(row.snr_db),
                     format_number(row.sdr_db), format_number(row.sar_db)});
  }
  write_table_csv(path, {"noise", "snr_db", "sdr_db", "sar_db"}, table);
}

void write_speech_demo_csv(const std::string& path, const Signal& a,
                           const Signal& b,
                           const SpeechSeparationReport& report) {
  const std::size_t n = report.mixture.samples.size();
  std::vector<double> col_a(a.samples.begin(),
                            a.samples.begin() + static_cast<long>(n));
  std::vector<double> col_b(b.samples.begin(),
                            b.samples.begin() + static_cast<long>(n));
  write_csv(path,
            {"source_a", "source_b", "mixture", "estimate_a", "estimate_b"},
            {col_a, col_b, report.mixture.samples, report.estimate_a.samples,
             report.estimate_b.samples});
}

}  // namespace emdsep
