// tools/emdsep_main.cpp

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

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "emdsep/csv.hpp"
#include "emdsep/emd.hpp"
#include "emdsep/ensemble.hpp"
#include "emdsep/errors.hpp"
#include "emdsep/experiments.hpp"
#include "emdsep/metrics.hpp"
#include "emdsep/signal.hpp"
#include "emdsep/spectrogram.hpp"
#include "emdsep/wav.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace emdsep;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
  std::string out_dir = ".";
  std::string config_path;
  int trials = 100;
  double epsilon = 0.2;
  std::uint64_t seed = 0;
  double sd_threshold = 0.2;
  int max_sift = 100;
  int max_imfs = 0;
  int threads = 0;
  int sample_rate = 8000;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out-dir", opts.out_dir, "output directory");
  cmd->add_option("--config", opts.config_path,
                  "JSON config (or a previous run's manifest); command-line "
                  "flags take precedence");
  cmd->add_option("--trials", opts.trials, "ensemble size I");
  cmd->add_option("--epsilon", opts.epsilon,
                  "noise amplitude relative to residue std dev");
  cmd->add_option("--seed", opts.seed, "base RNG seed");
  cmd->add_option("--sd-threshold", opts.sd_threshold, "sift SD threshold");
  cmd->add_option("--max-sift", opts.max_sift, "max sift iterations per mode");
  cmd->add_option("--max-imfs", opts.max_imfs, "mode-count cap (0 = auto)");
  cmd->add_option("--threads", opts.threads,
                  "worker threads (0 = hardware); results identical either way");
  cmd->add_option("--sample-rate", opts.sample_rate,
                  "sample rate for CSV inputs and synthesis");
}

// Flags override config-file values override defaults: any option the user
// did not pass explicitly is re-read from the config file when present.
void apply_config_file(const CLI::App* cmd, const json& cfg, CommonOpts& opts) {
  auto maybe = [&](const char* flag, const char* key, auto& slot) {
    if (cmd->count(flag) == 0 && cfg.contains(key)) {
      slot = cfg.at(key).get<std::decay_t<decltype(slot)>>();
    }
  };
  maybe("--out-dir", "out_dir", opts.out_dir);
  maybe("--trials", "trials", opts.trials);
  maybe("--epsilon", "epsilon", opts.epsilon);
  maybe("--seed", "seed", opts.seed);
  maybe("--sd-threshold", "sd_threshold", opts.sd_threshold);
  maybe("--max-sift", "max_sift_iterations", opts.max_sift);
  maybe("--max-imfs", "max_imfs", opts.max_imfs);
  maybe("--threads", "threads", opts.threads);
  maybe("--sample-rate", "sample_rate", opts.sample_rate);
}

json load_config_file(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  json parsed;
  try {
    in >> parsed;
  } catch (const std::exception& e) {
    throw IoError("config file " + path + " is not valid JSON: " + e.what());
  }
  // accept either a bare config object or a full manifest
  if (parsed.contains("config")) return parsed.at("config");
  return parsed;
}

EnsembleConfig to_ensemble(const CommonOpts& opts) {
  EnsembleConfig cfg;
  cfg.trials = opts.trials;
  cfg.epsilon0 = opts.epsilon;
  cfg.base_seed = opts.seed;
  cfg.sift.sd_threshold = opts.sd_threshold;
  cfg.sift.max_sift_iterations = opts.max_sift;
  cfg.max_imfs = opts.max_imfs;
  cfg.threads = opts.threads;
  return cfg;
}

json config_json(const CommonOpts& opts) {
  json j;
  j["out_dir"] = opts.out_dir;
  j["trials"] = opts.trials;
  j["epsilon"] = opts.epsilon;
  j["seed"] = opts.seed;
  j["sd_threshold"] = opts.sd_threshold;
  j["max_sift_iterations"] = opts.max_sift;
  j["max_imfs"] = opts.max_imfs;
  j["threads"] = opts.threads;
  j["sample_rate"] = opts.sample_rate;
  return j;
}

void write_manifest(const std::string& out_dir, const json& manifest) {
  const auto path = std::filesystem::path(out_dir) / "manifest.json";
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << manifest.dump(2) << "\n";
}

Signal load_input(const std::string& path, int sample_rate) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return read_signal_csv(path, sample_rate);
  return load_wav(path);
}

std::vector<double> parse_grid(const std::string& text, const char* what) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string field = text.substr(pos, next - pos);
    if (!field.empty()) {
      try {
        values.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + ": cannot parse '" +
                                    field + "'");
      }
    }
    pos = next + 1;
  }
  if (values.empty()) {
    throw std::invalid_argument(std::string(what) + ": empty grid");
  }
  return values;
}

double max_rel_reconstruction_error(const Signal& original,
                                    const Decomposition& d) {
  const Signal recon = d.reconstruct();
  const double scale = std::max(max_abs(original.samples), 1e-300);
  double worst = 0.0;
  for (int i = 0; i < original.size(); ++i) {
    worst = std::max(worst, std::abs(recon[i] - original[i]));
  }
  return worst / scale;
}

// ---------------------------------------------------------------------------

int run_decompose(const CommonOpts& opts, const std::string& input,
                  const std::string& method) {
  std::filesystem::create_directories(opts.out_dir);
  const Signal signal = load_input(input, opts.sample_rate);

  Decomposition decomposition;
  double raw_defect = 0.0;
  if (method == "emd") {
    decomposition = emd(signal, to_ensemble(opts).sift, opts.max_imfs);
  } else if (method == "eemd") {
    EnsembleResult r = eemd(signal, to_ensemble(opts));
    decomposition = std::move(r.decomposition);
    raw_defect = r.raw_reconstruction_defect;
  } else {
    EnsembleResult r = ceemdan(signal, to_ensemble(opts));
    decomposition = std::move(r.decomposition);
    raw_defect = r.raw_reconstruction_defect;
  }

  const auto csv_path =
      std::filesystem::path(opts.out_dir) / "decomposition.csv";
  write_decomposition_csv(csv_path.string(), decomposition);

  json manifest;
  manifest["command"] = "decompose";
  manifest["config"] = config_json(opts);
  manifest["config"]["method"] = method;
  manifest["config"]["input"] = input;
  manifest["results"]["num_imfs"] = decomposition.imfs.size();
  manifest["results"]["signal_length"] = decomposition.source_length();
  manifest["results"]["reconstruction_error"] =
      max_rel_reconstruction_error(signal, decomposition);
  manifest["results"]["raw_reconstruction_defect"] = raw_defect;
  write_manifest(opts.out_dir, manifest);

  std::cout << "wrote " << csv_path.string() << " ("
            << decomposition.imfs.size() << " IMFs + residue)\n";
  return kExitOk;
}

int run_sweep(const CommonOpts& opts, const std::string& kind,
              double fixed_freq, bool grid_given, const std::string& grid_text,
              double duration_s) {
  std::filesystem::create_directories(opts.out_dir);

  SweepConfig cfg;
  cfg.fixed_freq_hz = fixed_freq;
  cfg.sample_rate = opts.sample_rate;
  cfg.duration_s = duration_s;
  cfg.ensemble = to_ensemble(opts);
  if (grid_given) {
    if (kind == "freq") {
      cfg.variable_freqs_hz = parse_grid(grid_text, "--grid");
    } else {
      cfg.variable_amps = parse_grid(grid_text, "--grid");
    }
  }

  const bool freq = kind == "freq";
  const std::vector<SweepRow> rows =
      freq ? frequency_sweep(cfg) : amplitude_sweep(cfg);

  const auto csv_path = std::filesystem::path(opts.out_dir) /
                        (freq ? "freq_sweep.csv" : "amp_sweep.csv");
  write_sweep_csv(csv_path.string(), freq ? SweepKind::frequency : SweepKind::amplitude, rows);

  for (const SweepRow& row : rows) {
    std::cout << (freq ? "F2=" : "A2=") << format_number(row.variable_value)
              << " ratio=" << format_number(row.ratio)
              << " sdr_db=" << format_number(row.sdr_db)
              << " separable=" << (row.predicted_separable ? "yes" : "no");
    if (!row.ok) std::cout << " error=" << row.error;
    std::cout << "\n";
  }

  json manifest;
  manifest["command"] = "sweep";
  manifest["config"] = config_json(opts);
  manifest["config"]["kind"] = kind;
  manifest["config"]["f1"] = cfg.fixed_freq_hz;
  manifest["config"]["duration"] = cfg.duration_s;
  manifest["config"]["grid"] =
      freq ? cfg.variable_freqs_hz : cfg.variable_amps;
  manifest["results"]["rows"] = json::array();
  for (const SweepRow& row : rows) {
    json r;
    r[freq ? "f2" : "a2"] = row.variable_value;
    r["ratio"] = row.ratio;
    if (row.ok) {
      r["sdr_db"] = row.sdr_db;
    } else {
      r["error"] = row.error;
    }
    r["separable"] = row.predicted_separable;
    manifest["results"]["rows"].push_back(std::move(r));
  }
  write_manifest(opts.out_dir, manifest);
  return kExitOk;
}

// Spectrogram and time-domain panels of clean / noisy / enhanced, the data
// behind the usual denoising before-and-after plots.
void emit_denoise_panels(const std::string& out_dir, const std::string& tag,
                         const Signal& clean, const Signal& noisy,
                         const Signal& enhanced) {
  const int frame = 256, hop = 128;
  if (clean.size() >= frame) {
    write_spectrogram_csv(
        (std::filesystem::path(out_dir) / ("spec_clean_" + tag + ".csv")).string(),
        spectrogram(clean, frame, hop));
    write_spectrogram_csv(
        (std::filesystem::path(out_dir) / ("spec_noisy_" + tag + ".csv")).string(),
        spectrogram(noisy, frame, hop));
    write_spectrogram_csv(
        (std::filesystem::path(out_dir) / ("spec_enhanced_" + tag + ".csv")).string(),
        spectrogram(enhanced, frame, hop));
  }
  write_csv((std::filesystem::path(out_dir) / ("time_" + tag + ".csv")).string(),
            {"clean", "noisy", "enhanced"},
            {clean.samples, noisy.samples, enhanced.samples});
}

int run_denoise(const CommonOpts& opts, const std::string& clean_path,
                const std::string& noise_path, const std::string& noisy_path,
                const std::string& snr_text, bool emit_panels) {
  std::filesystem::create_directories(opts.out_dir);
  const Signal clean = load_input(clean_path, opts.sample_rate);
  const auto csv_path = std::filesystem::path(opts.out_dir) / "denoise.csv";

  json manifest;
  manifest["command"] = "denoise";
  manifest["config"] = config_json(opts);
  manifest["config"]["clean"] = clean_path;

  if (!noisy_path.empty()) {
    // Pre-mixed input: evaluate the separation of noisy = clean + noise.
    const Signal noisy = load_input(noisy_path, opts.sample_rate);
    if (noisy.size() != clean.size() || noisy.sample_rate != clean.sample_rate) {
      throw std::invalid_argument("denoise: clean and noisy must match in rate and length");
    }
    Signal noise_ref;
    noise_ref.sample_rate = clean.sample_rate;
    noise_ref.samples.resize(clean.samples.size());
    for (int i = 0; i < clean.size(); ++i) {
      noise_ref.samples[static_cast<std::size_t>(i)] = noisy[i] - clean[i];
    }

    DenoiseRow row;
    Signal enhanced;
    if (energy(noise_ref) <= 0.0) {
      // identical clean and noisy input: nothing to remove
      row.snr_db = std::numeric_limits<double>::infinity();
      row.sdr_db = sdr(clean, noisy);
      row.sar_db = std::numeric_limits<double>::infinity();
      enhanced = noisy;
    } else {
      row.snr_db = snr(clean, noisy);
      const EnsembleResult decomp = ceemdan(noisy, to_ensemble(opts));
      const Assignment assignment =
          assign_imfs(decomp.decomposition, {clean, noise_ref});
      enhanced = assignment.estimates[0];
      row.sdr_db = assignment.per_source_sdr_db[0];
      row.sar_db = sar(decompose_error(clean, enhanced, &noise_ref, nullptr));
    }
    write_denoise_csv(csv_path.string(), "input", {row});
    const auto wav_path = std::filesystem::path(opts.out_dir) / "enhanced.wav";
    save_wav(enhanced, wav_path.string());
    if (emit_panels) {
      emit_denoise_panels(opts.out_dir, "input", clean, noisy, enhanced);
    }

    MetricsReport metrics;
    metrics.sdr_db = row.sdr_db;
    metrics.sar_db = row.sar_db;
    metrics.snr_db = row.snr_db;
    metrics.per_source.push_back({"speech", row.sdr_db, row.sar_db});
    std::ofstream metrics_out(std::filesystem::path(opts.out_dir) / "metrics.json");
    metrics_out << to_json_string(metrics) << "\n";

    std::cout << "snr_db=" << format_number(row.snr_db)
              << " sdr_db=" << format_number(row.sdr_db)
              << " sar_db=" << format_number(row.sar_db) << "\n";
    manifest["config"]["noisy"] = noisy_path;
    manifest["results"]["rows"] = 1;
    write_manifest(opts.out_dir, manifest);
    return kExitOk;
  }

  const Signal noise = load_input(noise_path, opts.sample_rate);
  const std::vector<double> snrs = parse_grid(snr_text, "--snr");
  bool truncated = false;
  Signal clean_cut = clean, noise_cut = noise;
  if (clean.samples.size() != noise.samples.size()) {
    const std::size_t n = std::min(clean.samples.size(), noise.samples.size());
    clean_cut.samples.resize(n);
    noise_cut.samples.resize(n);
    truncated = true;
  }
  if (truncated) {
    std::cerr << "warning: clean/noise lengths differ; truncated to "
              << clean_cut.samples.size() << " samples\n";
  }

  const DenoiseResult result =
      denoise_eval(clean_cut, noise_cut, snrs, to_ensemble(opts));
  const std::string noise_name =
      std::filesystem::path(noise_path).stem().string();
  write_denoise_csv(csv_path.string(), noise_name, result.rows);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const DenoiseRow& row = result.rows[i];
    const std::string tag = format_number(row.snr_db) + "dB";
    const auto wav_path =
        std::filesystem::path(opts.out_dir) / ("enhanced_" + tag + ".wav");
    save_wav(result.enhanced[i], wav_path.string());
    if (emit_panels && row.ok) {
      const NoisyMix remixed = mix_at_snr(clean_cut, noise_cut, row.snr_db);
      emit_denoise_panels(opts.out_dir, tag, clean_cut, remixed.noisy,
                          result.enhanced[i]);
    }
    std::cout << "snr_db=" << format_number(row.snr_db)
              << " sdr_db=" << format_number(row.sdr_db)
              << " sar_db=" << format_number(row.sar_db) << "\n";
  }
  manifest["config"]["noise"] = noise_path;
  manifest["config"]["snr_list"] = snrs;
  manifest["results"]["rows"] = result.rows.size();
  write_manifest(opts.out_dir, manifest);
  return kExitOk;
}

int run_separate_speech(const CommonOpts& opts, const std::string& a_path,
                        const std::string& b_path) {
  std::filesystem::create_directories(opts.out_dir);
  const Signal a = load_input(a_path, opts.sample_rate);
  const Signal b = load_input(b_path, opts.sample_rate);

  const SpeechSeparationReport report =
      speech_speech_demo(a, b, to_ensemble(opts));

  const auto csv_path = std::filesystem::path(opts.out_dir) / "speech_demo.csv";
  write_speech_demo_csv(csv_path.string(), a, b, report);

  json manifest;
  manifest["command"] = "separate-speech";
  manifest["config"] = config_json(opts);
  manifest["config"]["a"] = a_path;
  manifest["config"]["b"] = b_path;
  manifest["results"]["sdr_a_db"] = report.sdr_a_db;
  manifest["results"]["sdr_b_db"] = report.sdr_b_db;
  manifest["results"]["degenerate"] = report.degenerate;
  write_manifest(opts.out_dir, manifest);

  std::cout << "sdr_a_db=" << format_number(report.sdr_a_db)
            << " sdr_b_db=" << format_number(report.sdr_b_db)
            << (report.degenerate ? " (degenerate input)" : "") << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "emdsep: EMD/EEMD/CEEMDAN signal decomposition and single-channel "
      "source separation"};
  app.require_subcommand(1);

  CommonOpts opts;

  // decompose
  auto* decompose_cmd =
      app.add_subcommand("decompose", "decompose one signal into IMFs");
  std::string input, method = "ceemdan";
  decompose_cmd->add_option("--input", input, "input WAV or single-column CSV")
      ->required();
  decompose_cmd->add_option("--method", method, "decomposition method")
      ->check(CLI::IsMember({"emd", "eemd", "ceemdan"}));
  add_common_options(decompose_cmd, opts);

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "two-tone frequency or amplitude study");
  std::string kind = "freq", grid_text;
  double fixed_freq = 700.0, duration_s = 1.0;
  sweep_cmd->add_option("--kind", kind, "freq or amp")
      ->check(CLI::IsMember({"freq", "amp"}));
  sweep_cmd->add_option("--f1", fixed_freq, "fixed tone frequency (Hz)");
  sweep_cmd->add_option("--grid", grid_text,
                        "comma-separated F2 or A2 values (default: built-in "
                        "study grid)");
  sweep_cmd->add_option("--duration", duration_s, "tone duration in seconds");
  add_common_options(sweep_cmd, opts);

  // denoise
  auto* denoise_cmd = app.add_subcommand(
      "denoise", "separate noise from speech across a list of SNRs");
  std::string clean_path, noise_path, noisy_path, snr_text = "0,5,10,15";
  bool emit_panels = false;
  denoise_cmd->add_option("--clean", clean_path, "clean speech WAV/CSV")
      ->required();
  denoise_cmd->add_option("--noise", noise_path, "noise WAV/CSV to mix in");
  denoise_cmd->add_option("--noisy", noisy_path,
                          "pre-mixed noisy WAV/CSV (instead of --noise)");
  denoise_cmd->add_option("--snr", snr_text, "comma-separated SNR list in dB");
  denoise_cmd->add_flag("--emit-panels", emit_panels,
                        "also write spectrogram and time-domain CSVs of "
                        "clean/noisy/enhanced");
  add_common_options(denoise_cmd, opts);

  // separate-speech
  auto* speech_cmd = app.add_subcommand(
      "separate-speech", "attempt to separate two mixed speech signals");
  std::string a_path, b_path;
  speech_cmd->add_option("--a", a_path, "first speech WAV/CSV")->required();
  speech_cmd->add_option("--b", b_path, "second speech WAV/CSV")->required();
  add_common_options(speech_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    if (!opts.config_path.empty()) {
      apply_config_file(cmd, load_config_file(opts.config_path), opts);
    }
    if (decompose_cmd->parsed()) return run_decompose(opts, input, method);
    if (sweep_cmd->parsed()) {
      return run_sweep(opts, kind, fixed_freq, sweep_cmd->count("--grid") > 0,
                       grid_text, duration_s);
    }
    if (denoise_cmd->parsed()) {
      if (noise_path.empty() == noisy_path.empty()) {
        throw std::invalid_argument(
            "denoise: exactly one of --noise or --noisy is required");
      }
      return run_denoise(opts, clean_path, noise_path, noisy_path, snr_text,
                         emit_panels);
    }
    if (speech_cmd->parsed()) return run_separate_speech(opts, a_path, b_path);
    throw std::invalid_argument("no subcommand given");
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
