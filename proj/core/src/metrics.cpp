// core/src/metrics.cpp

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

#include "emdsep/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace emdsep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Stand-in for +infinity inside assignment objectives, large enough to
// dominate any finite SDR while keeping sums comparable.
constexpr double kSdrObjectiveCap = 1.0e4;

void require_same_length(const Signal& a, const Signal& b, const char* who) {
  if (a.samples.size() != b.samples.size()) {
    throw std::invalid_argument(std::string(who) + ": length mismatch");
  }
}

double ratio_db(double num, double den) {
  if (den <= 0.0) return kInf;
  return 10.0 * std::log10(num / den);
}

std::vector<std::span<const double>> collect_modes(const Decomposition& d) {
  std::vector<std::span<const double>> modes;
  modes.reserve(d.imfs.size() + 1);
  for (const Signal& s : d.imfs) modes.emplace_back(s.samples);
  modes.emplace_back(d.residue.samples);
  return modes;
}

struct AssignmentTables {
  std::vector<double> ref_energy;              // per reference
  std::vector<std::vector<double>> cross;      // [ref][mode]
  std::vector<std::vector<double>> gram;       // [mode][mode]
};

AssignmentTables build_tables(const std::vector<std::span<const double>>& modes,
                              const std::vector<Signal>& refs) {
  AssignmentTables t;
  const std::size_t m = modes.size();
  const std::size_t r = refs.size();
  t.ref_energy.resize(r);
  t.cross.assign(r, std::vector<double>(m));
  for (std::size_t i = 0; i < r; ++i) {
    t.ref_energy[i] = energy(refs[i]);
    for (std::size_t j = 0; j < m; ++j) {
      t.cross[i][j] = dot(refs[i].samples, modes[j]);
    }
  }
  t.gram.assign(m, std::vector<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j; k < m; ++k) {
      t.gram[j][k] = t.gram[k][j] = dot(modes[j], modes[k]);
    }
  }
  return t;
}

// Per-source SDRs of a mode-to-reference map, computed from the
// precomputed inner products:
//   ||ref - sum modes||^2 = ||ref||^2 - 2*sum cross + sum gram.
void evaluate_assignment(const AssignmentTables& t,
                         const std::vector<int>& group_of_mode,
                         std::vector<double>& per_source, double& total) {
  const std::size_t r = t.ref_energy.size();
  const std::size_t m = group_of_mode.size();
  per_source.assign(r, 0.0);
  total = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    double dist = t.ref_energy[i];
    for (std::size_t j = 0; j < m; ++j) {
      if (group_of_mode[j] != static_cast<int>(i)) continue;
      dist -= 2.0 * t.cross[i][j];
      for (std::size_t k = 0; k < m; ++k) {
        if (group_of_mode[k] == static_cast<int>(i)) dist += t.gram[j][k];
      }
    }
    const double s = dist <= 0.0 ? kInf : ratio_db(t.ref_energy[i], dist);
    per_source[i] = s;
    total += std::min(s, kSdrObjectiveCap);
  }
}

Assignment finalize_assignment(const Decomposition& d,
                               const std::vector<Signal>& refs,
                               const AssignmentTables& t,
                               const std::vector<int>& group_of_mode) {
  Assignment out;
  const std::size_t r = refs.size();
  const auto modes = collect_modes(d);
  out.groups.assign(r, {});
  out.estimates.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    out.estimates[i].sample_rate = refs[i].sample_rate;
    out.estimates[i].samples.assign(modes[0].size(), 0.0);
  }
  for (std::size_t j = 0; j < group_of_mode.size(); ++j) {
    const int g = group_of_mode[j];
    out.groups[static_cast<std::size_t>(g)].push_back(static_cast<int>(j));
    auto& est = out.estimates[static_cast<std::size_t>(g)].samples;
    for (std::size_t i = 0; i < est.size(); ++i) est[i] += modes[j][i];
  }
  evaluate_assignment(t, group_of_mode, out.per_source_sdr_db, out.total_sdr_db);
  double mean = 0.0;
  for (double s : out.per_source_sdr_db) mean += std::min(s, kSdrObjectiveCap);
  out.mean_sdr_db = mean / static_cast<double>(r);
  return out;
}

void check_assignment_inputs(const Decomposition& d,
                             const std::vector<Signal>& refs) {
  if (d.residue.samples.empty()) {
    throw std::invalid_argument("assign_imfs: empty decomposition");
  }
  if (refs.empty()) {
    throw std::invalid_argument("assign_imfs: need at least one reference");
  }
  for (const Signal& ref : refs) {
    if (ref.size() != d.source_length()) {
      throw std::invalid_argument("assign_imfs: reference length mismatch");
    }
    if (energy(ref) <= 0.0) {
      throw std::invalid_argument("assign_imfs: zero-energy reference");
    }
  }
}

std::vector<int> greedy_groups(const std::vector<std::span<const double>>& modes,
                               const AssignmentTables& t) {
  const std::size_t m = modes.size();
  const std::size_t r = t.ref_energy.size();
  std::vector<int> group(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const double mode_norm = std::sqrt(t.gram[j][j]);
    double best = -kInf;
    int best_ref = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const double denom = mode_norm * std::sqrt(t.ref_energy[i]);
      const double corr = denom > 0.0 ? t.cross[i][j] / denom : 0.0;
      if (corr > best) {
        best = corr;
        best_ref = static_cast<int>(i);
      }
    }
    group[j] = best_ref;
  }
  return group;
}

}  // namespace

double sdr(const Signal& reference, const Signal& estimate) {
  require_same_length(reference, estimate, "sdr");
  const double ref_energy = energy(reference);
  if (ref_energy <= 0.0) {
    throw std::invalid_argument("sdr: reference has zero energy");
  }
  double dist = 0.0;
  for (std::size_t i = 0; i < reference.samples.size(); ++i) {
    const double d = reference.samples[i] - estimate.samples[i];
    dist += d * d;
  }
  return ratio_db(ref_energy, dist);
}

double snr(const Signal& clean, const Signal& degraded) {
  require_same_length(clean, degraded, "snr");
  const double clean_energy = energy(clean);
  if (clean_energy <= 0.0) {
    throw std::invalid_argument("snr: clean signal has zero energy");
  }
  double noise_energy = 0.0;
  for (std::size_t i = 0; i < clean.samples.size(); ++i) {
    const double d = degraded.samples[i] - clean.samples[i];
    noise_energy += d * d;
  }
  return ratio_db(clean_energy, noise_energy);
}

ErrorDecomposition decompose_error(const Signal& reference,
                                   const Signal& estimate,
                                   const Signal* noise_ref,
                                   const std::vector<Signal>* interferers) {
  require_same_length(reference, estimate, "decompose_error");
  const double ref_energy = energy(reference);
  if (ref_energy <= 0.0) {
    throw std::invalid_argument("decompose_error: reference has zero energy");
  }
  const std::size_t n = reference.samples.size();

  ErrorDecomposition out;
  for (Signal* s : {&out.target, &out.e_interf, &out.e_noise, &out.e_artif}) {
    s->sample_rate = reference.sample_rate;
    s->samples.assign(n, 0.0);
  }

  // target: projection of the estimate onto the reference
  const double scale = dot(estimate.samples, reference.samples) / ref_energy;
  std::vector<double> rest(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.target.samples[i] = scale * reference.samples[i];
    rest[i] = estimate.samples[i] - out.target.samples[i];
  }

  // e_interf: least-squares projection of the remainder onto the span of
  // the interferers (orthonormalized so dependent directions drop out)
  if (interferers && !interferers->empty()) {
    std::vector<std::vector<double>> basis;
    for (const Signal& s : *interferers) {
      require_same_length(reference, s, "decompose_error interferer");
      std::vector<double> v = s.samples;
      for (const auto& b : basis) {
        const double c = dot(v, b);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
      }
      const double norm = std::sqrt(energy(std::span<const double>(v)));
      if (norm > 1e-12 * std::sqrt(energy(s))) {
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
      }
    }
    for (const auto& b : basis) {
      const double c = dot(rest, b);
      for (std::size_t i = 0; i < n; ++i) out.e_interf.samples[i] += c * b[i];
    }
    for (std::size_t i = 0; i < n; ++i) rest[i] -= out.e_interf.samples[i];
  }

  // e_noise: projection of what is left onto the noise reference
  if (noise_ref) {
    require_same_length(reference, *noise_ref, "decompose_error noise_ref");
    const double noise_energy = energy(*noise_ref);
    if (noise_energy > 0.0) {
      const double c = dot(rest, noise_ref->samples) / noise_energy;
      for (std::size_t i = 0; i < n; ++i) {
        out.e_noise.samples[i] = c * noise_ref->samples[i];
        rest[i] -= out.e_noise.samples[i];
      }
    }
  }

  out.e_artif.samples = std::move(rest);
  return out;
}

double sar(const ErrorDecomposition& error) {
  const std::size_t n = error.target.samples.size();
  double legit_energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = error.target.samples[i] + error.e_interf.samples[i] +
                     error.e_noise.samples[i];
    legit_energy += v * v;
  }
  if (legit_energy <= 0.0) {
    throw std::invalid_argument("sar: zero-energy denominator");
  }
  const double artifact_energy = energy(error.e_artif);
  // artifacts that vanish up to rounding count as none at all
  if (artifact_energy <= 1e-20 * legit_energy) return kInf;
  return ratio_db(legit_energy, artifact_energy);
}

Assignment assign_imfs(const Decomposition& decomposition,
                       const std::vector<Signal>& references) {
  check_assignment_inputs(decomposition, references);
  const auto modes = collect_modes(decomposition);
  const AssignmentTables tables = build_tables(modes, references);

  const std::size_t m = modes.size();
  const std::size_t r = references.size();

  // exhaustive only while r^m stays desk-scale (2 refs x 2^16 at the limit)
  double combos = 1.0;
  for (std::size_t j = 0; j < m; ++j) combos *= static_cast<double>(r);
  if (combos > 131072.0) {
    return assign_imfs_greedy(decomposition, references);
  }

  std::vector<int> group(m, 0);
  std::vector<int> best_group = group;
  std::vector<double> per_source;
  double total = 0.0;
  double best_total = -kInf;
  while (true) {
    evaluate_assignment(tables, group, per_source, total);
    if (total > best_total) {
      best_total = total;
      best_group = group;
    }
    // odometer over base-r digits
    std::size_t j = 0;
    while (j < m) {
      if (++group[j] < static_cast<int>(r)) break;
      group[j] = 0;
      ++j;
    }
    if (j == m) break;
  }
  return finalize_assignment(decomposition, references, tables, best_group);
}

Assignment assign_imfs_greedy(const Decomposition& decomposition,
                              const std::vector<Signal>& references) {
  check_assignment_inputs(decomposition, references);
  const auto modes = collect_modes(decomposition);
  const AssignmentTables tables = build_tables(modes, references);
  return finalize_assignment(decomposition, references, tables,
                             greedy_groups(modes, tables));
}

namespace {

// renders infinities as "inf"/"-inf" so report consumers see the sentinel
void append_json_number(std::string& out, double v) {
  if (std::isinf(v)) {
    out += v > 0 ? "\"inf\"" : "\"-inf\"";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  out += buf;
}

std::string short_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string to_json_string(const MetricsReport& report) {
  std::string out = "{\"sdr_db\": ";
  append_json_number(out, report.sdr_db);
  out += ", \"sar_db\": ";
  append_json_number(out, report.sar_db);
  if (report.snr_db) {
    out += ", \"snr_db\": ";
    append_json_number(out, *report.snr_db);
  }
  out += ", \"per_source\": [";
  for (std::size_t i = 0; i < report.per_source.size(); ++i) {
    if (i) out += ", ";
    out += "{\"source\": \"" + report.per_source[i].source_id + "\", \"sdr_db\": ";
    append_json_number(out, report.per_source[i].sdr_db);
    out += ", \"sar_db\": ";
    append_json_number(out, report.per_source[i].sar_db);
    out += "}";
  }
  out += "]}";
  return out;
}

std::vector<std::string> metrics_csv_header() {
  return {"snr_db", "sdr_db", "sar_db"};
}

std::vector<std::string> to_csv_row(const MetricsReport& report) {
  return {report.snr_db ? short_number(*report.snr_db) : "",
          short_number(report.sdr_db), short_number(report.sar_db)};
}

}  // namespace emdsep
