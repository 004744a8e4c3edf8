// core/src/csv.cpp

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

#include "emdsep/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emdsep/errors.hpp"

namespace emdsep {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (header.size() != columns.size()) {
    throw std::invalid_argument("write_csv: header/column count mismatch");
  }
  std::ofstream out(path);
  if (!out) throw IoError("write_csv: cannot open " + path + " for writing");

  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << "\n";

  std::size_t rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out << ",";
      if (r < columns[c].size()) out << format_number(columns[c][r]);
    }
    out << "\n";
  }
  if (!out) throw IoError("write_csv: write failed for " + path);
}

void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("write_table_csv: cannot open " + path + " for writing");
  for (std::size_t c = 0; c < header.size(); ++c) {
    out << (c ? "," : "") << header[c];
  }
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size()) {
      throw std::invalid_argument("write_table_csv: row width mismatch");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c ? "," : "") << row[c];
    }
    out << "\n";
  }
  if (!out) throw IoError("write_table_csv: write failed for " + path);
}

void write_decomposition_csv(const std::string& path, const Decomposition& d) {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;
  for (std::size_t k = 0; k < d.imfs.size(); ++k) {
    header.push_back("imf" + std::to_string(k + 1));
    columns.push_back(d.imfs[k].samples);
  }
  header.emplace_back("residue");
  columns.push_back(d.residue.samples);
  write_csv(path, header, columns);
}

Signal read_signal_csv(const std::string& path, int sample_rate) {
  std::ifstream in(path);
  if (!in) throw IoError("read_signal_csv: cannot open " + path);

  Signal out;
  out.sample_rate = sample_rate;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {  // header row
      first = false;
      continue;
    }
    if (line.empty()) continue;
    // single-column format; tolerate extra columns by taking the first
    const std::size_t comma = line.find(',');
    const std::string field = comma == std::string::npos ? line : line.substr(0, comma);
    try {
      std::size_t used = 0;
      const double v = std::stod(field, &used);
      if (used == 0) throw std::invalid_argument("empty");
      out.samples.push_back(v);
    } catch (const std::exception&) {
      throw IoError("read_signal_csv: " + path + ":" + std::to_string(lineno) +
                    ": cannot parse '" + field + "' as a number");
    }
  }
  if (first) throw IoError("read_signal_csv: " + path + " is empty");
  validate(out, "read_signal_csv");
  return out;
}

}  // namespace emdsep
