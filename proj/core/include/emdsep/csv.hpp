// core/include/emdsep/csv.hpp

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

#ifndef EMDSEP_CSV_HPP
#define EMDSEP_CSV_HPP

#include <string>
#include <vector>

#include "emdsep/emd.hpp"
#include "emdsep/signal.hpp"

namespace emdsep {

// Fixed 6-significant-digit rendering used by every CSV emitter so that
// regression diffs stay stable; infinities render as "inf"/"-inf".
std::string format_number(double v);

// UTF-8, '.' decimal separator, header row, one record per line.
void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

// Row-oriented variant for tables with non-numeric cells.
void write_table_csv(const std::string& path,
                     const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

// One column per IMF (imf1..imfM) and a final residue column.
void write_decomposition_csv(const std::string& path, const Decomposition& d);

// Reads a single-column CSV (header row required) as a signal.
Signal read_signal_csv(const std::string& path, int sample_rate);

}  // namespace emdsep

#endif  // EMDSEP_CSV_HPP
