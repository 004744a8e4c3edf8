// core/include/emdsep/wav.hpp

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

#ifndef EMDSEP_WAV_HPP
#define EMDSEP_WAV_HPP

#include <string>

#include "emdsep/signal.hpp"

namespace emdsep {

// Reads a mono RIFF/WAVE file with 16-bit integer PCM or 32-bit float
// samples and a sample rate in [8000, 48000] Hz.  Integer samples are
// normalized to [-1, 1) by division by 32768.  Anything else (multichannel,
// compressed, malformed) raises IoError with a format diagnostic.
Signal load_wav(const std::string& path);

// Writes 16-bit mono PCM.  Samples are clamped to [-1, 1) before
// quantization, so a save/load round trip is exact to within 1/32768.
void save_wav(const Signal& signal, const std::string& path);

}  // namespace emdsep

#endif  // EMDSEP_WAV_HPP
