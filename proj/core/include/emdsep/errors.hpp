// core/include/emdsep/errors.hpp

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

#ifndef EMDSEP_ERRORS_HPP
#define EMDSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emdsep {

// File could not be read, written, or is not in an accepted format.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A signal lacks the extrema needed to build both envelopes; the caller
// treats it as un-decomposable.
class InsufficientExtrema : public std::runtime_error {
 public:
  explicit InsufficientExtrema(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace emdsep

#endif  // EMDSEP_ERRORS_HPP
