// core/src/wav.cpp

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

#include "emdsep/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "emdsep/errors.hpp"

namespace emdsep {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void write_u16(std::ofstream& out, std::uint16_t v) {
  const unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>(v >> 8)};
  out.write(reinterpret_cast<const char*>(b), 2);
}

void write_u32(std::ofstream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                              static_cast<unsigned char>((v >> 8) & 0xff),
                              static_cast<unsigned char>((v >> 16) & 0xff),
                              static_cast<unsigned char>((v >> 24) & 0xff)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

Signal load_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("load_wav: cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

  if (bytes.size() < 44 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw IoError("load_wav: " + path + " is not a RIFF/WAVE file");
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char* data = nullptr;
  std::uint32_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
    const std::uint32_t size = read_u32(bytes.data() + pos + 4);
    const std::size_t body = pos + 8;
    if (body + size > bytes.size()) {
      throw IoError("load_wav: " + path + " has a truncated chunk");
    }
    if (std::memcmp(id, "fmt ", 4) == 0) {
      if (size < 16) throw IoError("load_wav: fmt chunk too small");
      format = read_u16(bytes.data() + body);
      channels = read_u16(bytes.data() + body + 2);
      rate = read_u32(bytes.data() + body + 4);
      bits = read_u16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(id, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt || !data) {
    throw IoError("load_wav: " + path + " is missing fmt or data chunk");
  }
  if (format != kFormatPcm && format != kFormatFloat) {
    throw IoError("load_wav: " + path + " uses compressed/unsupported format " +
                  std::to_string(format) + " (PCM or IEEE float required)");
  }
  if (channels != 1) {
    throw IoError("load_wav: " + path + " has " + std::to_string(channels) +
                  " channels; only mono is supported");
  }
  if (rate < 8000 || rate > 48000) {
    throw IoError("load_wav: " + path + " sample rate " + std::to_string(rate) +
                  " Hz outside accepted range [8000, 48000]");
  }
  if (format == kFormatPcm && bits != 16) {
    throw IoError("load_wav: " + path + " PCM must be 16-bit, got " +
                  std::to_string(bits));
  }
  if (format == kFormatFloat && bits != 32) {
    throw IoError("load_wav: " + path + " float must be 32-bit, got " +
                  std::to_string(bits));
  }

  Signal out;
  out.sample_rate = static_cast<int>(rate);
  if (format == kFormatPcm) {
    const std::size_t count = data_size / 2;
    if (count == 0) throw IoError("load_wav: " + path + " has no samples");
    out.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto raw = static_cast<std::int16_t>(read_u16(data + 2 * i));
      out.samples[i] = static_cast<double>(raw) / 32768.0;
    }
  } else {
    const std::size_t count = data_size / 4;
    if (count == 0) throw IoError("load_wav: " + path + " has no samples");
    out.samples.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint32_t u = read_u32(data + 4 * i);
      out.samples[i] = static_cast<double>(std::bit_cast<float>(u));
    }
  }
  validate(out, "load_wav");
  return out;
}

void save_wav(const Signal& signal, const std::string& path) {
  validate(signal, "save_wav");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("save_wav: cannot open " + path + " for writing");

  const std::uint32_t n = static_cast<std::uint32_t>(signal.samples.size());
  const std::uint32_t data_size = n * 2;

  out.write("RIFF", 4);
  write_u32(out, 36 + data_size);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, kFormatPcm);
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<std::uint32_t>(signal.sample_rate));
  write_u32(out, static_cast<std::uint32_t>(signal.sample_rate) * 2);
  write_u16(out, 2);   // block align
  write_u16(out, 16);  // bits per sample
  out.write("data", 4);
  write_u32(out, data_size);

  for (double v : signal.samples) {
    const double scaled = std::round(v * 32768.0);
    const auto q = static_cast<std::int16_t>(
        std::clamp(scaled, -32768.0, 32767.0));
    write_u16(out, static_cast<std::uint16_t>(q));
  }
  if (!out) throw IoError("save_wav: write failed for " + path);
}

}  // namespace emdsep
