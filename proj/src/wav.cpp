// Copyright 2026 The isodub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "isodub/audio.hpp"
#include "isodub/errors.hpp"
#include "isodub/kernels.hpp"

namespace isodub::audio {
namespace {

std::uint32_t read_u32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::uint16_t read_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] |
                                    (static_cast<std::uint16_t>(b[at + 1]) << 8));
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, const char* tag) {
  return std::memcmp(b.data() + at, tag, 4) == 0;
}

void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
  out.push_back((v >> 16) & 0xff);
  out.push_back((v >> 24) & 0xff);
}

void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xff);
  out.push_back((v >> 8) & 0xff);
}

void append_tag(std::vector<std::uint8_t>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

}  // namespace

AudioBuffer load_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE"))
    throw FormatError("not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format_tag = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  std::size_t data_at = 0, data_size = 0;
  bool have_data = false;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    std::uint32_t chunk_size = read_u32(bytes, pos + 4);
    std::size_t body = pos + 8;
    if (tag_is(bytes, pos, "fmt ")) {
      if (chunk_size < 16 || body + 16 > bytes.size())
        throw CorruptionError("truncated fmt chunk");
      format_tag = read_u16(bytes, body);
      channels = read_u16(bytes, body + 2);
      rate = read_u32(bytes, body + 4);
      bits = read_u16(bytes, body + 14);
      have_fmt = true;
    } else if (tag_is(bytes, pos, "data")) {
      data_at = body;
      data_size = chunk_size;
      have_data = true;
      if (body + chunk_size > bytes.size())
        throw CorruptionError("truncated data chunk");
    }
    // Chunks are word-aligned; odd sizes carry a pad byte.
    pos = body + chunk_size + (chunk_size & 1);
  }

  if (!have_fmt) throw FormatError("missing fmt chunk");
  if (!have_data) throw FormatError("missing data chunk");
  if (format_tag != 1) throw FormatError("unsupported WAV encoding (PCM only)");
  if (bits != 16) throw FormatError("unsupported bit depth (16-bit PCM only)");
  if (channels != 1 && channels != 2)
    throw FormatError("unsupported channel count (mono or stereo only)");
  if (!is_supported_rate(static_cast<int>(rate)))
    throw FormatError("unsupported sample rate " + std::to_string(rate));

  const std::size_t bytes_per_frame = 2u * channels;
  const std::size_t frames = data_size / bytes_per_frame;

  // Sample bytes may be unaligned in the container; copy to aligned storage.
  std::vector<std::int16_t> raw(frames * channels);
  std::memcpy(raw.data(), bytes.data() + data_at, frames * bytes_per_frame);

  AudioBuffer out;
  out.sample_rate_hz = static_cast<int>(rate);
  out.samples.resize(frames);
  if (channels == 1)
    kernels::s16_to_float(raw.data(), frames, out.samples.data());
  else
    kernels::downmix_s16_stereo(raw.data(), frames, out.samples.data());
  return out;
}

AudioBuffer load_wav_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open audio file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return load_wav(bytes);
}

std::vector<std::uint8_t> serialize_wav(const AudioBuffer& buf) {
  if (!is_supported_rate(buf.sample_rate_hz))
    throw ContractError("unsupported sample rate " +
                        std::to_string(buf.sample_rate_hz));
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(buf.samples.size() * 2);
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  append_tag(out, "RIFF");
  append_u32(out, 36 + data_size);
  append_tag(out, "WAVE");
  append_tag(out, "fmt ");
  append_u32(out, 16);
  append_u16(out, 1);  // PCM
  append_u16(out, 1);  // mono
  append_u32(out, static_cast<std::uint32_t>(buf.sample_rate_hz));
  append_u32(out, static_cast<std::uint32_t>(buf.sample_rate_hz) * 2);
  append_u16(out, 2);   // block align
  append_u16(out, 16);  // bits
  append_tag(out, "data");
  append_u32(out, data_size);
  for (float x : buf.samples) {
    // Symmetric 1/32768 quantization so decode(encode(decode(bytes))) is
    // bit-exact: every k/32768 maps back to k.
    double c = std::clamp(static_cast<double>(x), -1.0, 1.0);
    long q = std::lround(c * 32768.0);
    q = std::clamp(q, -32768L, 32767L);
    append_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

void save_wav_file(const AudioBuffer& buf, const std::string& path) {
  std::vector<std::uint8_t> bytes = serialize_wav(buf);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write audio file: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("short write: " + path);
}

}  // namespace isodub::audio
