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

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isodub/types.hpp"

namespace isodub::audio {

inline constexpr std::array<int, 5> kSupportedRates{8000, 16000, 22050, 44100,
                                                    48000};

bool is_supported_rate(int sample_rate_hz);

// Mono PCM in [-1, 1].
struct AudioBuffer {
  int sample_rate_hz = 16000;
  std::vector<float> samples;

  TimeMs duration_ms() const;
};

std::size_t ms_to_samples(TimeMs ms, int sample_rate_hz);
TimeMs samples_to_ms(std::size_t samples, int sample_rate_hz);

// Copy of [begin_ms, end_ms), clamped to the buffer. begin > end throws
// ContractError.
AudioBuffer slice_ms(const AudioBuffer& buf, TimeMs begin_ms, TimeMs end_ms);

// RIFF/WAVE decoding. Accepts PCM-16, mono or stereo, at a supported sample
// rate; stereo is averaged to mono; samples scale by 1/32768. Anything else
// is a FormatError; a data chunk shorter than declared is a CorruptionError.
AudioBuffer load_wav(std::span<const std::uint8_t> bytes);
AudioBuffer load_wav_file(const std::string& path);

// Canonical output container: RIFF/WAVE, PCM-16, mono.
std::vector<std::uint8_t> serialize_wav(const AudioBuffer& buf);
void save_wav_file(const AudioBuffer& buf, const std::string& path);

}  // namespace isodub::audio
