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

#include "isodub/audio.hpp"

#include <algorithm>
#include <cmath>

#include "isodub/errors.hpp"

namespace isodub::audio {

bool is_supported_rate(int sample_rate_hz) {
  return std::find(kSupportedRates.begin(), kSupportedRates.end(),
                   sample_rate_hz) != kSupportedRates.end();
}

std::size_t ms_to_samples(TimeMs ms, int sample_rate_hz) {
  return static_cast<std::size_t>(
      std::llround(static_cast<double>(ms) * sample_rate_hz / 1000.0));
}

TimeMs samples_to_ms(std::size_t samples, int sample_rate_hz) {
  return std::llround(static_cast<double>(samples) * 1000.0 / sample_rate_hz);
}

TimeMs AudioBuffer::duration_ms() const {
  return samples_to_ms(samples.size(), sample_rate_hz);
}

AudioBuffer slice_ms(const AudioBuffer& buf, TimeMs begin_ms, TimeMs end_ms) {
  if (begin_ms < 0 || end_ms < begin_ms)
    throw ContractError("slice_ms: invalid range");
  std::size_t b = std::min(ms_to_samples(begin_ms, buf.sample_rate_hz),
                           buf.samples.size());
  std::size_t e =
      std::min(ms_to_samples(end_ms, buf.sample_rate_hz), buf.samples.size());
  AudioBuffer out;
  out.sample_rate_hz = buf.sample_rate_hz;
  out.samples.assign(buf.samples.begin() + b, buf.samples.begin() + e);
  return out;
}

}  // namespace isodub::audio
