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

#include <cmath>

#include "isodub/kernels.hpp"

namespace isodub::kernels::scalar {

double sum_squares(const float* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = x[i];
    acc += v * v;
  }
  return acc;
}

float peak_abs(const float* x, std::size_t n) {
  float peak = 0.0f;
  for (std::size_t i = 0; i < n; ++i) {
    float v = std::fabs(x[i]);
    if (v > peak) peak = v;
  }
  return peak;
}

void s16_to_float(const std::int16_t* in, std::size_t n, float* out) {
  constexpr float kScale = 1.0f / 32768.0f;
  for (std::size_t i = 0; i < n; ++i)
    out[i] = static_cast<float>(in[i]) * kScale;
}

void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out) {
  // (l + r) is exact in int32 and below 2^24, so the int->float conversion
  // is exact; the power-of-two scale keeps this bit-identical across
  // backends.
  constexpr float kScale = 0.5f / 32768.0f;
  for (std::size_t i = 0; i < frames; ++i) {
    int sum = static_cast<int>(interleaved[2 * i]) +
              static_cast<int>(interleaved[2 * i + 1]);
    out[i] = static_cast<float>(sum) * kScale;
  }
}

}  // namespace isodub::kernels::scalar
