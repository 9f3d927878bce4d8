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

// This translation unit is compiled with -mavx2 -mfma. Runtime CPU
// detection in kernels.cpp ensures these functions are only called on CPUs
// with AVX2 and FMA support.

#include "isodub/kernels.hpp"

#if defined(ISODUB_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace isodub::kernels::avx2 {

double sum_squares(const float* x, std::size_t n) {
  // Squares accumulate in double lanes; floats are widened before the FMA so
  // each term is exact and only the summation order differs from scalar.
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_loadu_ps(x + i);
    __m256d lo = _mm256_cvtps_pd(_mm256_castps256_ps128(v));
    __m256d hi = _mm256_cvtps_pd(_mm256_extractf128_ps(v, 1));
    acc0 = _mm256_fmadd_pd(lo, lo, acc0);
    acc1 = _mm256_fmadd_pd(hi, hi, acc1);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    double v = x[i];
    acc += v * v;
  }
  return acc;
}

float peak_abs(const float* x, std::size_t n) {
  const __m256 abs_mask = _mm256_castsi256_ps(_mm256_set1_epi32(0x7fffffff));
  __m256 best = _mm256_setzero_ps();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256 v = _mm256_and_ps(abs_mask, _mm256_loadu_ps(x + i));
    best = _mm256_max_ps(best, v);
  }
  alignas(32) float lanes[8];
  _mm256_store_ps(lanes, best);
  float peak = 0.0f;
  for (float v : lanes) peak = std::max(peak, v);
  for (; i < n; ++i) peak = std::max(peak, std::fabs(x[i]));
  return peak;
}

void s16_to_float(const std::int16_t* in, std::size_t n, float* out) {
  constexpr float kScale = 1.0f / 32768.0f;
  const __m256 scale = _mm256_set1_ps(kScale);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + i));
    __m256 f = _mm256_cvtepi32_ps(_mm256_cvtepi16_epi32(raw));
    _mm256_storeu_ps(out + i, _mm256_mul_ps(f, scale));
  }
  for (; i < n; ++i) out[i] = static_cast<float>(in[i]) * kScale;
}

void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out) {
  constexpr float kScale = 0.5f / 32768.0f;
  const __m256 scale = _mm256_set1_ps(kScale);
  const __m256i ones = _mm256_set1_epi16(1);
  std::size_t i = 0;
  for (; i + 8 <= frames; i += 8) {
    // 8 stereo frames = 16 interleaved samples; madd(x, 1) sums each L/R pair
    // into an exact 32-bit integer.
    __m256i lr = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(interleaved + 2 * i));
    __m256 f = _mm256_cvtepi32_ps(_mm256_madd_epi16(lr, ones));
    _mm256_storeu_ps(out + i, _mm256_mul_ps(f, scale));
  }
  for (; i < frames; ++i) {
    int sum = static_cast<int>(interleaved[2 * i]) +
              static_cast<int>(interleaved[2 * i + 1]);
    out[i] = static_cast<float>(sum) * kScale;
  }
}

}  // namespace isodub::kernels::avx2

#endif  // ISODUB_HAVE_AVX2
