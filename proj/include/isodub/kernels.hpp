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

#include <cstddef>
#include <cstdint>

// Data-parallel inner loops of the audio layer. Every kernel has a scalar
// reference implementation; ISA-specific variants are compiled per-TU with
// the matching flags and picked at runtime by CPU detection, so the generic
// build still runs everywhere. SIMD variants are equivalence-tested against
// the scalar references: s16_to_float / downmix_s16_stereo / peak_abs are
// bit-exact by construction (element-wise ops, power-of-two scales, exact
// int->float conversions); sum_squares may differ only by double-rounding
// in the accumulation order.

namespace isodub::kernels {

enum class Backend { scalar, avx2 };

// Scalar references. Always available; also the oracle side of the
// equivalence tests.
namespace scalar {
double sum_squares(const float* x, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void s16_to_float(const std::int16_t* in, std::size_t n, float* out);
void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out);
}  // namespace scalar

#if defined(ISODUB_HAVE_AVX2)
// Compiled with -mavx2 -mfma; dispatch guarantees these run only on CPUs
// that report AVX2+FMA support.
namespace avx2 {
double sum_squares(const float* x, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void s16_to_float(const std::int16_t* in, std::size_t n, float* out);
void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out);
}  // namespace avx2
#endif

// True when this build carries the backend AND the CPU can run it.
bool backend_available(Backend b);

// The backend the dispatched entry points below currently use. Defaults to
// the best available one, decided once at startup.
Backend active_backend();

// Forces a backend (tests, reproducibility experiments). Throws
// ContractError when backend_available(b) is false.
void set_backend(Backend b);

const char* backend_name(Backend b);

// Dispatched entry points.
double sum_squares(const float* x, std::size_t n);
float peak_abs(const float* x, std::size_t n);
void s16_to_float(const std::int16_t* in, std::size_t n, float* out);
void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out);

}  // namespace isodub::kernels
