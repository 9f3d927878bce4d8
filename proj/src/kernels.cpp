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

#include "isodub/kernels.hpp"

#include <atomic>

#include "isodub/errors.hpp"

namespace isodub::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(ISODUB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_best() {
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect_best()};
  return backend;
}

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw ContractError(std::string("kernel backend not available: ") +
                        backend_name(b));
  current().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

double sum_squares(const float* x, std::size_t n) {
#if defined(ISODUB_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::sum_squares(x, n);
#endif
  return scalar::sum_squares(x, n);
}

float peak_abs(const float* x, std::size_t n) {
#if defined(ISODUB_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::peak_abs(x, n);
#endif
  return scalar::peak_abs(x, n);
}

void s16_to_float(const std::int16_t* in, std::size_t n, float* out) {
#if defined(ISODUB_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::s16_to_float(in, n, out);
#endif
  return scalar::s16_to_float(in, n, out);
}

void downmix_s16_stereo(const std::int16_t* interleaved, std::size_t frames,
                        float* out) {
#if defined(ISODUB_HAVE_AVX2)
  if (active_backend() == Backend::avx2)
    return avx2::downmix_s16_stereo(interleaved, frames, out);
#endif
  return scalar::downmix_s16_stereo(interleaved, frames, out);
}

}  // namespace isodub::kernels
