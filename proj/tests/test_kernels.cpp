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
#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "isodub/errors.hpp"
#include "isodub/kernels.hpp"

using namespace isodub;

TEST_SUITE_BEGIN("kernels");

namespace {

std::vector<float> random_floats(std::mt19937* rng, std::size_t n) {
  std::uniform_real_distribution<float> d(-1.0f, 1.0f);
  std::vector<float> v(n);
  for (float& x : v) x = d(*rng);
  return v;
}

std::vector<std::int16_t> random_s16(std::mt19937* rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-32768, 32767);
  std::vector<std::int16_t> v(n);
  for (std::int16_t& x : v) x = static_cast<std::int16_t>(d(*rng));
  return v;
}

// Sizes that exercise empty input, SIMD remainders, and full vectors.
const std::size_t kSizes[] = {0, 1, 2, 7, 8, 9, 15, 16, 17, 63, 64, 1023, 4096};

}  // namespace

TEST_CASE("scalar sum_squares matches a long-double reference") {
  std::mt19937 rng(1);
  for (std::size_t n : kSizes) {
    std::vector<float> v = random_floats(&rng, n);
    long double ref = 0.0L;
    for (float x : v) ref += static_cast<long double>(x) * x;
    double got = kernels::scalar::sum_squares(v.data(), v.size());
    CHECK(std::fabs(got - static_cast<double>(ref)) <=
          1e-12 * std::max(1.0, static_cast<double>(ref)));
  }
}

TEST_CASE("scalar element kernels are exact") {
  std::mt19937 rng(2);
  std::vector<std::int16_t> in = random_s16(&rng, 33);
  std::vector<float> out(33);
  kernels::scalar::s16_to_float(in.data(), in.size(), out.data());
  for (std::size_t i = 0; i < in.size(); ++i)
    CHECK(out[i] == static_cast<float>(in[i]) * (1.0f / 32768.0f));

  std::vector<std::int16_t> lr = random_s16(&rng, 66);  // 33 frames
  std::vector<float> mono(33);
  kernels::scalar::downmix_s16_stereo(lr.data(), 33, mono.data());
  for (std::size_t i = 0; i < 33; ++i) {
    int sum = static_cast<int>(lr[2 * i]) + static_cast<int>(lr[2 * i + 1]);
    CHECK(mono[i] == static_cast<float>(sum) * (0.5f / 32768.0f));
  }

  std::vector<float> v = random_floats(&rng, 41);
  float peak = 0.0f;
  for (float x : v) peak = std::max(peak, std::fabs(x));
  CHECK(kernels::scalar::peak_abs(v.data(), v.size()) == peak);
  CHECK(kernels::scalar::peak_abs(v.data(), 0) == 0.0f);
}

#if defined(ISODUB_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with scalar") {
  if (!kernels::backend_available(kernels::Backend::avx2)) {
    MESSAGE("avx2 not available on this machine; skipping");
    return;
  }
  std::mt19937 rng(3);
  for (std::size_t n : kSizes) {
    std::vector<float> v = random_floats(&rng, n);
    double ss_s = kernels::scalar::sum_squares(v.data(), n);
    double ss_v = kernels::avx2::sum_squares(v.data(), n);
    CHECK(std::fabs(ss_s - ss_v) <= 1e-10 * std::max(1.0, ss_s));

    // peak is a max of exact values: bit-identical
    CHECK(kernels::avx2::peak_abs(v.data(), n) ==
          kernels::scalar::peak_abs(v.data(), n));

    std::vector<std::int16_t> s16 = random_s16(&rng, n);
    std::vector<float> a(n), b(n);
    kernels::scalar::s16_to_float(s16.data(), n, a.data());
    kernels::avx2::s16_to_float(s16.data(), n, b.data());
    CHECK(a == b);

    std::vector<std::int16_t> lr = random_s16(&rng, 2 * n);
    std::vector<float> ma(n), mb(n);
    kernels::scalar::downmix_s16_stereo(lr.data(), n, ma.data());
    kernels::avx2::downmix_s16_stereo(lr.data(), n, mb.data());
    CHECK(ma == mb);
  }
}
#endif

TEST_CASE("backend selection dispatches and validates") {
  kernels::Backend original = kernels::active_backend();
  CHECK(kernels::backend_available(kernels::Backend::scalar));
  kernels::set_backend(kernels::Backend::scalar);
  CHECK(kernels::active_backend() == kernels::Backend::scalar);
  CHECK(std::string(kernels::backend_name(kernels::Backend::scalar)) ==
        "scalar");

  std::vector<float> v{0.5f, -0.25f};
  CHECK(kernels::sum_squares(v.data(), v.size()) ==
        kernels::scalar::sum_squares(v.data(), v.size()));

  if (kernels::backend_available(kernels::Backend::avx2)) {
    kernels::set_backend(kernels::Backend::avx2);
    CHECK(kernels::active_backend() == kernels::Backend::avx2);
  } else {
    CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::avx2),
                    ContractError);
  }
  kernels::set_backend(original);
}

TEST_SUITE_END();
