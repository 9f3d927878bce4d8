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

#include "isodub/audio.hpp"
#include "isodub/errors.hpp"

using namespace isodub;

TEST_SUITE_BEGIN("audio");

namespace {

void put_u32(std::vector<std::uint8_t>* b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b->push_back((v >> (8 * i)) & 0xFF);
}
void put_u16(std::vector<std::uint8_t>* b, std::uint16_t v) {
  for (int i = 0; i < 2; ++i) b->push_back((v >> (8 * i)) & 0xFF);
}
void put_tag(std::vector<std::uint8_t>* b, const char* tag) {
  for (int i = 0; i < 4; ++i) b->push_back(static_cast<std::uint8_t>(tag[i]));
}

// Hand-built WAV with arbitrary channel count/format and optional extra
// chunk before data.
std::vector<std::uint8_t> build_wav(const std::vector<std::int16_t>& samples,
                                    int rate, std::uint16_t channels,
                                    std::uint16_t format_tag = 1,
                                    std::uint16_t bits = 16,
                                    bool extra_chunk = false,
                                    bool truncate_data = false) {
  std::vector<std::uint8_t> fmt;
  put_u16(&fmt, format_tag);
  put_u16(&fmt, channels);
  put_u32(&fmt, static_cast<std::uint32_t>(rate));
  put_u32(&fmt, static_cast<std::uint32_t>(rate * channels * bits / 8));
  put_u16(&fmt, static_cast<std::uint16_t>(channels * bits / 8));
  put_u16(&fmt, bits);

  std::vector<std::uint8_t> body;
  put_tag(&body, "WAVE");
  put_tag(&body, "fmt ");
  put_u32(&body, static_cast<std::uint32_t>(fmt.size()));
  body.insert(body.end(), fmt.begin(), fmt.end());
  if (extra_chunk) {
    put_tag(&body, "LIST");
    put_u32(&body, 3);  // odd size exercises the pad byte
    body.push_back('a');
    body.push_back('b');
    body.push_back('c');
    body.push_back(0);  // pad
  }
  put_tag(&body, "data");
  put_u32(&body, static_cast<std::uint32_t>(samples.size() * 2));
  for (std::int16_t s : samples)
    put_u16(&body, static_cast<std::uint16_t>(s));
  if (truncate_data) body.resize(body.size() - 2);

  std::vector<std::uint8_t> out;
  put_tag(&out, "RIFF");
  put_u32(&out, static_cast<std::uint32_t>(body.size()));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

}  // namespace

TEST_CASE("ms/sample conversions round to the nearest sample") {
  CHECK(audio::ms_to_samples(1000, 16000) == 16000);
  CHECK(audio::ms_to_samples(1, 22050) == 22);   // 22.05 rounds down
  CHECK(audio::ms_to_samples(3, 22050) == 66);   // 66.15 rounds down
  CHECK(audio::samples_to_ms(16000, 16000) == 1000);
  CHECK(audio::samples_to_ms(8, 16000) == 1);    // 0.5 ms rounds up
  CHECK(audio::is_supported_rate(44100));
  CHECK_FALSE(audio::is_supported_rate(44000));
}

TEST_CASE("serialize/load round-trip preserves PCM16 payloads exactly") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-32768, 32767);
  audio::AudioBuffer buf;
  buf.sample_rate_hz = 16000;
  for (int i = 0; i < 2000; ++i)
    buf.samples.push_back(static_cast<float>(d(rng)) * (1.0f / 32768.0f));
  audio::AudioBuffer back = audio::load_wav(audio::serialize_wav(buf));
  CHECK(back.sample_rate_hz == buf.sample_rate_hz);
  REQUIRE(back.samples.size() == buf.samples.size());
  for (std::size_t i = 0; i < buf.samples.size(); ++i)
    CHECK(std::fabs(back.samples[i] - buf.samples[i]) <= 1.0f / 32768.0f);
  // A second round trip is exact: the payload is already quantized.
  audio::AudioBuffer back2 = audio::load_wav(audio::serialize_wav(back));
  CHECK(back2.samples == back.samples);
}

TEST_CASE("stereo input is averaged to mono") {
  std::vector<std::int16_t> lr = {1000, 3000, -2000, -4000, 32767, 32767};
  audio::AudioBuffer buf = audio::load_wav(build_wav(lr, 16000, 2));
  REQUIRE(buf.samples.size() == 3);
  CHECK(buf.samples[0] == doctest::Approx(2000.0f / 32768.0f).epsilon(1e-7));
  CHECK(buf.samples[1] == doctest::Approx(-3000.0f / 32768.0f).epsilon(1e-7));
  CHECK(buf.samples[2] == doctest::Approx(32767.0f / 32768.0f).epsilon(1e-7));
}

TEST_CASE("unknown chunks are skipped, including odd-sized ones") {
  std::vector<std::int16_t> s = {100, -100, 200};
  audio::AudioBuffer buf =
      audio::load_wav(build_wav(s, 16000, 1, 1, 16, /*extra_chunk=*/true));
  CHECK(buf.samples.size() == 3);
}

TEST_CASE("malformed containers raise the right errors") {
  std::vector<std::int16_t> s = {1, 2, 3, 4};
  CHECK_THROWS_AS(audio::load_wav(build_wav(s, 16000, 1, /*format=*/3)),
                  FormatError);  // IEEE float
  CHECK_THROWS_AS(audio::load_wav(build_wav(s, 16000, 3)), FormatError);
  CHECK_THROWS_AS(audio::load_wav(build_wav(s, 12345, 1)), FormatError);
  CHECK_THROWS_AS(audio::load_wav(build_wav(s, 16000, 1, 1, 8)), FormatError);
  CHECK_THROWS_AS(
      audio::load_wav(build_wav(s, 16000, 1, 1, 16, false, /*trunc=*/true)),
      CorruptionError);
  std::vector<std::uint8_t> garbage = {'R', 'I', 'F', 'F', 0, 0, 0, 0};
  CHECK_THROWS_AS(audio::load_wav(garbage), FormatError);
}

TEST_CASE("slice_ms clamps to the buffer and validates the range") {
  audio::AudioBuffer buf;
  buf.sample_rate_hz = 16000;
  buf.samples.assign(16000, 0.25f);  // 1 s
  CHECK(audio::slice_ms(buf, 0, 1000).samples.size() == 16000);
  CHECK(audio::slice_ms(buf, 250, 750).samples.size() == 8000);
  CHECK(audio::slice_ms(buf, 500, 5000).samples.size() == 8000);  // clamped
  CHECK(audio::slice_ms(buf, 2000, 3000).samples.empty());
  CHECK_THROWS_AS(audio::slice_ms(buf, -1, 100), ContractError);
  CHECK_THROWS_AS(audio::slice_ms(buf, 500, 100), ContractError);
}

TEST_CASE("duration_ms reflects the sample count") {
  audio::AudioBuffer buf;
  buf.sample_rate_hz = 48000;
  buf.samples.assign(48000 + 24, 0.0f);  // 1000.5 ms
  CHECK(buf.duration_ms() == 1001);
}

TEST_SUITE_END();
