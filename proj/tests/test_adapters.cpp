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
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <doctest.h>

#include "isodub/adapters.hpp"
#include "isodub/audio.hpp"
#include "isodub/errors.hpp"

using namespace isodub;

TEST_SUITE_BEGIN("adapters");

namespace {

constexpr char kPauseMark250[] =
    "\xE2\x9F\xA8pause ms=250\xE2\x9F\xA9";  // ⟨pause ms=250⟩

double expected_ms(std::size_t syllables, double rate, TimeMs pause_ms) {
  return 1000.0 * static_cast<double>(syllables) / rate +
         static_cast<double>(pause_ms);
}

std::size_t text_syllables(const std::string& words) {
  std::size_t n = 0;
  std::string tok;
  for (char c : words + " ") {
    if (c == ' ') {
      if (!tok.empty()) n += adapters::count_syllables(tok);
      tok.clear();
    } else {
      tok += c;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("syllable counting follows vowel runs") {
  CHECK(adapters::count_syllables("binary") == 3);
  CHECK(adapters::count_syllables("tree") == 1);
  CHECK(adapters::count_syllables("search") == 1);
  CHECK(adapters::count_syllables("a++;") == 1);
  CHECK(adapters::count_syllables("rhythm") == 1);
  CHECK(adapters::count_syllables("queue") == 1);
  CHECK(adapters::count_syllables("isochrony") == 4);
  CHECK(adapters::count_syllables("pqrst") == 1);  // never zero for a token
  CHECK(adapters::count_syllables("") == 0);
}

TEST_CASE("stub translator passes through or reverses word order") {
  adapters::StubTranslator identity(false);
  CHECK(identity.translate("keep __DT0__ as is") == "keep __DT0__ as is");

  adapters::StubTranslator reversing(true);
  CHECK(reversing.translate("alpha __DT0__ beta") == "beta __DT0__ alpha");
  CHECK(reversing.translate("  spaced   out  ") == "out spaced");
  CHECK(reversing.translate("single") == "single");
}

TEST_CASE("stub transliterator is the identity") {
  adapters::StubTransliterator t;
  CHECK(t.transliterate("sarvajanik") == "sarvajanik");
}

TEST_CASE("stub synthesizer obeys the duration law") {
  adapters::StubSynthesizer synth(16000);
  struct Case {
    std::string text;
    double rate;
    TimeMs pause_ms;
  };
  std::vector<Case> cases{
      {"hello world now", 4.0, 0},
      {"we sort the binary search tree", 2.0, 0},
      {"one two " + std::string(kPauseMark250) + " three", 3.7, 250},
      {std::string(kPauseMark250) + " after silence", 6.3, 250},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    CAPTURE(c.rate);
    audio::AudioBuffer buf = synth.synthesize(c.text, c.rate);
    CHECK(buf.sample_rate_hz == 16000);
    std::string plain = c.text;
    std::size_t hit;
    while ((hit = plain.find(kPauseMark250)) != std::string::npos)
      plain.replace(hit, std::string(kPauseMark250).size(), " ");
    double want = expected_ms(text_syllables(plain), c.rate, c.pause_ms);
    CHECK(std::fabs(static_cast<double>(buf.duration_ms()) - want) <= 1.0);
  }
}

TEST_CASE("stub synthesizer renders pauses as exact zero runs") {
  adapters::StubSynthesizer synth(16000);
  audio::AudioBuffer with_pause =
      synth.synthesize("go " + std::string(kPauseMark250) + " on", 4.0);
  audio::AudioBuffer without = synth.synthesize("go on", 4.0);
  REQUIRE(with_pause.samples.size() ==
          without.samples.size() + 4000);  // 250 ms @ 16 kHz
  // The pause sits between the two syllable slots; every inserted sample
  // is digital zero.
  std::size_t slot = without.samples.size() / 2;
  for (std::size_t i = slot; i < slot + 4000; ++i)
    CHECK(with_pause.samples[i] == 0.0f);
}

TEST_CASE("stub synthesizer rejects bad input") {
  adapters::StubSynthesizer synth(16000);
  CHECK_THROWS_AS(synth.synthesize("x \xE2\x9F\xA8pause ms=\xE2\x9F\xA9", 4.0),
                  ContractError);
  CHECK_THROWS_AS(synth.synthesize("x \xE2\x9F\xA8pause ms=12z", 4.0),
                  ContractError);
  CHECK_THROWS_AS(synth.synthesize("fine text", 0.0), ContractError);
  CHECK_THROWS_AS(synth.synthesize("fine text", -2.0), ContractError);
  CHECK(synth.synthesize("", 4.0).samples.empty());
}

TEST_CASE("punctuation tagger marks clause-final tokens") {
  adapters::PunctuationTagger tagger;
  auto tags = tagger.tag({"now.", "tree", "x;", "\xE0\xA5\xA4", "stop!",
                          "wh?", "mid.dle"});
  REQUIRE(tags.size() == 7);
  CHECK(tags == std::vector<std::string>{"PUNC", "TOK", "PUNC", "PUNC",
                                         "PUNC", "PUNC", "TOK"});
}

TEST_CASE("command translator round-trips through a shell pipeline") {
  adapters::CommandTranslator cat("cat");
  CHECK(cat.translate("hello __DT0__ there") == "hello __DT0__ there");

  adapters::CommandTranslator upper("tr a-z A-Z");
  CHECK(upper.translate("shout this") == "SHOUT THIS");

  adapters::CommandTransliterator rot("tr a-zA-Z n-za-mN-ZA-M");
  CHECK(rot.transliterate("abc") == "nop");
}

TEST_CASE("command adapters surface failures") {
  adapters::CommandTranslator failing("exit 3");
  try {
    failing.translate("anything");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("exit 3") != std::string::npos);
  }

  adapters::CommandTranslator killed("kill -9 $$");
  try {
    killed.translate("anything");
    FAIL("expected Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("signal 9") != std::string::npos);
  }
}

TEST_CASE("command translator survives payloads larger than a pipe buffer") {
  // ~1.2 MB both directions forces interleaved reads and writes; a naive
  // write-all-then-read-all adapter deadlocks here.
  std::string big;
  big.reserve(1200000);
  while (big.size() < 1200000) big += "lorem ipsum dolor sit amet ";
  adapters::CommandTranslator cat("cat");
  CHECK(cat.translate(big) == big);

  // A command that never reads its input must not kill the process with
  // SIGPIPE, and its (empty) output must come back cleanly.
  adapters::CommandTranslator devnull("exec >/dev/null; cat >/dev/null; :");
  CHECK(devnull.translate(big) == "");
  adapters::CommandTranslator ignores("true");
  CHECK(ignores.translate(big) == "");
}

TEST_CASE("command tagger zips one tag per token") {
  adapters::CommandTagger all_tok("sed 's/.*/TOK/'");
  CHECK(all_tok.tag({"a", "b.", "c"}) ==
        std::vector<std::string>{"TOK", "TOK", "TOK"});

  adapters::CommandTagger truncating("head -1");
  CHECK_THROWS_AS(truncating.tag({"a", "b."}), Error);

  adapters::CommandTagger failing("exit 2");
  CHECK_THROWS_AS(failing.tag({"a"}), Error);
}

TEST_CASE("command synthesizer loads whatever audio the command emits") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "isodub_cmd_tts_test";
  fs::create_directories(dir);
  fs::path wav_path = dir / "fixed.wav";

  audio::AudioBuffer tone;
  tone.sample_rate_hz = 16000;
  tone.samples.resize(3200);
  for (std::size_t i = 0; i < tone.samples.size(); ++i)
    tone.samples[i] =
        0.4f * std::sin(2.0f * 3.14159265f * 440.0f *
                        static_cast<float>(i) / 16000.0f);
  audio::save_wav_file(tone, wav_path.string());

  adapters::CommandSynthesizer fixed("cat " + wav_path.string());
  audio::AudioBuffer got = fixed.synthesize("ignored words", 4.0);
  CHECK(got.sample_rate_hz == 16000);
  CHECK(got.samples.size() == 3200);

  adapters::CommandSynthesizer silent("true");
  CHECK_THROWS_AS(silent.synthesize("x", 4.0), Error);

  adapters::CommandSynthesizer garbage("printf 'not a wav'");
  CHECK_THROWS_AS(garbage.synthesize("x", 4.0), FormatError);

  fs::remove_all(dir);
}

TEST_SUITE_END();
