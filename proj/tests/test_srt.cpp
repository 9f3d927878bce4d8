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

#include <random>
#include <string>

#include <doctest.h>

#include "isodub/errors.hpp"
#include "isodub/srt.hpp"
#include "oracles.hpp"

using namespace isodub;

TEST_SUITE_BEGIN("srt");

namespace {

const char kCanonical[] =
    "1\n"
    "00:00:01,000 --> 00:00:02,500\n"
    "First cue\n"
    "\n"
    "2\n"
    "00:00:03,000 --> 00:01:00,250\n"
    "Second cue\n"
    "with two lines\n";

}  // namespace

TEST_CASE("parses the canonical form") {
  srt::SubtitleTrack track = srt::parse_srt(kCanonical);
  REQUIRE(track.cues.size() == 2);
  CHECK(track.cues[0].index == 1);
  CHECK(track.cues[0].start_ms == 1000);
  CHECK(track.cues[0].end_ms == 2500);
  CHECK(track.cues[0].lines == std::vector<std::string>{"First cue"});
  CHECK(track.cues[1].end_ms == 60250);
  CHECK(track.cues[1].lines ==
        std::vector<std::string>{"Second cue", "with two lines"});
}

TEST_CASE("serialization round-trips the canonical form byte for byte") {
  CHECK(srt::serialize_srt(srt::parse_srt(kCanonical)) == kCanonical);
}

TEST_CASE("accepts CRLF, BOM, and dot milliseconds; output is canonical") {
  std::string variant =
      "\xEF\xBB\xBF"
      "1\r\n"
      "00:00:01.000 --> 00:00:02.500\r\n"
      "First cue\r\n"
      "\r\n"
      "2\r\n"
      "00:00:03,000 --> 00:01:00.250\r\n"
      "Second cue\r\n"
      "with two lines\r\n";
  CHECK(srt::parse_srt(variant) == srt::parse_srt(kCanonical));
  CHECK(srt::serialize_srt(srt::parse_srt(variant)) == kCanonical);
}

TEST_CASE("tolerates a missing final newline and extra blank lines") {
  CHECK(srt::parse_srt("5\n01:02:03,004 --> 01:02:04,000\nhello") ==
        srt::parse_srt("5\n01:02:03,004 --> 01:02:04,000\nhello\n\n\n"));
}

TEST_CASE("timestamp parsing and formatting") {
  CHECK(srt::parse_timestamp("01:02:03,004") ==
        ((1 * 60 + 2) * 60 + 3) * 1000 + 4);
  CHECK(srt::parse_timestamp("00:00:00,000") == 0);
  CHECK(srt::format_timestamp(3723004) == "01:02:03,004");
  // hours can exceed two digits
  CHECK(srt::parse_timestamp("100:00:00,000") == 100LL * 3600 * 1000);

  CHECK_THROWS_AS(srt::parse_timestamp("00:60:00,000"), ParseError);
  CHECK_THROWS_AS(srt::parse_timestamp("00:00:61,000"), ParseError);
  CHECK_THROWS_AS(srt::parse_timestamp("00:00:00,00"), ParseError);
  CHECK_THROWS_AS(srt::parse_timestamp("00:00:00"), ParseError);
  CHECK_THROWS_AS(srt::parse_timestamp("junk"), ParseError);
}

TEST_CASE("parse errors carry 1-based line numbers") {
  try {
    srt::parse_srt("1\nnot a timestamp line\ntext\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(srt::parse_srt(""), ParseError);
  CHECK_THROWS_AS(srt::parse_srt("\n\n\n"), ParseError);
  CHECK_THROWS_AS(srt::parse_srt("x\n00:00:00,000 --> 00:00:01,000\nhi\n"),
                  ParseError);
}

TEST_CASE("validation flags every rule") {
  auto make = [](int index, TimeMs start, TimeMs end, std::string text) {
    srt::SubtitleCue cue;
    cue.index = index;
    cue.start_ms = start;
    cue.end_ms = end;
    cue.lines = {std::move(text)};
    return cue;
  };

  SUBCASE("bad_index") {
    srt::SubtitleTrack t{{make(0, 0, 1000, "x")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::bad_index);
  }
  SUBCASE("negative_duration") {
    srt::SubtitleTrack t{{make(1, 1000, 1000, "x")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::negative_duration);
  }
  SUBCASE("empty_text") {
    srt::SubtitleTrack t{{make(1, 0, 1000, "  ")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::empty_text);
  }
  SUBCASE("out_of_order") {
    srt::SubtitleTrack t{{make(1, 5000, 6000, "x"), make(2, 1000, 2000, "y")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::out_of_order);
    CHECK(v[0].cue_index == 1);
    CHECK(v[0].other_index == 2);
  }
  SUBCASE("overlap") {
    srt::SubtitleTrack t{{make(1, 0, 3000, "x"), make(2, 2000, 4000, "y")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::overlap);
  }
  SUBCASE("non_increasing_index") {
    srt::SubtitleTrack t{{make(2, 0, 1000, "x"), make(2, 2000, 3000, "y")}};
    auto v = srt::validate_track(t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == srt::ViolationRule::non_increasing_index);
  }
  SUBCASE("valid track has no violations") {
    srt::SubtitleTrack t{{make(1, 0, 1000, "x"), make(2, 1000, 2000, "y")}};
    CHECK(srt::validate_track(t).empty());
  }
}

TEST_CASE("serializing an invalid track throws ValidationError") {
  srt::SubtitleTrack t;
  srt::SubtitleCue cue;
  cue.index = 1;
  cue.start_ms = 2000;
  cue.end_ms = 1000;
  cue.lines = {"x"};
  t.cues.push_back(cue);
  CHECK_THROWS_AS(srt::serialize_srt(t), ValidationError);
}

TEST_CASE("round-trip property on random valid tracks") {
  std::mt19937 rng(20260819);
  for (int i = 0; i < 200; ++i) {
    srt::SubtitleTrack track = oracles::random_track(&rng);
    REQUIRE(srt::validate_track(track).empty());
    std::string text = srt::serialize_srt(track);
    CHECK(srt::parse_srt(text) == track);
    CHECK(srt::serialize_srt(srt::parse_srt(text)) == text);
  }
}

TEST_SUITE_END();
