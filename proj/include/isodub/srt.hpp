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

#include <string>
#include <string_view>
#include <vector>

#include "isodub/types.hpp"

namespace isodub::srt {

struct SubtitleCue {
  int index = 0;
  TimeMs start_ms = 0;
  TimeMs end_ms = 0;
  std::vector<std::string> lines;  // verbatim text lines, no trailing newline

  bool operator==(const SubtitleCue&) const = default;
};

struct SubtitleTrack {
  std::vector<SubtitleCue> cues;

  bool operator==(const SubtitleTrack&) const = default;
};

enum class ViolationRule {
  bad_index,             // cue index < 1
  negative_duration,     // end_ms <= start_ms
  empty_text,            // no lines, or a line that is blank after trimming
  out_of_order,          // next cue starts before this one
  overlap,               // this cue's end passes the next cue's start
  non_increasing_index,  // next cue's index <= this cue's index
};

struct Violation {
  ViolationRule rule;
  int cue_index;       // index field of the offending cue
  int other_index;     // second cue for pairwise rules, 0 otherwise
  std::string message;
};

// Parses SRT text. Accepts LF or CRLF line endings, an optional UTF-8 BOM,
// and either "," or "." before the milliseconds. Cue text runs to the next
// blank line. Throws ParseError (with a 1-based line number) on malformed
// index or timestamp lines, and on input containing no cues at all.
SubtitleTrack parse_srt(std::string_view text);

// Serializes to canonical form: LF endings, "HH:MM:SS,mmm --> HH:MM:SS,mmm",
// exactly one blank line between cues, single trailing newline. Throws
// ValidationError when validate_track() reports anything; for every track
// that validates cleanly, parse_srt(serialize_srt(t)) == t.
std::string serialize_srt(const SubtitleTrack& track);

// Pure check of cue and track invariants. Never throws; reports every broken
// rule with the cue index (and the second cue index for pairwise rules).
std::vector<Violation> validate_track(const SubtitleTrack& track);

// "HH:MM:SS,mmm" with zero-padded fields; hours widen past 99 as needed.
std::string format_timestamp(TimeMs ms);

// Inverse of format_timestamp; also accepts "." before the milliseconds.
// `line` is used in error messages only.
TimeMs parse_timestamp(std::string_view text, std::size_t line = 0);

}  // namespace isodub::srt
