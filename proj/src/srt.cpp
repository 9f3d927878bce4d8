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

#include "isodub/srt.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "isodub/errors.hpp"

namespace isodub::srt {
namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  // A trailing newline produces one empty final entry; keep it, blank lines
  // are cue separators anyway.
  return lines;
}

bool is_blank(std::string_view line) {
  for (char c : line) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_cue_index(std::string_view line, std::size_t line_no) {
  std::string_view t = trim(line);
  if (t.empty()) throw ParseError("expected cue index", line_no);
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("expected numeric cue index, got \"" + std::string(t) + "\"",
                     line_no);
  return value;
}

// Consumes exactly `digits` decimal digits from s at pos.
long long take_digits(std::string_view s, std::size_t& pos, int digits,
                      std::size_t line_no) {
  if (pos + digits > s.size()) throw ParseError("malformed timestamp", line_no);
  long long v = 0;
  for (int i = 0; i < digits; ++i) {
    char c = s[pos + i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed timestamp", line_no);
    v = v * 10 + (c - '0');
  }
  pos += digits;
  return v;
}

}  // namespace

TimeMs parse_timestamp(std::string_view text, std::size_t line) {
  std::string_view t = trim(text);
  // Hours: one or more digits.
  std::size_t pos = 0;
  while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
    ++pos;
  if (pos == 0) throw ParseError("malformed timestamp", line);
  long long hours = 0;
  std::from_chars(t.data(), t.data() + pos, hours);
  if (pos >= t.size() || t[pos] != ':')
    throw ParseError("malformed timestamp", line);
  ++pos;
  long long minutes = take_digits(t, pos, 2, line);
  if (pos >= t.size() || t[pos] != ':')
    throw ParseError("malformed timestamp", line);
  ++pos;
  long long seconds = take_digits(t, pos, 2, line);
  if (pos >= t.size() || (t[pos] != ',' && t[pos] != '.'))
    throw ParseError("malformed timestamp", line);
  ++pos;
  long long millis = take_digits(t, pos, 3, line);
  if (pos != t.size()) throw ParseError("malformed timestamp", line);
  if (minutes > 59 || seconds > 59)
    throw ParseError("timestamp field out of range", line);
  return ((hours * 60 + minutes) * 60 + seconds) * 1000 + millis;
}

std::string format_timestamp(TimeMs ms) {
  long long h = ms / 3600000;
  long long rem = ms % 3600000;
  long long m = rem / 60000;
  rem %= 60000;
  long long s = rem / 1000;
  long long milli = rem % 1000;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld,%03lld", h, m, s, milli);
  return buf;
}

SubtitleTrack parse_srt(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF")
    text.remove_prefix(3);
  std::vector<std::string> lines = split_lines(text);

  SubtitleTrack track;
  std::size_t i = 0;
  while (true) {
    while (i < lines.size() && is_blank(lines[i])) ++i;
    if (i >= lines.size()) break;

    SubtitleCue cue;
    cue.index = parse_cue_index(lines[i], i + 1);
    ++i;
    if (i >= lines.size())
      throw ParseError("missing timing line after cue index", i);
    const std::string& timing = lines[i];
    std::size_t arrow = timing.find("-->");
    if (arrow == std::string::npos)
      throw ParseError("malformed timing line (no \"-->\")", i + 1);
    cue.start_ms = parse_timestamp(std::string_view(timing).substr(0, arrow), i + 1);
    cue.end_ms = parse_timestamp(std::string_view(timing).substr(arrow + 3), i + 1);
    ++i;
    while (i < lines.size() && !is_blank(lines[i])) {
      cue.lines.push_back(lines[i]);
      ++i;
    }
    track.cues.push_back(std::move(cue));
  }
  if (track.cues.empty()) throw ParseError("no subtitle cues found");
  return track;
}

std::vector<Violation> validate_track(const SubtitleTrack& track) {
  std::vector<Violation> out;
  auto add = [&out](ViolationRule rule, int cue, int other, std::string msg) {
    out.push_back({rule, cue, other, std::move(msg)});
  };
  for (std::size_t i = 0; i < track.cues.size(); ++i) {
    const SubtitleCue& c = track.cues[i];
    const std::string tag = "cue " + std::to_string(c.index);
    if (c.index < 1)
      add(ViolationRule::bad_index, c.index, 0, tag + ": index must be positive");
    if (c.end_ms <= c.start_ms)
      add(ViolationRule::negative_duration, c.index, 0,
          tag + ": negative duration (end does not pass start)");
    bool any_content = false;
    bool any_blank_line = c.lines.empty();
    for (const std::string& line : c.lines) {
      if (trim(line).empty())
        any_blank_line = true;
      else
        any_content = true;
    }
    if (!any_content || any_blank_line)
      add(ViolationRule::empty_text, c.index, 0,
          tag + ": text empty or contains a blank line");
    if (i + 1 < track.cues.size()) {
      const SubtitleCue& n = track.cues[i + 1];
      if (n.start_ms < c.start_ms)
        add(ViolationRule::out_of_order, c.index, n.index,
            "cues " + std::to_string(c.index) + "," + std::to_string(n.index) +
                ": out of start order");
      else if (c.end_ms > n.start_ms)
        add(ViolationRule::overlap, c.index, n.index,
            "cues " + std::to_string(c.index) + "," + std::to_string(n.index) +
                ": overlap");
      if (n.index <= c.index)
        add(ViolationRule::non_increasing_index, c.index, n.index,
            "cues " + std::to_string(c.index) + "," + std::to_string(n.index) +
                ": indices not strictly increasing");
    }
  }
  return out;
}

std::string serialize_srt(const SubtitleTrack& track) {
  std::vector<Violation> violations = validate_track(track);
  if (!violations.empty())
    throw ValidationError("track fails validation (" +
                          std::to_string(violations.size()) +
                          " violation(s)); first: " + violations.front().message);
  std::string out;
  for (std::size_t i = 0; i < track.cues.size(); ++i) {
    const SubtitleCue& c = track.cues[i];
    if (i) out += '\n';
    out += std::to_string(c.index);
    out += '\n';
    out += format_timestamp(c.start_ms);
    out += " --> ";
    out += format_timestamp(c.end_ms);
    out += '\n';
    for (const std::string& line : c.lines) {
      out += line;
      out += '\n';
    }
  }
  return out;
}

}  // namespace isodub::srt
