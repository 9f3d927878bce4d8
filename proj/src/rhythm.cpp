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

#include "isodub/rhythm.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "isodub/errors.hpp"

namespace isodub::rhythm {
namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    std::size_t b = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.emplace_back(s.substr(b, i - b));
  }
  return out;
}

BreakStrength parse_strength(std::string_view s, std::size_t line) {
  if (s == "minor") return BreakStrength::minor;
  if (s == "major") return BreakStrength::major;
  throw ParseError("break strength must be minor or major, got \"" +
                       std::string(s) + "\"",
                   line);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

RuleSet parse_rule_set(std::string_view text) {
  RuleSet rules;
  bool have_inventory = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;

    if (!have_inventory) {
      // Header line: the tag inventory.
      for (const std::string& tag : split_ws(t)) rules.inventory.insert(tag);
      if (rules.inventory.empty())
        throw ParseError("empty tag inventory", line_no);
      have_inventory = true;
      continue;
    }

    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw ParseError("rule line needs tag_pattern<TAB>strength", line_no);
    std::vector<std::string> pattern = split_ws(line.substr(0, tab));
    BreakStrength strength = parse_strength(trim(line.substr(tab + 1)), line_no);
    if (pattern.empty() || pattern.size() > 2)
      throw ParseError("tag pattern must be one tag or a tag bigram", line_no);
    for (const std::string& tag : pattern)
      if (!rules.inventory.count(tag))
        throw ParseError("pattern tag \"" + tag + "\" not in inventory",
                         line_no);
    if (pattern.size() == 1) {
      if (!rules.unigram.emplace(pattern[0], strength).second)
        throw ParseError("duplicate pattern \"" + pattern[0] + "\"", line_no);
    } else {
      if (!rules.bigram.emplace(std::make_pair(pattern[0], pattern[1]), strength)
               .second)
        throw ParseError(
            "duplicate pattern \"" + pattern[0] + " " + pattern[1] + "\"",
            line_no);
    }
  }
  if (!have_inventory) throw ParseError("rule file has no inventory line");
  return rules;
}

RuleSet load_rule_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open rule file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_rule_set(ss.str());
}

ChunkedText chunk_tokens(const std::vector<TaggedToken>& tokens,
                         const RuleSet& rules,
                         std::size_t max_tokens_per_chunk) {
  if (tokens.empty()) throw ContractError("chunk_tokens: no tokens");
  if (max_tokens_per_chunk < 1)
    throw ContractError("chunk_tokens: max_tokens_per_chunk must be >= 1");
  for (const TaggedToken& t : tokens)
    if (!rules.inventory.count(t.tag))
      throw ContractError("chunk_tokens: tag \"" + t.tag +
                          "\" not in rule inventory");

  ChunkedText out;
  out.tokens = tokens;
  auto strengthen = [&out](std::size_t boundary, BreakStrength s) {
    auto [it, inserted] = out.breaks.emplace(boundary, s);
    if (!inserted && s == BreakStrength::major) it->second = s;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto uni = rules.unigram.find(tokens[i].tag);
    if (uni != rules.unigram.end() && i + 1 < tokens.size())
      strengthen(i + 1, uni->second);
    if (i + 1 < tokens.size()) {
      auto bi = rules.bigram.find({tokens[i].tag, tokens[i + 1].tag});
      if (bi != rules.bigram.end()) strengthen(i + 1, bi->second);
    }
  }

  // Recursive midpoint split of oversize chunks; the forced breaks are
  // minor.
  std::vector<std::pair<std::size_t, std::size_t>> work;  // [begin, end)
  {
    std::size_t begin = 0;
    for (const auto& [b, _] : out.breaks) {
      work.emplace_back(begin, b);
      begin = b;
    }
    work.emplace_back(begin, tokens.size());
  }
  while (!work.empty()) {
    auto [b, e] = work.back();
    work.pop_back();
    if (e - b <= max_tokens_per_chunk) continue;
    std::size_t mid = b + (e - b + 1) / 2;
    strengthen(mid, BreakStrength::minor);
    work.emplace_back(b, mid);
    work.emplace_back(mid, e);
  }
  return out;
}

std::string breaks_to_pause_marks(const ChunkedText& chunked,
                                  TimeMs minor_pause_ms,
                                  TimeMs major_pause_ms) {
  std::string out;
  for (std::size_t i = 0; i < chunked.tokens.size(); ++i) {
    if (i) {
      auto it = chunked.breaks.find(i);
      if (it != chunked.breaks.end()) {
        TimeMs ms = it->second == BreakStrength::major ? major_pause_ms
                                                       : minor_pause_ms;
        out += " ⟨pause ms=" + std::to_string(ms) + "⟩";
      }
      out += ' ';
    }
    out += chunked.tokens[i].surface;
  }
  return out;
}

std::vector<std::vector<TaggedToken>> chunks_of(const ChunkedText& chunked) {
  std::vector<std::vector<TaggedToken>> out;
  std::size_t begin = 0;
  auto flush = [&](std::size_t end) {
    if (end > begin)
      out.emplace_back(chunked.tokens.begin() + begin,
                       chunked.tokens.begin() + end);
    begin = end;
  };
  for (const auto& [b, _] : chunked.breaks) flush(b);
  flush(chunked.tokens.size());
  return out;
}

}  // namespace isodub::rhythm
