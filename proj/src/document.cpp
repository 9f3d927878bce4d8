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

#include "isodub/document.hpp"

#include <cctype>

namespace isodub::terms {
namespace {

bool is_space_byte(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Punctuation stripped from token edges; operators stay (code fragments
// must keep their shape for the code detector's spans to line up).
bool is_edge_punct(char c) {
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case '"':
    case '\'':
    case '`':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string to_lower_ascii(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_alphabetic(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (u < 0x80 && !std::isalpha(u)) return false;
  }
  return true;
}

Document tokenize(std::string_view text) {
  Document doc;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space_byte(text[i])) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < text.size() && !is_space_byte(text[i])) ++i;
    std::size_t end = i;
    while (begin < end && is_edge_punct(text[begin])) ++begin;
    while (end > begin && is_edge_punct(text[end - 1])) --end;
    if (begin == end) continue;
    Token tok;
    tok.begin = begin;
    tok.end = end;
    tok.surface = std::string(text.substr(begin, end - begin));
    tok.normalized = to_lower_ascii(tok.surface);
    doc.tokens.push_back(std::move(tok));
  }
  return doc;
}

}  // namespace isodub::terms
