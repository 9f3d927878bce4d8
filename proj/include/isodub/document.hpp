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

namespace isodub::terms {

struct Token {
  std::string surface;     // text with edge punctuation stripped
  std::string normalized;  // lowercased surface (ASCII case fold)
  std::size_t begin = 0;   // byte offsets of surface within the raw text
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct Document {
  std::vector<Token> tokens;
};

// Whitespace tokenization with edge punctuation stripped from each token.
// Byte offsets always point at the stripped surface, so token spans can be
// swapped in place inside the raw text. Pure-punctuation runs are dropped.
Document tokenize(std::string_view text);

std::string to_lower_ascii(std::string_view s);

// Letters only (non-ASCII bytes count as letters, so UTF-8 scripts pass).
bool is_alphabetic(std::string_view s);

}  // namespace isodub::terms
