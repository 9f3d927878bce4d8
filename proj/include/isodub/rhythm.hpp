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

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isodub/types.hpp"

namespace isodub::rhythm {

struct TaggedToken {
  std::string surface;
  std::string tag;

  bool operator==(const TaggedToken&) const = default;
};

enum class BreakStrength { minor, major };

// Morpheme-tag break rules. A unigram pattern breaks after every token with
// that tag; a bigram pattern breaks between a matching pair of adjacent
// tokens. Major beats minor when both fire on a boundary.
struct RuleSet {
  std::set<std::string> inventory;
  std::map<std::string, BreakStrength> unigram;
  std::map<std::pair<std::string, std::string>, BreakStrength> bigram;
};

// Rule file: a header line listing the tag inventory (whitespace-separated),
// then one rule per line as "tag_pattern<TAB>strength" where tag_pattern is
// a tag or a space-separated tag bigram and strength is minor|major.
// '#' comments and blank lines are skipped. Unknown tags in patterns and
// duplicate patterns are ParseErrors.
RuleSet parse_rule_set(std::string_view text);
RuleSet load_rule_file(const std::string& path);

// Tokens plus break strengths at inter-token boundaries. Boundary b sits
// after token b-1 (1 <= b < tokens.size()); chunks are the maximal runs
// between breaks.
struct ChunkedText {
  std::vector<TaggedToken> tokens;
  std::map<std::size_t, BreakStrength> breaks;
};

// Applies every rule, then splits any chunk longer than
// max_tokens_per_chunk at its midpoint with a minor break, recursively, so
// every chunk ends up within the cap. Chunks concatenate to the input
// exactly. Throws ContractError on empty input or a tag outside the
// inventory.
ChunkedText chunk_tokens(const std::vector<TaggedToken>& tokens,
                         const RuleSet& rules,
                         std::size_t max_tokens_per_chunk = 12);

// Renders tokens separated by single spaces with a pause annotation token
// at every break, e.g.:  "ghar ja ⟨pause ms=400⟩ raha hoon".
// The annotation syntax "⟨pause ms=N⟩" is the contract with the synthesis
// adapter.
std::string breaks_to_pause_marks(const ChunkedText& chunked,
                                  TimeMs minor_pause_ms = 150,
                                  TimeMs major_pause_ms = 400);

// Chunks as token runs (test/report helper).
std::vector<std::vector<TaggedToken>> chunks_of(const ChunkedText& chunked);

}  // namespace isodub::rhythm
