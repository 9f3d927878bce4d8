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

#include <string>
#include <vector>

#include <doctest.h>

#include "isodub/errors.hpp"
#include "isodub/rhythm.hpp"

using namespace isodub;
using rhythm::BreakStrength;
using rhythm::TaggedToken;

TEST_SUITE_BEGIN("chunker");

TEST_CASE("rule files parse inventory, unigrams, and bigrams") {
  rhythm::RuleSet rules = rhythm::parse_rule_set(
      "# tags\n"
      "TOK PUNC CONJ\n"
      "PUNC\tmajor\n"
      "CONJ TOK\tminor\n");
  CHECK(rules.inventory == std::set<std::string>{"TOK", "PUNC", "CONJ"});
  REQUIRE(rules.unigram.size() == 1);
  CHECK(rules.unigram.at("PUNC") == BreakStrength::major);
  REQUIRE(rules.bigram.size() == 1);
  CHECK(rules.bigram.at({"CONJ", "TOK"}) == BreakStrength::minor);
}

TEST_CASE("rule files survive CRLF and comments") {
  rhythm::RuleSet rules =
      rhythm::parse_rule_set("TOK PUNC\r\n# note\r\n\r\nPUNC\tmajor\r\n");
  CHECK(rules.unigram.at("PUNC") == BreakStrength::major);
}

TEST_CASE("rule file errors carry line numbers") {
  SUBCASE("unknown tag in pattern") {
    try {
      rhythm::parse_rule_set("TOK\nZZZ\tminor\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("ZZZ") != std::string::npos);
    }
  }
  SUBCASE("duplicate pattern") {
    CHECK_THROWS_AS(
        rhythm::parse_rule_set("TOK\nTOK\tminor\nTOK\tmajor\n"), ParseError);
  }
  SUBCASE("bad strength") {
    CHECK_THROWS_AS(rhythm::parse_rule_set("TOK\nTOK\tmedium\n"), ParseError);
  }
  SUBCASE("missing tab") {
    CHECK_THROWS_AS(rhythm::parse_rule_set("TOK\nTOK minor\n"), ParseError);
  }
  SUBCASE("three-tag pattern") {
    CHECK_THROWS_AS(rhythm::parse_rule_set("TOK\nTOK TOK TOK\tminor\n"),
                    ParseError);
  }
  SUBCASE("no inventory at all") {
    CHECK_THROWS_AS(rhythm::parse_rule_set("# only comments\n"), ParseError);
  }
}

TEST_CASE("unigram rule breaks after the matching token") {
  rhythm::RuleSet rules = rhythm::parse_rule_set("TOK PUNC\nPUNC\tmajor\n");
  std::vector<TaggedToken> toks{
      {"now.", "PUNC"}, {"then", "TOK"}, {"stop.", "PUNC"}};
  rhythm::ChunkedText chunked = rhythm::chunk_tokens(toks, rules, 12);
  REQUIRE(chunked.breaks.size() == 1);  // no break after the final token
  CHECK(chunked.breaks.at(1) == BreakStrength::major);
  auto chunks = rhythm::chunks_of(chunked);
  REQUIRE(chunks.size() == 2);
  CHECK(chunks[0].size() == 1);
  CHECK(chunks[1].size() == 2);
}

TEST_CASE("bigram rule breaks between the pair") {
  rhythm::RuleSet rules = rhythm::parse_rule_set("A B\nA B\tminor\n");
  std::vector<TaggedToken> toks{{"x", "A"}, {"y", "B"}, {"z", "A"}};
  rhythm::ChunkedText chunked = rhythm::chunk_tokens(toks, rules, 12);
  REQUIRE(chunked.breaks.size() == 1);
  CHECK(chunked.breaks.at(1) == BreakStrength::minor);
}

TEST_CASE("major strength wins when rules coincide") {
  rhythm::RuleSet rules =
      rhythm::parse_rule_set("A B\nA\tminor\nA B\tmajor\n");
  std::vector<TaggedToken> toks{{"x", "A"}, {"y", "B"}};
  rhythm::ChunkedText chunked = rhythm::chunk_tokens(toks, rules, 12);
  CHECK(chunked.breaks.at(1) == BreakStrength::major);

  // And a later minor never downgrades an existing major.
  rhythm::RuleSet rules2 =
      rhythm::parse_rule_set("A B\nA\tmajor\nA B\tminor\n");
  rhythm::ChunkedText chunked2 = rhythm::chunk_tokens(toks, rules2, 12);
  CHECK(chunked2.breaks.at(1) == BreakStrength::major);
}

TEST_CASE("oversize chunks split recursively at midpoints") {
  rhythm::RuleSet rules = rhythm::parse_rule_set("TOK\n");
  std::vector<TaggedToken> toks;
  for (int i = 0; i < 30; ++i)
    toks.push_back({"w" + std::to_string(i), "TOK"});
  rhythm::ChunkedText chunked = rhythm::chunk_tokens(toks, rules, 12);

  auto chunks = rhythm::chunks_of(chunked);
  REQUIRE(chunks.size() == 4);  // 30 -> 15+15 -> 8+7+8+7
  CHECK(chunks[0].size() == 8);
  CHECK(chunks[1].size() == 7);
  CHECK(chunks[2].size() == 8);
  CHECK(chunks[3].size() == 7);
  for (const auto& c : chunks) CHECK(c.size() <= 12);
  for (const auto& [at, strength] : chunked.breaks)
    CHECK(strength == BreakStrength::minor);

  // Splitting must not reorder or drop tokens.
  std::vector<TaggedToken> flat;
  for (const auto& c : chunks) flat.insert(flat.end(), c.begin(), c.end());
  CHECK(flat == toks);
}

TEST_CASE("chunker rejects bad input") {
  rhythm::RuleSet rules = rhythm::parse_rule_set("TOK\n");
  CHECK_THROWS_AS(rhythm::chunk_tokens({}, rules, 12), ContractError);
  CHECK_THROWS_AS(rhythm::chunk_tokens({{"x", "NOPE"}}, rules, 12),
                  ContractError);
  CHECK_THROWS_AS(rhythm::chunk_tokens({{"x", "TOK"}}, rules, 0),
                  ContractError);
}

TEST_CASE("pause marks land at break positions with the right lengths") {
  rhythm::RuleSet rules =
      rhythm::parse_rule_set("TOK PUNC\nPUNC\tmajor\nTOK TOK\tminor\n");
  std::vector<TaggedToken> toks{
      {"a.", "PUNC"}, {"b", "TOK"}, {"c", "TOK"}};
  rhythm::ChunkedText chunked = rhythm::chunk_tokens(toks, rules, 12);
  std::string text = rhythm::breaks_to_pause_marks(chunked, 150, 400);
  CHECK(text ==
        "a. \xE2\x9F\xA8pause ms=400\xE2\x9F\xA9 "
        "b \xE2\x9F\xA8pause ms=150\xE2\x9F\xA9 c");

  rhythm::ChunkedText lone{{{"solo", "TOK"}}, {}};
  CHECK(rhythm::breaks_to_pause_marks(lone, 150, 400) == "solo");
}

TEST_SUITE_END();
