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
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "isodub/document.hpp"
#include "isodub/errors.hpp"
#include "isodub/keywords.hpp"
#include "oracles.hpp"

using namespace isodub;

TEST_SUITE_BEGIN("keywords");

namespace {

terms::Document doc_of(const std::string& text) {
  return terms::tokenize(text);
}

// Map ranked candidates to (normalized term -> score).
std::map<std::string, double> scores_by_term(
    const terms::Document& doc, const std::vector<terms::TermCandidate>& rk) {
  std::map<std::string, double> m;
  for (const auto& c : rk) m[doc.tokens[c.begin_token].normalized] = c.score;
  return m;
}

}  // namespace

TEST_CASE("graph ranking: frozen analytic case a b c b, window 2") {
  // Edges a-b and b-c. Fixed point: S(b) = 0.405/0.2775, S(a) = S(c) =
  // 0.15 + 0.425 * S(b) / 2.
  terms::Document doc = doc_of("alpha beta gamma beta");
  auto ranked = terms::textrank_keywords(doc, {});
  REQUIRE(ranked.size() == 3);
  auto s = scores_by_term(doc, ranked);
  CHECK(s["beta"] == doctest::Approx(1.4594594594).epsilon(1e-6));
  CHECK(s["alpha"] == doctest::Approx(0.7702702702).epsilon(1e-6));
  CHECK(s["gamma"] == doctest::Approx(0.7702702702).epsilon(1e-6));
  // beta ranks first; alpha beats gamma on first occurrence.
  CHECK(doc.tokens[ranked[0].begin_token].normalized == "beta");
  CHECK(doc.tokens[ranked[1].begin_token].normalized == "alpha");
  CHECK(doc.tokens[ranked[2].begin_token].normalized == "gamma");
}

TEST_CASE("graph ranking: an isolated node scores exactly 1 - damping") {
  terms::Document doc = doc_of("singleton");
  auto ranked = terms::textrank_keywords(doc, {});
  REQUIRE(ranked.size() == 1);
  // (1 - d) + d*0 with d = 0.85; allow one ulp of arithmetic noise.
  CHECK(ranked[0].score == doctest::Approx(0.15).epsilon(1e-15));
}

TEST_CASE("stopwords and non-alphabetic tokens are not candidates") {
  std::set<std::string> stop{"the", "and"};
  terms::Document doc = doc_of("the quick 42 fox and x9 jumps");
  auto ranked = terms::textrank_keywords(doc, stop);
  std::set<std::string> got;
  for (const auto& c : ranked) got.insert(doc.tokens[c.begin_token].normalized);
  CHECK(got == std::set<std::string>{"quick", "fox", "jumps"});
}

TEST_CASE("window size widens co-occurrence") {
  terms::Document doc = doc_of("aa bb cc");
  terms::TextRankParams p;
  p.window = 3;  // aa-cc becomes an edge too: complete graph, all equal
  auto ranked = terms::textrank_keywords(doc, {}, p);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].score == doctest::Approx(ranked[1].score).epsilon(1e-9));
  CHECK(ranked[1].score == doctest::Approx(ranked[2].score).epsilon(1e-9));
  // And order falls back to first occurrence.
  CHECK(doc.tokens[ranked[0].begin_token].normalized == "aa");
  CHECK(doc.tokens[ranked[2].begin_token].normalized == "cc");
}

TEST_CASE("graph ranking matches dense power iteration on random sequences") {
  std::mt19937 rng(23);
  const char* vocab[12] = {"ka", "ne", "to", "ri", "mu", "sa",
                           "ha", "yo", "ku", "wa", "mi", "zo"};
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> len(1, 40);
    std::uniform_int_distribution<int> vsize(1, 12);
    std::uniform_int_distribution<int> win(2, 4);
    int vocab_n = vsize(rng);
    int n = len(rng);
    int window = win(rng);

    std::string text;
    std::uniform_int_distribution<int> pick(0, vocab_n - 1);
    for (int i = 0; i < n; ++i) {
      if (i) text += ' ';
      text += vocab[pick(rng)];
    }
    terms::Document doc = doc_of(text);

    // Rebuild the candidate sequence and node ids the same way the library
    // defines them: candidates in first-occurrence order.
    std::vector<std::size_t> seq;
    std::map<std::string, std::size_t> id;
    std::vector<std::string> names;
    for (const auto& tok : doc.tokens) {
      auto [it, fresh] = id.emplace(tok.normalized, names.size());
      if (fresh) names.push_back(tok.normalized);
      seq.push_back(it->second);
    }
    auto adj = oracles::cooccurrence_matrix(seq, names.size(), window);
    auto want = oracles::graph_rank_power(adj);

    terms::TextRankParams p;
    p.window = window;
    auto ranked = terms::textrank_keywords(doc, {}, p);
    auto got = scores_by_term(doc, ranked);
    REQUIRE(got.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i)
      CHECK(std::fabs(got[names[i]] - want[i]) <= 1e-6);
  }
}

TEST_CASE("graph ranking validates its parameters") {
  terms::Document doc = doc_of("a b");
  terms::TextRankParams p;
  p.window = 1;
  CHECK_THROWS_AS(terms::textrank_keywords(doc, {}, p), ContractError);
  p = {};
  p.damping = 1.0;
  CHECK_THROWS_AS(terms::textrank_keywords(doc, {}, p), ContractError);
  p = {};
  p.max_iter = 0;
  CHECK_THROWS_AS(terms::textrank_keywords(doc, {}, p), ContractError);
}

TEST_CASE("tf-idf: frozen value 0.3 * ln 2") {
  // Term appears 3 times in a 10-token document, in 1 of 2 documents.
  std::vector<terms::Document> corpus{
      doc_of("term term term pad1 pad2 pad3 pad4 pad5 pad6 pad7"),
      doc_of("other words entirely")};
  auto scores = terms::tfidf_scores(corpus, 0);
  CHECK(std::fabs(scores["term"] - 0.20794415416798357) <= 1e-9);
}

TEST_CASE("tf-idf: a term present in every document scores zero") {
  std::vector<terms::Document> corpus{doc_of("shared one"),
                                      doc_of("shared two")};
  auto scores = terms::tfidf_scores(corpus, 0);
  CHECK(scores["shared"] == 0.0);
  CHECK(scores["one"] > 0.0);
}

TEST_CASE("tf-idf matches the naive oracle on random corpora") {
  std::mt19937 rng(31);
  const char* vocab[8] = {"red", "green", "blue", "cyan",
                          "teal", "plum", "gold", "gray"};
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> docs_n(2, 5), len(1, 12), pick(0, 7);
    int nd = docs_n(rng);
    std::vector<std::vector<std::string>> plain(nd);
    std::vector<terms::Document> corpus;
    for (int d = 0; d < nd; ++d) {
      std::string text;
      int n = len(rng);
      for (int i = 0; i < n; ++i) {
        std::string w = vocab[pick(rng)];
        plain[d].push_back(w);
        if (i) text += ' ';
        text += w;
      }
      corpus.push_back(doc_of(text));
    }
    for (int d = 0; d < nd; ++d) {
      auto scores = terms::tfidf_scores(corpus, d);
      for (const char* w : vocab) {
        double want = oracles::tfidf_oracle(plain, d, w);
        double got = scores.count(w) ? scores.at(w) : 0.0;
        CHECK(std::fabs(got - want) <= 1e-12);
      }
    }
  }
}

TEST_CASE("rank_tfidf orders by score then first occurrence") {
  terms::Document doc = doc_of("bb aa bb cc");
  std::map<std::string, double> scores{{"aa", 0.5}, {"bb", 0.5}, {"cc", 0.9}};
  auto ranked = terms::rank_tfidf(doc, scores);
  REQUIRE(ranked.size() == 3);
  CHECK(doc.tokens[ranked[0].begin_token].normalized == "cc");
  CHECK(doc.tokens[ranked[1].begin_token].normalized == "bb");  // earlier
  CHECK(doc.tokens[ranked[2].begin_token].normalized == "aa");
  CHECK(ranked[1].begin_token == 0);  // first occurrence of bb
}

TEST_SUITE_END();
