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
#include <vector>

#include "isodub/document.hpp"

namespace isodub::terms {

enum class Method { textrank, tfidf, lexicon, code };

// Half-open token range [begin_token, end_token) in a Document.
struct TermCandidate {
  std::size_t begin_token = 0;
  std::size_t end_token = 0;
  double score = 0.0;
  Method method = Method::textrank;
};

struct TextRankParams {
  int window = 2;          // co-occurrence distance over candidate tokens
  double damping = 0.85;
  double eps = 1e-6;       // max score delta at convergence
  int max_iter = 100;
};

// Graph keyword ranking over candidate tokens (alphabetic, not stopwords).
// Builds a simple undirected co-occurrence graph; each node's score evolves
// as S(v) = (1-d) + d * sum(S(u)/deg(u)) over neighbors u (synchronous
// updates until the largest delta drops below eps). An isolated node scores
// exactly 1-d. One candidate per distinct term, spanning its first
// occurrence; ranked by score descending, ties by first occurrence.
std::vector<TermCandidate> textrank_keywords(const Document& doc,
                                             const std::set<std::string>& stopwords,
                                             const TextRankParams& params = {});

// Raw term frequency times ln(N/df), no smoothing: terms of corpus
// [doc_index] only, keyed by normalized form. A term in every document
// scores 0. Throws ContractError when doc_index is out of range.
std::map<std::string, double> tfidf_scores(const std::vector<Document>& corpus,
                                           std::size_t doc_index);

// Ranks a tfidf score map the same way textrank_keywords ranks its nodes:
// one candidate per distinct term at its first occurrence, score
// descending, ties by first occurrence.
std::vector<TermCandidate> rank_tfidf(const Document& doc,
                                      const std::map<std::string, double>& scores);

}  // namespace isodub::terms
