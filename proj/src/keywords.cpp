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

#include "isodub/keywords.hpp"

#include <algorithm>
#include <cmath>

#include "isodub/errors.hpp"

namespace isodub::terms {

std::vector<TermCandidate> textrank_keywords(const Document& doc,
                                             const std::set<std::string>& stopwords,
                                             const TextRankParams& params) {
  if (params.window < 2 || params.damping <= 0.0 || params.damping >= 1.0 ||
      params.eps <= 0.0 || params.max_iter < 1)
    throw ContractError("textrank_keywords: invalid parameters");

  // Candidate sequence and node ids in first-occurrence order.
  struct Node {
    std::string term;
    std::size_t first_token;
  };
  std::vector<Node> nodes;
  std::map<std::string, std::size_t> id_of;
  std::vector<std::size_t> sequence;  // node ids of candidate tokens in order
  for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
    const Token& tok = doc.tokens[t];
    if (!is_alphabetic(tok.normalized) || stopwords.count(tok.normalized))
      continue;
    auto it = id_of.find(tok.normalized);
    std::size_t id;
    if (it == id_of.end()) {
      id = nodes.size();
      id_of.emplace(tok.normalized, id);
      nodes.push_back({tok.normalized, t});
    } else {
      id = it->second;
    }
    sequence.push_back(id);
  }
  if (nodes.empty()) return {};

  // Simple undirected graph: tokens within `window` of each other in the
  // candidate sequence co-occur; duplicate edges and self-loops are dropped.
  std::vector<std::set<std::size_t>> adj(nodes.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    for (int k = 1; k < params.window && i + k < sequence.size(); ++k) {
      std::size_t a = sequence[i];
      std::size_t b = sequence[i + k];
      if (a == b) continue;
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }

  std::vector<double> score(nodes.size(), 1.0);
  std::vector<double> next(nodes.size());
  for (int iter = 0; iter < params.max_iter; ++iter) {
    double delta = 0.0;
    for (std::size_t v = 0; v < nodes.size(); ++v) {
      double acc = 0.0;
      for (std::size_t u : adj[v])
        acc += score[u] / static_cast<double>(adj[u].size());
      next[v] = (1.0 - params.damping) + params.damping * acc;
      delta = std::max(delta, std::fabs(next[v] - score[v]));
    }
    score.swap(next);
    if (delta < params.eps) break;
  }

  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return nodes[a].first_token < nodes[b].first_token;
  });

  std::vector<TermCandidate> out;
  out.reserve(order.size());
  for (std::size_t id : order)
    out.push_back({nodes[id].first_token, nodes[id].first_token + 1, score[id],
                   Method::textrank});
  return out;
}

std::map<std::string, double> tfidf_scores(const std::vector<Document>& corpus,
                                           std::size_t doc_index) {
  if (doc_index >= corpus.size())
    throw ContractError("tfidf_scores: doc_index out of range");
  const Document& doc = corpus[doc_index];
  if (doc.tokens.empty()) return {};

  std::map<std::string, std::size_t> counts;
  for (const Token& t : doc.tokens)
    if (!t.normalized.empty()) ++counts[t.normalized];

  // Document frequency over the whole corpus (set semantics per document).
  std::map<std::string, std::size_t> df;
  for (const Document& d : corpus) {
    std::set<std::string> seen;
    for (const Token& t : d.tokens)
      if (!t.normalized.empty()) seen.insert(t.normalized);
    for (const std::string& s : seen)
      if (counts.count(s)) ++df[s];
  }

  const double total = static_cast<double>(doc.tokens.size());
  const double n_docs = static_cast<double>(corpus.size());
  std::map<std::string, double> out;
  for (const auto& [term, count] : counts) {
    double tf = static_cast<double>(count) / total;
    out[term] = tf * std::log(n_docs / static_cast<double>(df[term]));
  }
  return out;
}

std::vector<TermCandidate> rank_tfidf(const Document& doc,
                                      const std::map<std::string, double>& scores) {
  struct Entry {
    std::size_t first_token;
    double score;
  };
  std::map<std::string, Entry> first;
  for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
    const std::string& s = doc.tokens[t].normalized;
    auto it = scores.find(s);
    if (it == scores.end()) continue;
    if (!first.count(s)) first.emplace(s, Entry{t, it->second});
  }
  std::vector<Entry> entries;
  entries.reserve(first.size());
  for (const auto& [_, e] : first) entries.push_back(e);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.first_token < b.first_token;
  });
  std::vector<TermCandidate> out;
  out.reserve(entries.size());
  for (const Entry& e : entries)
    out.push_back({e.first_token, e.first_token + 1, e.score, Method::tfidf});
  return out;
}

}  // namespace isodub::terms
