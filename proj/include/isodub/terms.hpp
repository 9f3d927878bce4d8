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

#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "isodub/document.hpp"
#include "isodub/keywords.hpp"

namespace isodub::terms {

enum class TermAction { translate, transliterate, keep };

const char* action_name(TermAction a);

struct LexiconEntry {
  std::string domain;
  TermAction action = TermAction::transliterate;
};

// Keys are normalized phrases ("binary search tree"); matching is greedy
// longest-match left to right over normalized tokens.
struct TermLexicon {
  std::map<std::string, LexiconEntry> entries;
  std::size_t max_phrase_tokens = 0;
};

// One entry per line: "term<TAB>domain<TAB>action", action one of
// translate / transliterate / keep. '#' comments and blank lines skipped.
TermLexicon load_lexicon(std::string_view text);
TermLexicon load_lexicon_file(const std::string& path);

// One token per line, '#' comments and blank lines skipped.
std::set<std::string> load_stopwords(std::string_view text);
std::set<std::string> load_stopwords_file(const std::string& path);

// Greedy longest-match occurrences; consumed tokens are not re-matched.
// Candidate score = matched token count.
std::vector<TermCandidate> lexicon_match(const Document& doc,
                                         const TermLexicon& lexicon);

// Half-open byte range in the raw text.
struct CharRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const CharRange&) const = default;
};

struct CodeSpanParams {
  // A window is any run of up to this many whitespace tokens.
  int max_window_tokens = 5;
  // A window is "hot" when it holds at least min_ops operator/bracket
  // characters and their density over the window's characters exceeds
  // min_density. Hyphen/comma/period stay out of the operator set so
  // hyphenated prose never trips the detector.
  int min_ops = 3;
  double min_density = 0.25;
  std::string op_chars = "(){}[]<>=+*/%;:&|^!~";
};

// Flags likely code fragments: the union of hot windows (each truncated at
// its last operator-bearing token, so trailing prose is never absorbed),
// token-aligned, extended to enclosing balanced brackets. Returned ranges
// are disjoint and sorted.
std::vector<CharRange> detect_code_spans(std::string_view raw_text,
                                         const CodeSpanParams& params = {});

// A protected span with its final action.
struct ResolvedSpan {
  CharRange range;
  TermAction action = TermAction::transliterate;
  Method source = Method::code;

  bool operator==(const ResolvedSpan&) const = default;
};

// Merges all discovery methods into disjoint spans. Precedence: code spans
// (always keep) > lexicon matches (their action) > unsupervised agreement
// (a term in the top_k of BOTH rankings; every occurrence, default
// transliterate). On overlap the higher precedence wins, then the longer
// span, then the earlier. Candidates pointing past the document throw
// ContractError.
std::vector<ResolvedSpan> resolve_term_actions(
    const Document& doc, const std::vector<TermCandidate>& textrank_ranked,
    const std::vector<TermCandidate>& tfidf_ranked,
    const std::vector<TermCandidate>& lexicon_matches,
    const std::vector<CharRange>& code_spans, const TermLexicon& lexicon,
    std::size_t top_k);

struct PlaceholderStyle {
  std::string prefix = "__DT";
  std::string suffix = "__";
};

struct PlaceholderBinding {
  std::string surface;
  TermAction action = TermAction::keep;

  bool operator==(const PlaceholderBinding&) const = default;
};

struct TaggedText {
  std::string text;
  std::map<int, PlaceholderBinding> side_table;
};

// Replaces each span with __DT<n>__, numbered 0.. in text order, recording
// surface and action in the side table. Overlapping spans or spans past the
// text throw ContractError.
TaggedText wrap_placeholders(std::string_view raw_text,
                             const std::vector<ResolvedSpan>& spans,
                             const PlaceholderStyle& style = {});

// Substitutes every placeholder back. `render` decides the replacement text
// from (surface, action); by default the stored surface comes back verbatim.
// Raises IntegrityError naming ids when a placeholder is missing, duplicated,
// or unknown — an engine that drops or copies a placeholder is caught here.
std::string unwrap_placeholders(
    std::string_view translated_text,
    const std::map<int, PlaceholderBinding>& side_table,
    const std::function<std::string(const std::string&, TermAction)>& render =
        {},
    const PlaceholderStyle& style = {});

}  // namespace isodub::terms
