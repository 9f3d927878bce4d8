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

#include "isodub/terms.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "isodub/errors.hpp"

namespace isodub::terms {
namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

TermAction parse_action(std::string_view s, std::size_t line) {
  std::string low = to_lower_ascii(trim(s));
  if (low == "translate") return TermAction::translate;
  if (low == "transliterate") return TermAction::transliterate;
  if (low == "keep") return TermAction::keep;
  throw ParseError("unknown term action \"" + low + "\"", line);
}

std::size_t phrase_token_count(std::string_view phrase) {
  std::size_t count = 0;
  bool in_tok = false;
  for (char c : phrase) {
    bool sp = std::isspace(static_cast<unsigned char>(c)) != 0;
    if (!sp && !in_tok) ++count;
    in_tok = !sp;
  }
  return count;
}

}  // namespace

const char* action_name(TermAction a) {
  switch (a) {
    case TermAction::translate:
      return "translate";
    case TermAction::transliterate:
      return "transliterate";
    case TermAction::keep:
      return "keep";
  }
  return "?";
}

TermLexicon load_lexicon(std::string_view text) {
  TermLexicon lex;
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
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = (tab1 == std::string_view::npos)
                           ? std::string_view::npos
                           : line.find('\t', tab1 + 1);
    if (tab1 == std::string_view::npos || tab2 == std::string_view::npos)
      throw ParseError("lexicon line needs term<TAB>domain<TAB>action", line_no);
    std::string term = to_lower_ascii(trim(line.substr(0, tab1)));
    if (term.empty()) throw ParseError("empty lexicon term", line_no);
    LexiconEntry entry;
    entry.domain = std::string(trim(line.substr(tab1 + 1, tab2 - tab1 - 1)));
    entry.action = parse_action(line.substr(tab2 + 1), line_no);
    lex.entries[term] = entry;
    lex.max_phrase_tokens =
        std::max(lex.max_phrase_tokens, phrase_token_count(term));
  }
  return lex;
}

TermLexicon load_lexicon_file(const std::string& path) {
  return load_lexicon(read_text_file(path));
}

std::set<std::string> load_stopwords(std::string_view text) {
  std::set<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.insert(to_lower_ascii(t));
  }
  return out;
}

std::set<std::string> load_stopwords_file(const std::string& path) {
  return load_stopwords(read_text_file(path));
}

std::vector<TermCandidate> lexicon_match(const Document& doc,
                                         const TermLexicon& lexicon) {
  std::vector<TermCandidate> out;
  if (lexicon.entries.empty()) return out;
  const std::size_t n = doc.tokens.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t matched = 0;
    std::size_t cap = std::min(lexicon.max_phrase_tokens, n - i);
    for (std::size_t len = cap; len >= 1; --len) {
      std::string phrase;
      for (std::size_t j = i; j < i + len; ++j) {
        if (j > i) phrase += ' ';
        phrase += doc.tokens[j].normalized;
      }
      if (lexicon.entries.count(phrase)) {
        matched = len;
        break;
      }
    }
    if (matched) {
      out.push_back({i, i + matched, static_cast<double>(matched),
                     Method::lexicon});
      i += matched;
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<CharRange> detect_code_spans(std::string_view raw,
                                         const CodeSpanParams& p) {
  if (p.max_window_tokens < 1 || p.min_ops < 1 || p.min_density < 0.0)
    throw ContractError("detect_code_spans: invalid parameters");

  // Raw whitespace tokens; punctuation stays put — shape is the signal here.
  std::vector<CharRange> toks;
  {
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t b = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
        ++i;
      toks.push_back({b, i});
    }
  }
  if (toks.empty()) return {};

  std::array<bool, 256> is_op{};
  for (char c : p.op_chars) is_op[static_cast<unsigned char>(c)] = true;
  std::vector<int> pre(raw.size() + 1, 0);
  for (std::size_t i = 0; i < raw.size(); ++i)
    pre[i + 1] = pre[i] + (is_op[static_cast<unsigned char>(raw[i])] ? 1 : 0);

  // A window is a run of 1..max_window_tokens tokens. A hot window marks its
  // tokens only up to its last operator-bearing one: code regularly starts
  // with a bare keyword ("for", "while") but ends in operator punctuation, so
  // trailing prose must never ride along on a window's density.
  std::vector<char> hot(toks.size(), 0);
  for (std::size_t s = 0; s < toks.size(); ++s) {
    std::size_t cap =
        std::min<std::size_t>(p.max_window_tokens, toks.size() - s);
    for (std::size_t w = 1; w <= cap; ++w) {
      std::size_t b = toks[s].begin;
      std::size_t e = toks[s + w - 1].end;
      int ops = pre[e] - pre[b];
      if (ops >= p.min_ops &&
          static_cast<double>(ops) >
              p.min_density * static_cast<double>(e - b)) {
        std::size_t last = s + w - 1;
        while (pre[toks[last].end] == pre[toks[last].begin]) --last;
        for (std::size_t t = s; t <= last; ++t) hot[t] = 1;
      }
    }
  }

  std::vector<CharRange> ranges;
  for (std::size_t t = 0; t < toks.size();) {
    if (!hot[t]) {
      ++t;
      continue;
    }
    std::size_t first = t;
    while (t < toks.size() && hot[t]) ++t;
    ranges.push_back({toks[first].begin, toks[t - 1].end});
  }
  if (ranges.empty()) return ranges;

  // Global bracket matching: (), [], {} pair by type; mismatched closers
  // are ignored.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match(raw.size(), kNone);
  {
    std::vector<std::pair<std::size_t, char>> stack;
    auto closes = [](char open, char close) {
      return (open == '(' && close == ')') || (open == '[' && close == ']') ||
             (open == '{' && close == '}');
    };
    for (std::size_t i = 0; i < raw.size(); ++i) {
      char c = raw[i];
      if (c == '(' || c == '[' || c == '{') {
        stack.emplace_back(i, c);
      } else if (c == ')' || c == ']' || c == '}') {
        if (!stack.empty() && closes(stack.back().second, c)) {
          match[i] = stack.back().first;
          match[stack.back().first] = i;
          stack.pop_back();
        }
      }
    }
  }

  auto token_align = [&toks](CharRange r) {
    for (const CharRange& t : toks) {
      if (t.begin <= r.begin && r.begin < t.end) r.begin = t.begin;
      if (t.begin < r.end && r.end <= t.end) r.end = t.end;
    }
    return r;
  };

  for (CharRange& r : ranges) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = r.begin; i < r.end; ++i) {
        std::size_t m = match[i];
        if (m == kNone || (m >= r.begin && m < r.end)) continue;
        r.begin = std::min(r.begin, m);
        r.end = std::max(r.end, m + 1);
        changed = true;
        break;
      }
    }
    r = token_align(r);
  }

  std::sort(ranges.begin(), ranges.end(),
            [](const CharRange& a, const CharRange& b) {
              return a.begin < b.begin;
            });
  std::vector<CharRange> merged;
  for (const CharRange& r : ranges) {
    if (!merged.empty() && r.begin <= merged.back().end)
      merged.back().end = std::max(merged.back().end, r.end);
    else
      merged.push_back(r);
  }
  return merged;
}

namespace {

struct PrioritizedSpan {
  int priority;  // lower wins
  CharRange range;
  TermAction action;
  Method source;
};

void check_candidates(const Document& doc,
                      const std::vector<TermCandidate>& list,
                      const char* what) {
  for (const TermCandidate& c : list)
    if (c.begin_token >= c.end_token || c.end_token > doc.tokens.size())
      throw ContractError(std::string("resolve_term_actions: ") + what +
                          " candidate out of document range");
}

std::string phrase_of(const Document& doc, const TermCandidate& c) {
  std::string phrase;
  for (std::size_t j = c.begin_token; j < c.end_token; ++j) {
    if (j > c.begin_token) phrase += ' ';
    phrase += doc.tokens[j].normalized;
  }
  return phrase;
}

}  // namespace

std::vector<ResolvedSpan> resolve_term_actions(
    const Document& doc, const std::vector<TermCandidate>& textrank_ranked,
    const std::vector<TermCandidate>& tfidf_ranked,
    const std::vector<TermCandidate>& lexicon_matches,
    const std::vector<CharRange>& code_spans, const TermLexicon& lexicon,
    std::size_t top_k) {
  check_candidates(doc, textrank_ranked, "textrank");
  check_candidates(doc, tfidf_ranked, "tfidf");
  check_candidates(doc, lexicon_matches, "lexicon");
  for (const CharRange& r : code_spans)
    if (r.begin >= r.end)
      throw ContractError("resolve_term_actions: empty code span");

  // Unsupervised terms need agreement: present in the top_k of both
  // rankings.
  std::set<std::string> textrank_top, agreed;
  for (std::size_t i = 0; i < textrank_ranked.size() && i < top_k; ++i)
    textrank_top.insert(phrase_of(doc, textrank_ranked[i]));
  for (std::size_t i = 0; i < tfidf_ranked.size() && i < top_k; ++i) {
    std::string term = phrase_of(doc, tfidf_ranked[i]);
    if (textrank_top.count(term)) agreed.insert(term);
  }

  std::vector<PrioritizedSpan> all;
  for (const CharRange& r : code_spans)
    all.push_back({0, r, TermAction::keep, Method::code});
  for (const TermCandidate& c : lexicon_matches) {
    auto it = lexicon.entries.find(phrase_of(doc, c));
    if (it == lexicon.entries.end())
      throw ContractError(
          "resolve_term_actions: lexicon candidate not present in lexicon");
    CharRange r{doc.tokens[c.begin_token].begin,
                doc.tokens[c.end_token - 1].end};
    all.push_back({1, r, it->second.action, Method::lexicon});
  }
  for (const Token& t : doc.tokens)
    if (agreed.count(t.normalized))
      all.push_back({2,
                     {t.begin, t.end},
                     TermAction::transliterate,
                     Method::textrank});

  std::sort(all.begin(), all.end(),
            [](const PrioritizedSpan& a, const PrioritizedSpan& b) {
              if (a.priority != b.priority) return a.priority < b.priority;
              std::size_t la = a.range.end - a.range.begin;
              std::size_t lb = b.range.end - b.range.begin;
              if (la != lb) return la > lb;
              return a.range.begin < b.range.begin;
            });

  std::vector<ResolvedSpan> accepted;
  for (const PrioritizedSpan& s : all) {
    bool overlaps = false;
    for (const ResolvedSpan& a : accepted)
      if (s.range.begin < a.range.end && a.range.begin < s.range.end) {
        overlaps = true;
        break;
      }
    if (!overlaps) accepted.push_back({s.range, s.action, s.source});
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const ResolvedSpan& a, const ResolvedSpan& b) {
              return a.range.begin < b.range.begin;
            });
  return accepted;
}

TaggedText wrap_placeholders(std::string_view raw,
                             const std::vector<ResolvedSpan>& spans,
                             const PlaceholderStyle& style) {
  std::vector<ResolvedSpan> sorted = spans;
  std::sort(sorted.begin(), sorted.end(),
            [](const ResolvedSpan& a, const ResolvedSpan& b) {
              return a.range.begin < b.range.begin;
            });
  std::size_t prev_end = 0;
  for (const ResolvedSpan& s : sorted) {
    if (s.range.begin >= s.range.end || s.range.end > raw.size())
      throw ContractError("wrap_placeholders: span out of range");
    if (s.range.begin < prev_end)
      throw ContractError("wrap_placeholders: overlapping spans");
    prev_end = s.range.end;
  }

  TaggedText out;
  std::size_t cursor = 0;
  int id = 0;
  for (const ResolvedSpan& s : sorted) {
    out.text.append(raw.substr(cursor, s.range.begin - cursor));
    out.text += style.prefix;
    out.text += std::to_string(id);
    out.text += style.suffix;
    out.side_table[id] = {
        std::string(raw.substr(s.range.begin, s.range.end - s.range.begin)),
        s.action};
    cursor = s.range.end;
    ++id;
  }
  out.text.append(raw.substr(cursor));
  return out;
}

std::string unwrap_placeholders(
    std::string_view text, const std::map<int, PlaceholderBinding>& table,
    const std::function<std::string(const std::string&, TermAction)>& render,
    const PlaceholderStyle& style) {
  std::map<int, int> seen;
  std::set<int> unknown;
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t hit = text.find(style.prefix, pos);
    if (hit == std::string_view::npos) {
      out.append(text.substr(pos));
      break;
    }
    out.append(text.substr(pos, hit - pos));
    std::size_t d = hit + style.prefix.size();
    std::size_t digits_begin = d;
    while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d])))
      ++d;
    bool complete = d > digits_begin &&
                    text.compare(d, style.suffix.size(), style.suffix) == 0;
    if (!complete) {
      // Not a placeholder; emit the prefix byte and keep scanning.
      out += text[hit];
      pos = hit + 1;
      continue;
    }
    int id = std::stoi(std::string(text.substr(digits_begin, d - digits_begin)));
    ++seen[id];
    auto it = table.find(id);
    if (it == table.end()) {
      unknown.insert(id);
    } else if (render) {
      out += render(it->second.surface, it->second.action);
    } else {
      out += it->second.surface;
    }
    pos = d + style.suffix.size();
  }

  auto join_ids = [&style](const std::vector<int>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) s += ", ";
      s += style.prefix + std::to_string(ids[i]) + style.suffix;
    }
    return s;
  };
  std::vector<int> missing, duplicated;
  for (const auto& [id, _] : table)
    if (!seen.count(id)) missing.push_back(id);
  for (const auto& [id, count] : seen)
    if (count > 1 && table.count(id)) duplicated.push_back(id);

  if (!unknown.empty())
    throw IntegrityError(
        "unknown placeholder(s): " +
        join_ids(std::vector<int>(unknown.begin(), unknown.end())));
  if (!duplicated.empty())
    throw IntegrityError("duplicated placeholder(s): " + join_ids(duplicated));
  if (!missing.empty())
    throw IntegrityError("missing placeholder(s): " + join_ids(missing));
  return out;
}

}  // namespace isodub::terms
