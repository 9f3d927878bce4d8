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

#include "isodub/adapters.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "isodub/errors.hpp"
#include "subprocess.hpp"

namespace isodub::adapters {

namespace {

constexpr const char* kPauseOpen = "⟨pause ms=";  // ⟨pause ms=
constexpr const char* kPauseClose = "⟩";          // ⟩

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ws(text[i])) ++i;
    std::size_t b = i;
    while (i < text.size() && !is_ws(text[i])) ++i;
    if (i > b) out.emplace_back(text.substr(b, i - b));
  }
  return out;
}

std::string chomp(std::string s) {
  if (!s.empty() && s.back() == '\n') s.pop_back();
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::string run_text_adapter(const std::string& command,
                             std::string_view input, const char* what) {
  subprocess::ProcessResult r = subprocess::run_command(command, input);
  if (r.exit_code != 0)
    throw Error(std::string(what) + " adapter failed (exit " +
                std::to_string(r.exit_code) +
                (r.term_signal ? ", signal " + std::to_string(r.term_signal)
                               : std::string()) +
                "): " + command);
  return std::move(r.out);
}

}  // namespace

std::size_t count_syllables(std::string_view token) {
  if (token.empty()) return 0;
  std::size_t runs = 0;
  bool in_vowel = false;
  for (char c : token) {
    bool vowel = false;
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
      case 'y':
        vowel = true;
        break;
      default:
        break;
    }
    if (vowel && !in_vowel) ++runs;
    in_vowel = vowel;
  }
  return runs > 0 ? runs : 1;
}

std::string StubTranslator::translate(const std::string& tagged_text) {
  if (!reverse_words_) return tagged_text;
  std::vector<std::string> tokens = split_ws(tagged_text);
  std::string out;
  for (std::size_t i = tokens.size(); i-- > 0;) {
    if (!out.empty()) out += ' ';
    out += tokens[i];
  }
  return out;
}

audio::AudioBuffer StubSynthesizer::synthesize(
    const std::string& annotated_text, double rate_syllables_per_s) {
  if (!(rate_syllables_per_s > 0))
    throw ContractError("synthesis rate must be positive");
  if (!audio::is_supported_rate(sample_rate_hz_))
    throw ContractError("unsupported synthesis sample rate");

  struct Piece {
    bool is_pause;
    std::size_t syllables;
    TimeMs pause_ms;
  };
  std::vector<Piece> pieces;
  auto add_words = [&pieces](std::string_view segment) {
    for (const std::string& tok : split_ws(segment))
      pieces.push_back({false, count_syllables(tok), 0});
  };

  const std::string open = kPauseOpen;
  const std::string close = kPauseClose;
  std::size_t pos = 0;
  while (pos < annotated_text.size()) {
    std::size_t hit = annotated_text.find(open, pos);
    if (hit == std::string::npos) {
      add_words(std::string_view(annotated_text).substr(pos));
      break;
    }
    add_words(std::string_view(annotated_text).substr(pos, hit - pos));
    std::size_t d = hit + open.size();
    std::size_t dend = d;
    while (dend < annotated_text.size() &&
           std::isdigit(static_cast<unsigned char>(annotated_text[dend])))
      ++dend;
    if (dend == d ||
        annotated_text.compare(dend, close.size(), close) != 0)
      throw ContractError("malformed pause annotation in synthesis input");
    TimeMs ms = 0;
    std::from_chars(annotated_text.data() + d, annotated_text.data() + dend, ms);
    pieces.push_back({true, 0, ms});
    pos = dend + close.size();
  }

  audio::AudioBuffer out;
  out.sample_rate_hz = sample_rate_hz_;
  const double period = static_cast<double>(sample_rate_hz_) / rate_syllables_per_s;
  const std::size_t burst_target = audio::ms_to_samples(kBurstMs, sample_rate_hz_);
  const std::size_t fade = audio::ms_to_samples(5, sample_rate_hz_);
  const double omega = 2.0 * std::numbers::pi * kToneHz /
                       static_cast<double>(sample_rate_hz_);

  std::size_t slot_count = 0;  // cumulative rounding keeps total duration exact
  for (const Piece& p : pieces) {
    if (p.is_pause) {
      out.samples.insert(out.samples.end(),
                         audio::ms_to_samples(p.pause_ms, sample_rate_hz_),
                         0.0f);
      continue;
    }
    for (std::size_t s = 0; s < p.syllables; ++s) {
      auto slot_begin = static_cast<std::size_t>(
          std::llround(static_cast<double>(slot_count) * period));
      ++slot_count;
      auto slot_end = static_cast<std::size_t>(
          std::llround(static_cast<double>(slot_count) * period));
      std::size_t slot_len = slot_end - slot_begin;
      std::size_t burst = std::min(burst_target, slot_len);
      for (std::size_t i = 0; i < slot_len; ++i) {
        float v = 0.0f;
        if (i < burst) {
          double env = 1.0;
          if (fade > 0) {
            if (i < fade)
              env = static_cast<double>(i + 1) / static_cast<double>(fade);
            if (burst - i <= fade)
              env = std::min(env, static_cast<double>(burst - i) /
                                      static_cast<double>(fade));
          }
          v = static_cast<float>(0.6 * env *
                                 std::sin(omega * static_cast<double>(i)));
        }
        out.samples.push_back(v);
      }
    }
  }
  return out;
}

std::vector<std::string> PunctuationTagger::tag(
    const std::vector<std::string>& tokens) {
  static const std::vector<std::string> kSuffixes = {
      ".", "!", "?", ";", ":", "।", "॥"};  // . ! ? ; : । ॥
  std::vector<std::string> tags;
  tags.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    bool punct = false;
    for (const std::string& suf : kSuffixes) {
      if (tok.size() >= suf.size() &&
          tok.compare(tok.size() - suf.size(), suf.size(), suf) == 0) {
        punct = true;
        break;
      }
    }
    tags.emplace_back(punct ? "PUNC" : "TOK");
  }
  return tags;
}

std::string CommandTranslator::translate(const std::string& tagged_text) {
  return chomp(run_text_adapter(command_, tagged_text + "\n", "translate"));
}

std::string CommandTransliterator::transliterate(const std::string& term) {
  return chomp(run_text_adapter(command_, term + "\n", "transliterate"));
}

audio::AudioBuffer CommandSynthesizer::synthesize(
    const std::string& annotated_text, double rate_syllables_per_s) {
  char rate_line[64];
  std::snprintf(rate_line, sizeof rate_line, "%.6g\n", rate_syllables_per_s);
  std::string input = std::string(rate_line) + annotated_text + "\n";
  std::string wav = run_text_adapter(command_, input, "tts");
  if (wav.empty()) throw Error("tts adapter produced no audio: " + command_);
  return audio::load_wav(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(wav.data()), wav.size()));
}

std::vector<std::string> CommandTagger::tag(
    const std::vector<std::string>& tokens) {
  std::string input;
  for (const std::string& tok : tokens) {
    input += tok;
    input += '\n';
  }
  std::string raw = run_text_adapter(command_, input, "tagger");
  std::vector<std::string> tags;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t nl = raw.find('\n', pos);
    std::string line = raw.substr(pos, nl == std::string::npos ? std::string::npos
                                                               : nl - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!(line.empty() && nl == std::string::npos)) tags.push_back(line);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  while (!tags.empty() && tags.back().empty()) tags.pop_back();
  if (tags.size() != tokens.size())
    throw Error("tagger returned " + std::to_string(tags.size()) +
                " tags for " + std::to_string(tokens.size()) + " tokens");
  return tags;
}

}  // namespace isodub::adapters
