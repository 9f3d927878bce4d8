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
//
// Engine seams for the external systems the pipeline depends on: machine
// translation, transliteration, speech synthesis, and token tagging.  Each
// seam ships with a deterministic in-process stub (so the whole pipeline
// runs hermetically) and a subprocess-backed adapter that talks to any
// executable over stdin/stdout.
//
// Subprocess protocols (all UTF-8, all via `/bin/sh -c "$CMD"`):
//   translate:      stdin = tagged source text, stdout = tagged target text.
//   transliterate:  stdin = one term, stdout = its transliteration.
//   tts:            stdin = first line is the speaking rate in syllables per
//                   second, remaining lines are pause-annotated target text;
//                   stdout = a complete WAV file (PCM16, mono or stereo).
//   tagger:         stdin = one token per line, stdout = one tag per line.
// A nonzero exit status from any adapter raises isodub::Error.

#ifndef ISODUB_ADAPTERS_HPP_
#define ISODUB_ADAPTERS_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "isodub/audio.hpp"

namespace isodub::adapters {

class TranslateEngine {
 public:
  virtual ~TranslateEngine() = default;
  // Translates placeholder-tagged text; placeholders must survive verbatim.
  virtual std::string translate(const std::string& tagged_text) = 0;
};

class TransliterateEngine {
 public:
  virtual ~TransliterateEngine() = default;
  virtual std::string transliterate(const std::string& term) = 0;
};

class SynthesisEngine {
 public:
  virtual ~SynthesisEngine() = default;
  // `annotated_text` may contain pause annotations of the form
  // "⟨pause ms=N⟩" which must be rendered as N ms of silence.
  virtual audio::AudioBuffer synthesize(const std::string& annotated_text,
                                        double rate_syllables_per_s) = 0;
};

class TaggerEngine {
 public:
  virtual ~TaggerEngine() = default;
  // Returns one tag per input token.
  virtual std::vector<std::string> tag(
      const std::vector<std::string>& tokens) = 0;
};

struct EngineSet {
  std::unique_ptr<TranslateEngine> translator;
  std::unique_ptr<TransliterateEngine> transliterator;
  std::unique_ptr<SynthesisEngine> synthesizer;
  std::unique_ptr<TaggerEngine> tagger;
};

// ---------------------------------------------------------------------------
// Deterministic stubs.

// Identity translation, or whitespace-token reversal when `reverse_words`
// is set (exercises placeholder reordering without a real MT system).
class StubTranslator : public TranslateEngine {
 public:
  explicit StubTranslator(bool reverse_words = false)
      : reverse_words_(reverse_words) {}
  std::string translate(const std::string& tagged_text) override;

 private:
  bool reverse_words_;
};

class StubTransliterator : public TransliterateEngine {
 public:
  std::string transliterate(const std::string& term) override { return term; }
};

// Renders each syllable as a fixed 150 ms tone burst at the start of its
// syllable slot (slot length = sample_rate / rate, allocated by cumulative
// rounding so total duration stays within one sample of n/rate), and each
// pause annotation as exact silence.  Per-token syllable counts come from
// count_syllables below.
class StubSynthesizer : public SynthesisEngine {
 public:
  explicit StubSynthesizer(int sample_rate_hz = 16000)
      : sample_rate_hz_(sample_rate_hz) {}
  audio::AudioBuffer synthesize(const std::string& annotated_text,
                                double rate_syllables_per_s) override;

  static constexpr TimeMs kBurstMs = 150;
  static constexpr double kToneHz = 440.0;

 private:
  int sample_rate_hz_;
};

// Tags a token "PUNC" when it ends with sentence punctuation (including the
// Devanagari danda), "TOK" otherwise.
class PunctuationTagger : public TaggerEngine {
 public:
  std::vector<std::string> tag(const std::vector<std::string>& tokens) override;
};

// Heuristic syllable count for the stub synthesizer: the number of maximal
// ASCII vowel groups (y counts), never less than 1 for a non-empty token.
std::size_t count_syllables(std::string_view token);

// ---------------------------------------------------------------------------
// Subprocess-backed adapters.

class CommandTranslator : public TranslateEngine {
 public:
  explicit CommandTranslator(std::string command)
      : command_(std::move(command)) {}
  std::string translate(const std::string& tagged_text) override;

 private:
  std::string command_;
};

class CommandTransliterator : public TransliterateEngine {
 public:
  explicit CommandTransliterator(std::string command)
      : command_(std::move(command)) {}
  std::string transliterate(const std::string& term) override;

 private:
  std::string command_;
};

class CommandSynthesizer : public SynthesisEngine {
 public:
  explicit CommandSynthesizer(std::string command)
      : command_(std::move(command)) {}
  audio::AudioBuffer synthesize(const std::string& annotated_text,
                                double rate_syllables_per_s) override;

 private:
  std::string command_;
};

class CommandTagger : public TaggerEngine {
 public:
  explicit CommandTagger(std::string command) : command_(std::move(command)) {}
  std::vector<std::string> tag(const std::vector<std::string>& tokens) override;

 private:
  std::string command_;
};

}  // namespace isodub::adapters

#endif  // ISODUB_ADAPTERS_HPP_
