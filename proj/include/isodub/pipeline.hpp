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
// The end-to-end dubbing pipeline: subtitle validation, term protection,
// translation, rhythm chunking, synthesis, pause-structure analysis and
// isochronous rendering, per cue.  All randomness-free: a run's outputs are
// byte-identical across repeats and thread counts.

#ifndef ISODUB_PIPELINE_HPP_
#define ISODUB_PIPELINE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "isodub/adapters.hpp"
#include "isodub/align.hpp"
#include "isodub/types.hpp"

namespace isodub::pipeline {

// Environment variables consulted when an engine is configured as "command".
inline constexpr const char* kTranslateCmdEnv = "ISODUB_TRANSLATE_CMD";
inline constexpr const char* kTransliterateCmdEnv = "ISODUB_TRANSLITERATE_CMD";
inline constexpr const char* kTtsCmdEnv = "ISODUB_TTS_CMD";
inline constexpr const char* kTaggerCmdEnv = "ISODUB_TAGGER_CMD";

struct PipelineConfig {
  // Inputs and outputs.
  std::string source_srt;
  std::string source_audio;
  std::string output_dir;
  std::string lexicon;    // term lexicon TSV; empty = no lexicon
  std::string stopwords;  // stopword list; empty = built-in English list
  std::string rules;      // break rule file; empty = built-in TOK/PUNC rules
  std::string source_lang = "en";
  std::string target_lang = "hi";

  // Source pause analysis.
  int frame_ms = 25;
  int hop_ms = 10;
  double silence_threshold_db = -35.0;  // relative to the cue's peak frame
  double silence_floor_db = -90.0;
  TimeMs min_silence_ms = 200;

  // Target syllable analysis.
  TimeMs smooth_ms = 50;
  double valley_depth_db = 6.0;
  TimeMs min_insertable_gap_ms = 50;
  TimeMs merge_within_ms = 50;

  // Isochrony planner.
  TimeMs snap_radius_ms = 500;
  double band_low = 1.2;
  double band_high = 1.5;

  // Term protection: a term ranked in the top_k of both keyword rankings is
  // protected even without a lexicon entry.
  std::size_t top_k = 8;

  // Rhythm chunking.
  std::size_t max_tokens_per_chunk = 12;
  TimeMs minor_pause_ms = 150;
  TimeMs major_pause_ms = 400;

  // Synthesis.
  double tts_rate = 4.0;  // syllables per second
  int tts_sample_rate_hz = 16000;

  // Engine selection: translate_adapter in {stub, stub-reverse, command};
  // transliterate_adapter and tts_adapter in {stub, command}; tagger in
  // {punct, command}.  "command" engines run the shell command found in the
  // matching ISODUB_*_CMD environment variable.
  std::string translate_adapter = "stub";
  std::string transliterate_adapter = "stub";
  std::string tts_adapter = "stub";
  std::string tagger = "punct";

  int jobs = 1;  // worker threads for the per-cue stages
};

// "key = value" per line; '#' starts a comment; blank lines are skipped.
// Unknown keys and malformed values are ParseErrors carrying line numbers.
PipelineConfig parse_config(std::string_view text);

// parse_config over the file's bytes, with every relative path in the
// config resolved against the config file's directory.
PipelineConfig load_config_file(const std::string& path);

// Instantiates the engines the config names (throws ContractError on an
// unknown name, Error when a required ISODUB_*_CMD variable is missing).
adapters::EngineSet make_engines(const PipelineConfig& config);

struct RunReport {
  std::size_t source_chars = 0;     // cue text bytes fed to the pipeline
  std::size_t protected_chars = 0;  // bytes covered by protected spans
  std::size_t protected_spans = 0;
  std::size_t keep_spans = 0;
  std::size_t transliterate_spans = 0;
  std::size_t translate_spans = 0;
  std::size_t warning_count = 0;  // planner warnings across all cues
};

struct RunResult {
  align::AlignmentPlan plan;
  RunReport report;
  std::vector<std::string> cue_wav_paths;  // in cue order
  std::string plan_path;
  std::string srt_path;
  std::string report_path;
};

// Runs every stage for every cue and writes, under config.output_dir:
// one cue_NNNN.wav per cue (target speech with pauses spliced in),
// plan.json, target.srt (translated text on the source timing), and
// report.txt.  Cue stages run on config.jobs threads; outputs are
// byte-identical regardless.  A stage failure surfaces as the StageError of
// the first failing cue in cue order, after the outputs of every earlier
// cue have been written.
RunResult run_pipeline(const PipelineConfig& config,
                       adapters::EngineSet& engines);

// Human-readable run summary (the contents of report.txt).
std::string render_report(const align::AlignmentPlan& plan,
                          const RunReport& report,
                          const align::BandLimits& limits = {});

// Writes a small self-contained demo project into dir (sample.srt,
// sample.wav, lexicon.tsv, stopwords.txt, rules.tsv, isodub.conf) and
// returns the config file path.
std::string write_fixture(const std::string& dir);

}  // namespace isodub::pipeline

#endif  // ISODUB_PIPELINE_HPP_
