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
// isodub: isochronous dubbing planner.
//   fixture   write a self-contained demo project
//   validate  check a subtitle file
//   analyze   print pause structure and syllable boundaries of a WAV
//   terms     show term protection for a text file
//   run       run the full dubbing pipeline from a config file
//   plan      validate and summarize a plan.json

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isodub/adapters.hpp"
#include "isodub/align.hpp"
#include "isodub/analysis.hpp"
#include "isodub/audio.hpp"
#include "isodub/document.hpp"
#include "isodub/errors.hpp"
#include "isodub/keywords.hpp"
#include "isodub/pipeline.hpp"
#include "isodub/srt.hpp"
#include "isodub/terms.hpp"

namespace {

std::string read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw isodub::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_fixture(const std::string& dir) {
  std::string conf = isodub::pipeline::write_fixture(dir);
  std::cout << "fixture written; config: " << conf << "\n";
  return 0;
}

int cmd_validate(const std::string& path) {
  isodub::srt::SubtitleTrack track = isodub::srt::parse_srt(read_all(path));
  std::vector<isodub::srt::Violation> violations =
      isodub::srt::validate_track(track);
  if (violations.empty()) {
    std::cout << path << ": " << track.cues.size() << " cues, valid\n";
    return 0;
  }
  for (const isodub::srt::Violation& v : violations)
    std::cout << path << ": " << v.message << "\n";
  return 2;
}

int cmd_analyze(const std::string& wav_path, int frame_ms, int hop_ms,
                double threshold_db, double floor_db, long long min_silence,
                bool syllables) {
  isodub::audio::AudioBuffer buf = isodub::audio::load_wav_file(wav_path);
  std::cout << wav_path << ": " << buf.duration_ms() << " ms @ "
            << buf.sample_rate_hz << " Hz\n";
  isodub::analysis::FrameEnergy energy =
      isodub::analysis::frame_energies(buf, frame_ms, hop_ms);
  isodub::analysis::SilenceParams sp;
  sp.threshold_db_rel_peak = threshold_db;
  sp.floor_dbfs = floor_db;
  sp.min_silence_ms = min_silence;
  for (const isodub::analysis::SilenceRegion& r :
       isodub::analysis::detect_silences(energy, sp))
    std::cout << "silence [" << r.start_ms << ", " << r.end_ms << ") "
              << r.duration_ms() << " ms\n";
  if (syllables) {
    isodub::analysis::SyllableParams yp;
    yp.frame_ms = frame_ms;
    yp.hop_ms = hop_ms;
    for (const isodub::analysis::SyllableBoundary& b :
         isodub::analysis::detect_syllable_boundaries(buf, yp))
      std::cout << "boundary at " << b.at_ms << " ms, gap " << b.gap_to_next_ms
                << " ms" << (b.insertable ? "" : " (not insertable)") << "\n";
  }
  return 0;
}

int cmd_terms(const std::string& text_path, const std::string& lexicon_path,
              const std::string& stopwords_path, std::size_t top_k) {
  std::string text = read_all(text_path);
  // Term discovery treats the file as one document.
  isodub::terms::Document doc = isodub::terms::tokenize(text);
  isodub::terms::TermLexicon lexicon;
  if (!lexicon_path.empty())
    lexicon = isodub::terms::load_lexicon_file(lexicon_path);
  std::set<std::string> stopwords;
  if (!stopwords_path.empty())
    stopwords = isodub::terms::load_stopwords_file(stopwords_path);

  std::vector<isodub::terms::Document> corpus{doc};
  std::vector<isodub::terms::ResolvedSpan> spans =
      isodub::terms::resolve_term_actions(
          doc, isodub::terms::textrank_keywords(doc, stopwords),
          isodub::terms::rank_tfidf(doc,
                                    isodub::terms::tfidf_scores(corpus, 0)),
          isodub::terms::lexicon_match(doc, lexicon),
          isodub::terms::detect_code_spans(text), lexicon, top_k);
  for (const isodub::terms::ResolvedSpan& s : spans)
    std::cout << "[" << s.range.begin << ", " << s.range.end << ") "
              << isodub::terms::action_name(s.action) << ": \""
              << text.substr(s.range.begin, s.range.end - s.range.begin)
              << "\"\n";
  isodub::terms::TaggedText tagged =
      isodub::terms::wrap_placeholders(text, spans);
  std::cout << "tagged: " << tagged.text << "\n";
  return 0;
}

int cmd_run(const std::string& config_path, int jobs_override) {
  isodub::pipeline::PipelineConfig config =
      isodub::pipeline::load_config_file(config_path);
  if (jobs_override > 0) config.jobs = jobs_override;
  isodub::adapters::EngineSet engines =
      isodub::pipeline::make_engines(config);
  isodub::pipeline::RunResult result =
      isodub::pipeline::run_pipeline(config, engines);
  std::cout << isodub::pipeline::render_report(
      result.plan, result.report,
      isodub::align::BandLimits{config.band_low, config.band_high});
  std::cout << "plan:   " << result.plan_path << "\n";
  std::cout << "srt:    " << result.srt_path << "\n";
  std::cout << "report: " << result.report_path << "\n";
  for (const std::string& p : result.cue_wav_paths)
    std::cout << "audio:  " << p << "\n";
  return 0;
}

int cmd_plan(const std::string& plan_path) {
  std::string text = read_all(plan_path);
  std::vector<std::string> problems = isodub::align::validate_plan_json(text);
  if (!problems.empty()) {
    for (const std::string& p : problems)
      std::cout << plan_path << ": " << p << "\n";
    return 2;
  }
  isodub::align::AlignmentPlan plan = isodub::align::plan_from_json(text);
  std::cout << isodub::pipeline::render_report(plan, {}, {});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"isochronous dubbing planner"};
  app.require_subcommand(1);

  std::string fixture_dir;
  CLI::App* fixture = app.add_subcommand("fixture", "write a demo project");
  fixture->add_option("dir", fixture_dir, "target directory")->required();

  std::string srt_path;
  CLI::App* validate = app.add_subcommand("validate", "check a subtitle file");
  validate->add_option("srt", srt_path, "SRT file")->required();

  std::string wav_path;
  int frame_ms = 25, hop_ms = 10;
  double threshold_db = -35.0, floor_db = -90.0;
  long long min_silence = 200;
  bool syllables = false;
  CLI::App* analyze =
      app.add_subcommand("analyze", "pause structure of a WAV file");
  analyze->add_option("wav", wav_path, "WAV file")->required();
  analyze->add_option("--frame-ms", frame_ms, "analysis frame length");
  analyze->add_option("--hop-ms", hop_ms, "analysis hop");
  analyze->add_option("--threshold-db", threshold_db,
                      "silence threshold relative to peak");
  analyze->add_option("--floor-db", floor_db, "absolute silence floor");
  analyze->add_option("--min-silence-ms", min_silence,
                      "minimum silence duration");
  analyze->add_flag("--syllables", syllables, "also print syllable boundaries");

  std::string text_path, lexicon_path, stopwords_path;
  std::size_t top_k = 8;
  CLI::App* terms =
      app.add_subcommand("terms", "show term protection for a text file");
  terms->add_option("text", text_path, "UTF-8 text file")->required();
  terms->add_option("--lexicon", lexicon_path, "term lexicon TSV");
  terms->add_option("--stopwords", stopwords_path, "stopword list");
  terms->add_option("--top-k", top_k, "keyword agreement depth");

  std::string config_path;
  int jobs_override = 0;
  CLI::App* run = app.add_subcommand("run", "run the dubbing pipeline");
  run->add_option("config", config_path, "config file")->required();
  run->add_option("--jobs", jobs_override, "override worker thread count");

  std::string plan_path;
  CLI::App* plan = app.add_subcommand("plan", "validate and summarize a plan");
  plan->add_option("plan", plan_path, "plan.json file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixture->parsed()) return cmd_fixture(fixture_dir);
    if (validate->parsed()) return cmd_validate(srt_path);
    if (analyze->parsed())
      return cmd_analyze(wav_path, frame_ms, hop_ms, threshold_db, floor_db,
                         min_silence, syllables);
    if (terms->parsed())
      return cmd_terms(text_path, lexicon_path, stopwords_path, top_k);
    if (run->parsed()) return cmd_run(config_path, jobs_override);
    if (plan->parsed()) return cmd_plan(plan_path);
  } catch (const std::exception& e) {
    std::cerr << "isodub: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
