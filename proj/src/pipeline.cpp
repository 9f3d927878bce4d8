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

#include "isodub/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <thread>
#include <utility>

#include "isodub/analysis.hpp"
#include "isodub/audio.hpp"
#include "isodub/document.hpp"
#include "isodub/errors.hpp"
#include "isodub/keywords.hpp"
#include "isodub/rhythm.hpp"
#include "isodub/srt.hpp"
#include "isodub/terms.hpp"

namespace isodub::pipeline {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("cannot read " + path);
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("cannot write " + path);
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t b = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > b) out.emplace_back(text.substr(b, i - b));
  }
  return out;
}

long long parse_int(const std::string& value, const std::string& key,
                    std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size())
    throw ParseError(key + " expects an integer, got \"" + value + "\"", line);
  return v;
}

double parse_real(const std::string& value, const std::string& key,
                  std::size_t line) {
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(value.c_str(), &end);
  if (errno != 0 || end != value.c_str() + value.size() || value.empty())
    throw ParseError(key + " expects a number, got \"" + value + "\"", line);
  return v;
}

bool apply_key(PipelineConfig& c, const std::string& key,
               const std::string& value, std::size_t line) {
  auto as_int = [&] { return parse_int(value, key, line); };
  auto as_real = [&] { return parse_real(value, key, line); };
  if (key == "source_srt") c.source_srt = value;
  else if (key == "source_audio") c.source_audio = value;
  else if (key == "output_dir") c.output_dir = value;
  else if (key == "lexicon") c.lexicon = value;
  else if (key == "stopwords") c.stopwords = value;
  else if (key == "rules") c.rules = value;
  else if (key == "source_lang") c.source_lang = value;
  else if (key == "target_lang") c.target_lang = value;
  else if (key == "frame_ms") c.frame_ms = static_cast<int>(as_int());
  else if (key == "hop_ms") c.hop_ms = static_cast<int>(as_int());
  else if (key == "silence_threshold_db") c.silence_threshold_db = as_real();
  else if (key == "silence_floor_db") c.silence_floor_db = as_real();
  else if (key == "min_silence_ms") c.min_silence_ms = as_int();
  else if (key == "smooth_ms") c.smooth_ms = as_int();
  else if (key == "valley_depth_db") c.valley_depth_db = as_real();
  else if (key == "min_insertable_gap_ms") c.min_insertable_gap_ms = as_int();
  else if (key == "merge_within_ms") c.merge_within_ms = as_int();
  else if (key == "snap_radius_ms") c.snap_radius_ms = as_int();
  else if (key == "band_low") c.band_low = as_real();
  else if (key == "band_high") c.band_high = as_real();
  else if (key == "top_k") c.top_k = static_cast<std::size_t>(as_int());
  else if (key == "max_tokens_per_chunk")
    c.max_tokens_per_chunk = static_cast<std::size_t>(as_int());
  else if (key == "minor_pause_ms") c.minor_pause_ms = as_int();
  else if (key == "major_pause_ms") c.major_pause_ms = as_int();
  else if (key == "tts_rate") c.tts_rate = as_real();
  else if (key == "tts_sample_rate_hz")
    c.tts_sample_rate_hz = static_cast<int>(as_int());
  else if (key == "translate_adapter") c.translate_adapter = value;
  else if (key == "transliterate_adapter") c.transliterate_adapter = value;
  else if (key == "tts_adapter") c.tts_adapter = value;
  else if (key == "tagger") c.tagger = value;
  else if (key == "jobs") c.jobs = static_cast<int>(as_int());
  else return false;
  return true;
}

std::set<std::string> default_stopwords() {
  return {"a",    "an",   "and",  "are",  "as",   "at",   "be",   "been",
          "but",  "by",   "can",  "did",  "do",   "does", "for",  "from",
          "had",  "has",  "have", "he",   "her",  "his",  "i",    "if",
          "in",   "is",   "it",   "its",  "no",   "not",  "of",   "on",
          "or",   "she",  "so",   "than", "that", "the",  "their", "then",
          "these", "they", "this", "those", "to",  "too",  "was",  "we",
          "were", "will", "with", "you"};
}

rhythm::RuleSet default_rules() {
  return rhythm::parse_rule_set("TOK PUNC\nPUNC\tmajor\n");
}

std::string sanitize_single_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
  return s;
}

std::string env_command(const char* var, const char* what) {
  const char* v = std::getenv(var);
  if (v == nullptr || *v == '\0')
    throw Error(std::string(what) + " adapter is \"command\" but " + var +
                " is not set");
  return v;
}

// Everything computed for one cue before anything is written to disk.
struct CueWork {
  std::string target_text;
  std::string annotated_text;
  audio::AudioBuffer speech;
  align::PauseProfile profile;
  std::vector<analysis::SyllableBoundary> boundaries;
  std::size_t protected_chars = 0;
  std::size_t protected_spans = 0;
  std::size_t keep_spans = 0;
  std::size_t transliterate_spans = 0;
  std::size_t translate_spans = 0;
};

}  // namespace

PipelineConfig parse_config(std::string_view text) {
  PipelineConfig cfg;
  std::size_t pos = 0;
  std::size_t lineno = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && lineno > 0) break;
    std::size_t nl = text.find('\n', pos);
    std::string line(nl == std::string_view::npos
                         ? text.substr(pos)
                         : text.substr(pos, nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected \"key = value\"", lineno);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty config key", lineno);
    if (!apply_key(cfg, key, value, lineno))
      throw ParseError("unknown config key \"" + key + "\"", lineno);
    if (pos == text.size() + 1) break;
  }
  return cfg;
}

PipelineConfig load_config_file(const std::string& path) {
  PipelineConfig cfg = parse_config(read_file(path));
  fs::path base = fs::path(path).parent_path();
  auto resolve = [&base](std::string& p) {
    if (!p.empty() && fs::path(p).is_relative())
      p = (base / p).lexically_normal().string();
  };
  resolve(cfg.source_srt);
  resolve(cfg.source_audio);
  resolve(cfg.output_dir);
  resolve(cfg.lexicon);
  resolve(cfg.stopwords);
  resolve(cfg.rules);
  return cfg;
}

adapters::EngineSet make_engines(const PipelineConfig& config) {
  adapters::EngineSet e;
  if (config.translate_adapter == "stub")
    e.translator = std::make_unique<adapters::StubTranslator>(false);
  else if (config.translate_adapter == "stub-reverse")
    e.translator = std::make_unique<adapters::StubTranslator>(true);
  else if (config.translate_adapter == "command")
    e.translator = std::make_unique<adapters::CommandTranslator>(
        env_command(kTranslateCmdEnv, "translate"));
  else
    throw ContractError("unknown translate_adapter \"" +
                        config.translate_adapter + "\"");

  if (config.transliterate_adapter == "stub")
    e.transliterator = std::make_unique<adapters::StubTransliterator>();
  else if (config.transliterate_adapter == "command")
    e.transliterator = std::make_unique<adapters::CommandTransliterator>(
        env_command(kTransliterateCmdEnv, "transliterate"));
  else
    throw ContractError("unknown transliterate_adapter \"" +
                        config.transliterate_adapter + "\"");

  if (config.tts_adapter == "stub")
    e.synthesizer =
        std::make_unique<adapters::StubSynthesizer>(config.tts_sample_rate_hz);
  else if (config.tts_adapter == "command")
    e.synthesizer = std::make_unique<adapters::CommandSynthesizer>(
        env_command(kTtsCmdEnv, "tts"));
  else
    throw ContractError("unknown tts_adapter \"" + config.tts_adapter + "\"");

  if (config.tagger == "punct")
    e.tagger = std::make_unique<adapters::PunctuationTagger>();
  else if (config.tagger == "command")
    e.tagger = std::make_unique<adapters::CommandTagger>(
        env_command(kTaggerCmdEnv, "tagger"));
  else
    throw ContractError("unknown tagger \"" + config.tagger + "\"");
  return e;
}

RunResult run_pipeline(const PipelineConfig& config,
                       adapters::EngineSet& engines) {
  if (config.source_srt.empty() || config.source_audio.empty() ||
      config.output_dir.empty())
    throw ContractError(
        "config needs source_srt, source_audio and output_dir");
  if (config.jobs < 1) throw ContractError("jobs must be at least 1");
  if (!engines.translator || !engines.transliterator || !engines.synthesizer ||
      !engines.tagger)
    throw ContractError("engine set is incomplete");

  // Inputs. Everything is loaded and validated before any stage runs.
  srt::SubtitleTrack track = srt::parse_srt(read_file(config.source_srt));
  std::vector<srt::Violation> violations = srt::validate_track(track);
  if (!violations.empty()) {
    std::string msg = "source track invalid:";
    for (const srt::Violation& v : violations) msg += "\n  " + v.message;
    throw ValidationError(msg);
  }
  audio::AudioBuffer source = audio::load_wav_file(config.source_audio);

  terms::TermLexicon lexicon;
  if (!config.lexicon.empty()) lexicon = terms::load_lexicon_file(config.lexicon);
  std::set<std::string> stopwords = config.stopwords.empty()
                                        ? default_stopwords()
                                        : terms::load_stopwords_file(config.stopwords);
  rhythm::RuleSet rules = config.rules.empty()
                              ? default_rules()
                              : rhythm::load_rule_file(config.rules);

  const std::size_t n = track.cues.size();
  std::vector<std::string> cue_texts(n);
  std::vector<terms::Document> corpus(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string joined;
    for (const std::string& line : track.cues[i].lines) {
      if (!joined.empty()) joined += ' ';
      joined += line;
    }
    cue_texts[i] = std::move(joined);
    corpus[i] = terms::tokenize(cue_texts[i]);
  }

  const analysis::SilenceParams silence_params{
      .threshold_db_rel_peak = config.silence_threshold_db,
      .floor_dbfs = config.silence_floor_db,
      .min_silence_ms = config.min_silence_ms};
  const analysis::SyllableParams syllable_params{
      .frame_ms = config.frame_ms,
      .hop_ms = config.hop_ms,
      .smooth_ms = config.smooth_ms,
      .valley_depth_db = config.valley_depth_db,
      .min_insertable_gap_ms = config.min_insertable_gap_ms,
      .merge_within_ms = config.merge_within_ms};
  const align::PlannerParams planner_params{.snap_radius_ms =
                                                config.snap_radius_ms};
  const align::BandLimits limits{config.band_low, config.band_high};

  std::vector<CueWork> works(n);
  std::vector<std::exception_ptr> errors(n);

  auto process_cue = [&](std::size_t i) {
    const srt::SubtitleCue& cue = track.cues[i];
    CueWork& w = works[i];
    auto stage = [&](const char* name, auto&& fn) -> decltype(fn()) {
      try {
        return fn();
      } catch (const StageError&) {
        throw;
      } catch (const std::exception& e) {
        throw StageError(cue.index, name, e.what());
      }
    };

    std::vector<terms::ResolvedSpan> spans = stage("terms", [&] {
      std::vector<terms::TermCandidate> tr =
          terms::textrank_keywords(corpus[i], stopwords);
      std::vector<terms::TermCandidate> tf =
          terms::rank_tfidf(corpus[i], terms::tfidf_scores(corpus, i));
      std::vector<terms::TermCandidate> lex =
          terms::lexicon_match(corpus[i], lexicon);
      std::vector<terms::CharRange> code = terms::detect_code_spans(cue_texts[i]);
      return terms::resolve_term_actions(corpus[i], tr, tf, lex, code, lexicon,
                                         config.top_k);
    });
    for (const terms::ResolvedSpan& s : spans) {
      w.protected_chars += s.range.end - s.range.begin;
      ++w.protected_spans;
      switch (s.action) {
        case terms::TermAction::keep: ++w.keep_spans; break;
        case terms::TermAction::transliterate: ++w.transliterate_spans; break;
        case terms::TermAction::translate: ++w.translate_spans; break;
      }
    }

    terms::TaggedText tagged = stage(
        "wrap", [&] { return terms::wrap_placeholders(cue_texts[i], spans); });

    std::string translated = stage(
        "translate", [&] { return engines.translator->translate(tagged.text); });

    w.target_text = stage("unwrap", [&] {
      return sanitize_single_line(terms::unwrap_placeholders(
          translated, tagged.side_table,
          [&](const std::string& surface, terms::TermAction action) {
            switch (action) {
              case terms::TermAction::keep:
                return surface;
              case terms::TermAction::transliterate:
                return engines.transliterator->transliterate(surface);
              case terms::TermAction::translate:
                return engines.translator->translate(surface);
            }
            return surface;
          }));
    });
    if (trim(w.target_text).empty())
      throw StageError(cue.index, "translate", "target text is empty");

    w.annotated_text = stage("chunk", [&] {
      std::vector<std::string> toks = split_ws(w.target_text);
      std::vector<std::string> tags = engines.tagger->tag(toks);
      if (tags.size() != toks.size())
        throw Error("tagger returned " + std::to_string(tags.size()) +
                    " tags for " + std::to_string(toks.size()) + " tokens");
      std::vector<rhythm::TaggedToken> tagged_tokens(toks.size());
      for (std::size_t k = 0; k < toks.size(); ++k)
        tagged_tokens[k] = {std::move(toks[k]), tags[k]};
      rhythm::ChunkedText chunked = rhythm::chunk_tokens(
          tagged_tokens, rules, config.max_tokens_per_chunk);
      return rhythm::breaks_to_pause_marks(chunked, config.minor_pause_ms,
                                           config.major_pause_ms);
    });

    w.speech = stage("synthesize", [&] {
      return engines.synthesizer->synthesize(w.annotated_text, config.tts_rate);
    });
    if (w.speech.samples.empty())
      throw StageError(cue.index, "synthesize", "no audio produced");

    w.boundaries = stage("analyze", [&] {
      return analysis::detect_syllable_boundaries(w.speech, syllable_params);
    });

    stage("analyze", [&] {
      audio::AudioBuffer slice =
          audio::slice_ms(source, cue.start_ms, cue.end_ms);
      const TimeMs total = slice.duration_ms();
      std::vector<analysis::SilenceRegion> regions;
      if (slice.samples.size() >=
          audio::ms_to_samples(config.frame_ms, slice.sample_rate_hz)) {
        analysis::FrameEnergy energy =
            analysis::frame_energies(slice, config.frame_ms, config.hop_ms);
        regions = analysis::detect_silences(energy, silence_params);
      }
      // Leading/trailing silence is cue padding, not a pause the speaker
      // took; it is trimmed from the profile rather than transferred.
      TimeMs lead = 0;
      TimeMs tail = 0;
      if (!regions.empty() && regions.front().start_ms == 0) {
        lead = regions.front().end_ms;
        regions.erase(regions.begin());
      }
      if (!regions.empty() && regions.back().end_ms == total) {
        tail = total - regions.back().start_ms;
        regions.pop_back();
      }
      for (analysis::SilenceRegion& r : regions) {
        r.start_ms -= lead;
        r.end_ms -= lead;
      }
      w.profile = align::make_pause_profile(total - lead - tail,
                                            std::move(regions));
      return 0;
    });
  };

  if (config.jobs > 1 && n > 1) {
    std::atomic<std::size_t> next{0};
    std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(config.jobs), n);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t)
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          try {
            process_cue(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (std::thread& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        process_cue(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }

  // Plan and write in cue order, stopping at the first failed cue so every
  // earlier cue's outputs are already on disk when the error surfaces.
  std::size_t good = 0;
  while (good < n && !errors[good]) ++good;

  srt::SubtitleTrack prefix;
  prefix.cues.assign(track.cues.begin(),
                     track.cues.begin() + static_cast<std::ptrdiff_t>(good));
  std::vector<align::PauseProfile> profiles(good);
  std::vector<TimeMs> target_speech(good);
  std::vector<std::vector<analysis::SyllableBoundary>> boundaries(good);
  for (std::size_t i = 0; i < good; ++i) {
    profiles[i] = works[i].profile;
    target_speech[i] = works[i].speech.duration_ms();
    boundaries[i] = works[i].boundaries;
  }
  align::AlignmentPlan plan = align::build_alignment_plan(
      prefix, profiles, target_speech, boundaries, planner_params, limits);

  fs::create_directories(config.output_dir);
  RunResult result;
  for (std::size_t i = 0; i < good; ++i) {
    audio::AudioBuffer rendered =
        align::render_target_audio(works[i].speech, plan.cues[i].insertions);
    char name[32];
    std::snprintf(name, sizeof name, "cue_%04d.wav", track.cues[i].index);
    std::string path = (fs::path(config.output_dir) / name).string();
    audio::save_wav_file(rendered, path);
    result.cue_wav_paths.push_back(std::move(path));
  }
  if (good < n) std::rethrow_exception(errors[good]);

  result.plan = std::move(plan);
  result.plan_path = (fs::path(config.output_dir) / "plan.json").string();
  write_file(result.plan_path, align::plan_to_json(result.plan));

  srt::SubtitleTrack out_track = track;
  for (std::size_t i = 0; i < n; ++i)
    out_track.cues[i].lines = {works[i].target_text};
  result.srt_path = (fs::path(config.output_dir) / "target.srt").string();
  write_file(result.srt_path, srt::serialize_srt(out_track));

  for (std::size_t i = 0; i < n; ++i) {
    result.report.source_chars += cue_texts[i].size();
    result.report.protected_chars += works[i].protected_chars;
    result.report.protected_spans += works[i].protected_spans;
    result.report.keep_spans += works[i].keep_spans;
    result.report.transliterate_spans += works[i].transliterate_spans;
    result.report.translate_spans += works[i].translate_spans;
  }
  for (const align::CueAlignment& a : result.plan.cues)
    result.report.warning_count += a.warnings.size();

  result.report_path = (fs::path(config.output_dir) / "report.txt").string();
  write_file(result.report_path,
             render_report(result.plan, result.report, limits));
  return result;
}

std::string render_report(const align::AlignmentPlan& plan,
                          const RunReport& report,
                          const align::BandLimits& limits) {
  char buf[256];
  std::string out;
  out += "dubbing run report\n";
  out += "==================\n";
  std::snprintf(buf, sizeof buf,
                "cues: %zu | speaking-rate band [%.2f, %.2f]\n\n",
                plan.totals.cue_count, limits.low, limits.high);
  out += buf;
  for (const align::CueAlignment& a : plan.cues) {
    std::snprintf(buf, sizeof buf,
                  "cue %d: ratio %.3f (%s band) | stretch %.3f | "
                  "insertions %zu | warnings %zu\n",
                  a.cue_index, a.duration_ratio, align::band_name(a.band),
                  a.stretch_factor, a.insertions.size(), a.warnings.size());
    out += buf;
    for (const std::string& wmsg : a.warnings) out += "  warning: " + wmsg + "\n";
  }
  std::snprintf(buf, sizeof buf,
                "\ntotals: source video %lld ms -> target audio %lld ms "
                "(inserted silence %lld ms)\n",
                static_cast<long long>(plan.totals.source_video_ms),
                static_cast<long long>(plan.totals.target_audio_ms),
                static_cast<long long>(plan.totals.inserted_silence_ms));
  out += buf;
  std::snprintf(buf, sizeof buf, "cues outside band: %zu of %zu\n",
                plan.totals.cues_outside_band, plan.totals.cue_count);
  out += buf;
  double pct = report.source_chars
                   ? 100.0 * static_cast<double>(report.protected_chars) /
                         static_cast<double>(report.source_chars)
                   : 0.0;
  std::snprintf(buf, sizeof buf,
                "text: %zu chars, protected %zu (%.1f%%) across %zu spans "
                "(keep %zu, transliterate %zu, translate %zu)\n",
                report.source_chars, report.protected_chars, pct,
                report.protected_spans, report.keep_spans,
                report.transliterate_spans, report.translate_spans);
  out += buf;
  std::snprintf(buf, sizeof buf, "planner warnings: %zu\n",
                report.warning_count);
  out += buf;
  return out;
}

namespace {

// 220 Hz test tone with 5 ms fades, used by the demo fixture.
void add_tone(audio::AudioBuffer& buf, TimeMs from_ms, TimeMs to_ms) {
  const std::size_t b = audio::ms_to_samples(from_ms, buf.sample_rate_hz);
  const std::size_t e = audio::ms_to_samples(to_ms, buf.sample_rate_hz);
  const std::size_t fade = audio::ms_to_samples(5, buf.sample_rate_hz);
  const double omega =
      2.0 * std::numbers::pi * 220.0 / static_cast<double>(buf.sample_rate_hz);
  for (std::size_t i = b; i < e && i < buf.samples.size(); ++i) {
    double env = 1.0;
    if (fade > 0) {
      if (i - b < fade)
        env = static_cast<double>(i - b + 1) / static_cast<double>(fade);
      if (e - i <= fade)
        env = std::min(env, static_cast<double>(e - i) /
                                static_cast<double>(fade));
    }
    buf.samples[i] = static_cast<float>(
        0.5 * env * std::sin(omega * static_cast<double>(i - b)));
  }
}

}  // namespace

std::string write_fixture(const std::string& dir) {
  fs::create_directories(dir);

  const std::string srt_text =
      "1\n"
      "00:00:00,000 --> 00:00:04,000\n"
      "We sort the binary search tree now.\n"
      "\n"
      "2\n"
      "00:00:04,500 --> 00:00:09,000\n"
      "Type for (i = 0; i< n-1; i++) a++; inside the loop.\n";
  write_file((fs::path(dir) / "sample.srt").string(), srt_text);

  audio::AudioBuffer wav;
  wav.sample_rate_hz = 16000;
  wav.samples.assign(audio::ms_to_samples(9000, wav.sample_rate_hz), 0.0f);
  add_tone(wav, 0, 1500);      // cue 1 speech
  add_tone(wav, 1900, 4000);   // cue 1 speech after a 400 ms pause
  add_tone(wav, 4500, 6200);   // cue 2 speech
  add_tone(wav, 6500, 9000);   // cue 2 speech after a 300 ms pause
  audio::save_wav_file(wav, (fs::path(dir) / "sample.wav").string());

  write_file((fs::path(dir) / "lexicon.tsv").string(),
             "# term\tdomain\taction\n"
             "binary search tree\tcs\ttransliterate\n"
             "loop\tcs\tkeep\n");
  write_file((fs::path(dir) / "stopwords.txt").string(),
             "a\nan\nand\nare\nas\nat\nbe\nby\nfor\nin\ninside\nis\nit\nof\n"
             "on\nthe\nto\nwe\nnow\n");
  write_file((fs::path(dir) / "rules.tsv").string(),
             "TOK PUNC\n"
             "PUNC\tmajor\n");

  const std::string conf =
      "# demo project\n"
      "source_srt = sample.srt\n"
      "source_audio = sample.wav\n"
      "output_dir = out\n"
      "lexicon = lexicon.tsv\n"
      "stopwords = stopwords.txt\n"
      "rules = rules.tsv\n"
      "source_lang = en\n"
      "target_lang = hi\n"
      "tts_rate = 2.0\n"
      "jobs = 1\n";
  const std::string conf_path = (fs::path(dir) / "isodub.conf").string();
  write_file(conf_path, conf);
  return conf_path;
}

}  // namespace isodub::pipeline
