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

#include "isodub/align.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "isodub/errors.hpp"

namespace isodub::align {

PauseProfile make_pause_profile(TimeMs total_ms,
                                std::vector<analysis::SilenceRegion> silences) {
  if (total_ms < 0) throw ContractError("make_pause_profile: negative total");
  TimeMs covered = 0;
  TimeMs prev_end = 0;
  for (std::size_t i = 0; i < silences.size(); ++i) {
    const analysis::SilenceRegion& r = silences[i];
    if (r.start_ms < 0 || r.end_ms <= r.start_ms || r.end_ms > total_ms)
      throw ContractError("make_pause_profile: region outside [0, total)");
    if (i && r.start_ms < prev_end)
      throw ContractError("make_pause_profile: regions overlap or unsorted");
    prev_end = r.end_ms;
    covered += r.duration_ms();
  }
  PauseProfile p;
  p.total_ms = total_ms;
  p.speech_ms = total_ms - covered;
  p.silences = std::move(silences);
  return p;
}

namespace {

struct SilenceEntry {
  TimeMs speech_offset;  // source speech elapsed before this silence
  TimeMs duration;
};

class Planner {
 public:
  Planner(std::span<const analysis::SyllableBoundary> boundaries,
          double duration_ratio, TimeMs snap_radius)
      : boundaries_(boundaries),
        ratio_(duration_ratio),
        snap_radius_(snap_radius) {}

  void run(std::vector<SilenceEntry>& entries, TimeMs seg_begin,
           TimeMs seg_len, double tgt_begin, double tgt_len) {
    recurse(entries, 0, entries.size(), seg_begin, seg_len, tgt_begin, tgt_len);
  }

  std::vector<SilenceInsertion> insertions;
  std::vector<std::string> warnings;

 private:
  // Longest silence first; its snapped point splits both timelines, then
  // the silences on each side recurse within their own sub-segments.
  void recurse(std::vector<SilenceEntry>& entries, std::size_t lo,
               std::size_t hi, TimeMs seg_begin, TimeMs seg_len,
               double tgt_begin, double tgt_len) {
    if (lo >= hi) return;
    std::size_t k = lo;
    for (std::size_t i = lo + 1; i < hi; ++i)
      if (entries[i].duration > entries[k].duration) k = i;

    const SilenceEntry& s = entries[k];
    double frac = seg_len > 0
                      ? static_cast<double>(s.speech_offset - seg_begin) /
                            static_cast<double>(seg_len)
                      : 0.0;
    double ideal = tgt_begin + tgt_len * frac;
    TimeMs ideal_ms = std::llround(ideal);
    TimeMs duration = std::llround(static_cast<double>(s.duration) * ratio_);

    // Nearest insertable boundary strictly inside this target segment.
    bool found = false;
    TimeMs best_at = 0;
    TimeMs best_dist = std::numeric_limits<TimeMs>::max();
    for (const analysis::SyllableBoundary& b : boundaries_) {
      if (!b.insertable) continue;
      double at = static_cast<double>(b.at_ms);
      if (at <= tgt_begin || at >= tgt_begin + tgt_len) continue;
      TimeMs dist = std::llabs(b.at_ms - ideal_ms);
      if (dist < best_dist) {
        best_dist = dist;
        best_at = b.at_ms;
        found = true;
      }
    }

    double split = ideal;
    if (!found || best_dist > snap_radius_) {
      warnings.push_back(
          "silence of " + std::to_string(s.duration) +
          " ms skipped: no insertable boundary within " +
          std::to_string(snap_radius_) + " ms of ideal point " +
          std::to_string(ideal_ms) + " ms");
    } else if (duration <= 0) {
      warnings.push_back("silence of " + std::to_string(s.duration) +
                         " ms skipped: scaled duration rounds to zero");
      split = best_at;
    } else {
      insertions.push_back({best_at, duration, ideal_ms});
      split = best_at;
    }

    recurse(entries, lo, k, seg_begin, s.speech_offset - seg_begin, tgt_begin,
            split - tgt_begin);
    recurse(entries, k + 1, hi, s.speech_offset,
            seg_begin + seg_len - s.speech_offset, split,
            tgt_begin + tgt_len - split);
  }

  std::span<const analysis::SyllableBoundary> boundaries_;
  double ratio_;
  TimeMs snap_radius_;
};

}  // namespace

PlanOutcome plan_silence_insertions(
    const PauseProfile& profile, TimeMs target_speech_ms,
    std::span<const analysis::SyllableBoundary> boundaries,
    const PlannerParams& params) {
  if (profile.speech_ms <= 0)
    throw ContractError("plan_silence_insertions: profile has no speech");
  if (target_speech_ms <= 0)
    throw ContractError("plan_silence_insertions: no target speech");
  if (params.snap_radius_ms < 0)
    throw ContractError("plan_silence_insertions: negative snap radius");

  // Source silences in speech-only coordinates.
  std::vector<SilenceEntry> entries;
  entries.reserve(profile.silences.size());
  TimeMs elapsed_silence = 0;
  for (const analysis::SilenceRegion& r : profile.silences) {
    entries.push_back({r.start_ms - elapsed_silence, r.duration_ms()});
    elapsed_silence += r.duration_ms();
  }

  double ratio = static_cast<double>(target_speech_ms) /
                 static_cast<double>(profile.speech_ms);
  Planner planner(boundaries, ratio, params.snap_radius_ms);
  planner.run(entries, 0, profile.speech_ms, 0.0,
              static_cast<double>(target_speech_ms));

  PlanOutcome out;
  out.insertions = std::move(planner.insertions);
  out.warnings = std::move(planner.warnings);
  std::sort(out.insertions.begin(), out.insertions.end(),
            [](const SilenceInsertion& a, const SilenceInsertion& b) {
              return a.at_speech_ms < b.at_speech_ms;
            });
  return out;
}

audio::AudioBuffer render_target_audio(
    const audio::AudioBuffer& target_speech,
    std::span<const SilenceInsertion> insertions) {
  const TimeMs speech_ms = target_speech.duration_ms();
  TimeMs prev = 0;
  std::size_t extra = 0;
  for (const SilenceInsertion& ins : insertions) {
    if (ins.at_speech_ms < prev)
      throw ContractError("render_target_audio: insertions not sorted");
    if (ins.at_speech_ms > speech_ms)
      throw ContractError("render_target_audio: insertion beyond speech end");
    if (ins.duration_ms <= 0)
      throw ContractError("render_target_audio: non-positive insertion");
    prev = ins.at_speech_ms;
    extra += audio::ms_to_samples(ins.duration_ms, target_speech.sample_rate_hz);
  }

  audio::AudioBuffer out;
  out.sample_rate_hz = target_speech.sample_rate_hz;
  out.samples.reserve(target_speech.samples.size() + extra);
  std::size_t cursor = 0;
  for (const SilenceInsertion& ins : insertions) {
    std::size_t at = std::min(
        audio::ms_to_samples(ins.at_speech_ms, target_speech.sample_rate_hz),
        target_speech.samples.size());
    out.samples.insert(out.samples.end(), target_speech.samples.begin() + cursor,
                       target_speech.samples.begin() + at);
    out.samples.insert(
        out.samples.end(),
        audio::ms_to_samples(ins.duration_ms, target_speech.sample_rate_hz),
        0.0f);
    cursor = at;
  }
  out.samples.insert(out.samples.end(), target_speech.samples.begin() + cursor,
                     target_speech.samples.end());
  return out;
}

double compute_stretch(TimeMs source_ms, TimeMs target_ms) {
  if (source_ms <= 0)
    throw ContractError("compute_stretch: source duration must be positive");
  if (target_ms < 0)
    throw ContractError("compute_stretch: negative target duration");
  return static_cast<double>(target_ms) / static_cast<double>(source_ms);
}

const char* band_name(Band b) {
  switch (b) {
    case Band::below:
      return "below";
    case Band::within:
      return "within";
    case Band::above:
      return "above";
  }
  return "?";
}

Band classify_duration_ratio(double ratio, const BandLimits& limits) {
  if (ratio < limits.low) return Band::below;
  if (ratio > limits.high) return Band::above;
  return Band::within;
}

AlignmentPlan build_alignment_plan(
    const srt::SubtitleTrack& track,
    const std::vector<PauseProfile>& source_profiles,
    const std::vector<TimeMs>& target_speech_ms,
    const std::vector<std::vector<analysis::SyllableBoundary>>& boundaries,
    const PlannerParams& params, const BandLimits& limits) {
  const std::size_t n = track.cues.size();
  if (source_profiles.size() != n || target_speech_ms.size() != n ||
      boundaries.size() != n)
    throw ContractError(
        "build_alignment_plan: per-cue lists must match the track");

  AlignmentPlan plan;
  plan.cues.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const srt::SubtitleCue& cue = track.cues[i];
    const PauseProfile& prof = source_profiles[i];

    CueAlignment a;
    a.cue_index = cue.index;
    a.source_video_ms = cue.end_ms - cue.start_ms;
    a.target_speech_ms = target_speech_ms[i];
    a.source_speech_ms = prof.speech_ms;

    if (prof.speech_ms > 0 && a.target_speech_ms > 0) {
      PlanOutcome oc = plan_silence_insertions(prof, a.target_speech_ms,
                                               boundaries[i], params);
      a.insertions = std::move(oc.insertions);
      a.warnings = std::move(oc.warnings);
    } else if (!prof.silences.empty()) {
      a.warnings.push_back("cue has no measurable speech; pauses not transferred");
    }

    TimeMs inserted = 0;
    for (const SilenceInsertion& ins : a.insertions) inserted += ins.duration_ms;
    a.target_audio_ms = a.target_speech_ms + inserted;
    a.stretch_factor = compute_stretch(a.source_video_ms, a.target_audio_ms);
    a.duration_ratio =
        prof.speech_ms > 0 ? static_cast<double>(a.target_speech_ms) /
                                 static_cast<double>(prof.speech_ms)
                           : 0.0;
    a.band = classify_duration_ratio(a.duration_ratio, limits);

    plan.totals.source_video_ms += a.source_video_ms;
    plan.totals.target_audio_ms += a.target_audio_ms;
    plan.totals.inserted_silence_ms += inserted;
    plan.totals.cue_count += 1;
    if (a.band != Band::within) plan.totals.cues_outside_band += 1;
    plan.cues.push_back(std::move(a));
  }
  return plan;
}

namespace {

using ordered_json = nlohmann::ordered_json;

Band band_from_name(const std::string& name) {
  if (name == "below") return Band::below;
  if (name == "within") return Band::within;
  if (name == "above") return Band::above;
  throw ValidationError("plan JSON: unknown band \"" + name + "\"");
}

}  // namespace

std::string plan_to_json(const AlignmentPlan& plan) {
  ordered_json j;
  j["version"] = 1;
  j["cues"] = ordered_json::array();
  for (const CueAlignment& a : plan.cues) {
    ordered_json c;
    c["index"] = a.cue_index;
    c["source_video_ms"] = a.source_video_ms;
    c["target_audio_ms"] = a.target_audio_ms;
    c["target_speech_ms"] = a.target_speech_ms;
    c["source_speech_ms"] = a.source_speech_ms;
    c["stretch_factor"] = a.stretch_factor;
    c["duration_ratio"] = a.duration_ratio;
    c["band"] = band_name(a.band);
    c["insertions"] = ordered_json::array();
    for (const SilenceInsertion& ins : a.insertions) {
      ordered_json v;
      v["at_speech_ms"] = ins.at_speech_ms;
      v["duration_ms"] = ins.duration_ms;
      v["snapped_from_ms"] = ins.snapped_from_ms;
      c["insertions"].push_back(std::move(v));
    }
    c["warnings"] = a.warnings;
    j["cues"].push_back(std::move(c));
  }
  ordered_json t;
  t["source_video_ms"] = plan.totals.source_video_ms;
  t["target_audio_ms"] = plan.totals.target_audio_ms;
  t["inserted_silence_ms"] = plan.totals.inserted_silence_ms;
  t["cues"] = plan.totals.cue_count;
  t["cues_outside_band"] = plan.totals.cues_outside_band;
  j["totals"] = std::move(t);
  return j.dump(2) + "\n";
}

std::vector<std::string> validate_plan_json(std::string_view text) {
  std::vector<std::string> problems;
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    problems.push_back("not valid JSON");
    return problems;
  }
  auto need = [&problems](const ordered_json& obj, const char* key,
                          const char* kind, const std::string& where) -> bool {
    if (!obj.contains(key)) {
      problems.push_back(where + ": missing \"" + key + "\"");
      return false;
    }
    const ordered_json& v = obj.at(key);
    bool ok = false;
    std::string k(kind);
    if (k == "int")
      ok = v.is_number_integer();
    else if (k == "number")
      ok = v.is_number();
    else if (k == "string")
      ok = v.is_string();
    else if (k == "array")
      ok = v.is_array();
    else if (k == "object")
      ok = v.is_object();
    if (!ok)
      problems.push_back(where + ": \"" + key + "\" must be " + kind);
    return ok;
  };

  if (!j.is_object()) {
    problems.push_back("top level must be an object");
    return problems;
  }
  if (need(j, "version", "int", "plan") &&
      j["version"].get<long long>() != 1)
    problems.push_back("plan: unsupported version");
  bool cues_ok = need(j, "cues", "array", "plan");
  if (need(j, "totals", "object", "plan")) {
    const ordered_json& t = j["totals"];
    need(t, "source_video_ms", "int", "totals");
    need(t, "target_audio_ms", "int", "totals");
    need(t, "inserted_silence_ms", "int", "totals");
    need(t, "cues", "int", "totals");
    need(t, "cues_outside_band", "int", "totals");
  }
  if (!cues_ok) return problems;

  std::size_t idx = 0;
  for (const ordered_json& c : j["cues"]) {
    const std::string where = "cue[" + std::to_string(idx++) + "]";
    if (!c.is_object()) {
      problems.push_back(where + ": must be an object");
      continue;
    }
    need(c, "index", "int", where);
    need(c, "source_video_ms", "int", where);
    need(c, "target_audio_ms", "int", where);
    need(c, "stretch_factor", "number", where);
    need(c, "duration_ratio", "number", where);
    if (need(c, "band", "string", where)) {
      std::string b = c["band"].get<std::string>();
      if (b != "below" && b != "within" && b != "above")
        problems.push_back(where + ": unknown band \"" + b + "\"");
    }
    if (need(c, "insertions", "array", where)) {
      std::size_t k = 0;
      for (const ordered_json& v : c["insertions"]) {
        const std::string iw = where + ".insertions[" + std::to_string(k++) + "]";
        if (!v.is_object()) {
          problems.push_back(iw + ": must be an object");
          continue;
        }
        need(v, "at_speech_ms", "int", iw);
        need(v, "duration_ms", "int", iw);
        need(v, "snapped_from_ms", "int", iw);
      }
    }
    if (need(c, "warnings", "array", where)) {
      for (const ordered_json& w : c["warnings"])
        if (!w.is_string())
          problems.push_back(where + ": warnings must be strings");
    }
  }
  return problems;
}

AlignmentPlan plan_from_json(std::string_view text) {
  std::vector<std::string> problems = validate_plan_json(text);
  if (!problems.empty())
    throw ValidationError("plan JSON invalid: " + problems.front() +
                          (problems.size() > 1
                               ? " (+" + std::to_string(problems.size() - 1) +
                                     " more)"
                               : ""));
  ordered_json j = ordered_json::parse(text);
  AlignmentPlan plan;
  for (const ordered_json& c : j["cues"]) {
    CueAlignment a;
    a.cue_index = c["index"].get<int>();
    a.source_video_ms = c["source_video_ms"].get<TimeMs>();
    a.target_audio_ms = c["target_audio_ms"].get<TimeMs>();
    a.stretch_factor = c["stretch_factor"].get<double>();
    a.duration_ratio = c["duration_ratio"].get<double>();
    a.band = band_from_name(c["band"].get<std::string>());
    for (const ordered_json& v : c["insertions"])
      a.insertions.push_back({v["at_speech_ms"].get<TimeMs>(),
                              v["duration_ms"].get<TimeMs>(),
                              v["snapped_from_ms"].get<TimeMs>()});
    for (const ordered_json& w : c["warnings"])
      a.warnings.push_back(w.get<std::string>());
    TimeMs inserted = 0;
    for (const SilenceInsertion& ins : a.insertions) inserted += ins.duration_ms;
    if (c.contains("target_speech_ms") && c["target_speech_ms"].is_number_integer())
      a.target_speech_ms = c["target_speech_ms"].get<TimeMs>();
    else
      a.target_speech_ms = a.target_audio_ms - inserted;
    if (c.contains("source_speech_ms") && c["source_speech_ms"].is_number_integer())
      a.source_speech_ms = c["source_speech_ms"].get<TimeMs>();
    else if (a.duration_ratio > 0)
      a.source_speech_ms = std::llround(a.target_speech_ms / a.duration_ratio);
    plan.cues.push_back(std::move(a));
  }
  const ordered_json& t = j["totals"];
  plan.totals.source_video_ms = t["source_video_ms"].get<TimeMs>();
  plan.totals.target_audio_ms = t["target_audio_ms"].get<TimeMs>();
  plan.totals.inserted_silence_ms = t["inserted_silence_ms"].get<TimeMs>();
  plan.totals.cue_count = t["cues"].get<std::size_t>();
  plan.totals.cues_outside_band = t["cues_outside_band"].get<std::size_t>();
  return plan;
}

}  // namespace isodub::align
