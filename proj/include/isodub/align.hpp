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

#include <span>
#include <string>
#include <vector>

#include "isodub/analysis.hpp"
#include "isodub/audio.hpp"
#include "isodub/srt.hpp"
#include "isodub/types.hpp"

namespace isodub::align {

// Pause structure of one source segment: where the speaker breathed and for
// how long. speech_ms + sum of silences == total_ms always.
struct PauseProfile {
  TimeMs total_ms = 0;
  TimeMs speech_ms = 0;
  std::vector<analysis::SilenceRegion> silences;  // disjoint, sorted
};

// Validates the regions (sorted, disjoint, inside [0, total_ms)) and fills
// in speech_ms. Violations throw ContractError.
PauseProfile make_pause_profile(TimeMs total_ms,
                                std::vector<analysis::SilenceRegion> silences);

// One silence to splice into the target speech. at_speech_ms is a position
// in the target speech timeline (before any insertion); snapped_from_ms is
// the ideal proportional point it was snapped away from.
struct SilenceInsertion {
  TimeMs at_speech_ms = 0;
  TimeMs duration_ms = 0;
  TimeMs snapped_from_ms = 0;

  bool operator==(const SilenceInsertion&) const = default;
};

struct PlannerParams {
  TimeMs snap_radius_ms = 500;
};

struct PlanOutcome {
  std::vector<SilenceInsertion> insertions;  // sorted by at_speech_ms
  std::vector<std::string> warnings;
};

// Transfers the source pause structure onto the target speech:
//  - the longest silence goes first (ties: earliest);
//  - its ideal point divides the target segment in the same proportion as
//    the source speech before it divides the source segment;
//  - the point snaps to the nearest insertable syllable boundary within
//    snap_radius_ms (ties: earlier); no boundary in reach skips the silence
//    with a warning;
//  - the inserted duration is the source silence scaled by
//    target_speech_ms / profile.speech_ms, rounded to whole ms (a zero
//    rounding is skipped with a warning);
//  - then the silences before/after recurse on the matching sub-segments.
// Relative order of insertions always matches the source silences.
PlanOutcome plan_silence_insertions(
    const PauseProfile& profile, TimeMs target_speech_ms,
    std::span<const analysis::SyllableBoundary> boundaries,
    const PlannerParams& params = {});

// Splices duration_ms of digital silence at each insertion point. Output
// length equals input length plus the sum of insertions, sample-exact.
// Insertions must be sorted and lie within [0, speech duration]; anything
// else throws ContractError.
audio::AudioBuffer render_target_audio(
    const audio::AudioBuffer& target_speech,
    std::span<const SilenceInsertion> insertions);

// target / source. Zero or negative source throws ContractError.
double compute_stretch(TimeMs source_ms, TimeMs target_ms);

enum class Band { below, within, above };

const char* band_name(Band b);

// The acceptable slowdown window for dubbed video, inclusive on both ends.
struct BandLimits {
  double low = 1.2;
  double high = 1.5;
};

Band classify_duration_ratio(double ratio, const BandLimits& limits = {});

struct CueAlignment {
  int cue_index = 0;
  TimeMs source_video_ms = 0;
  TimeMs target_audio_ms = 0;   // target speech + inserted silences
  TimeMs target_speech_ms = 0;
  TimeMs source_speech_ms = 0;
  double stretch_factor = 1.0;  // target_audio / source_video
  double duration_ratio = 1.0;  // target speech / source speech
  Band band = Band::below;
  std::vector<SilenceInsertion> insertions;
  std::vector<std::string> warnings;
};

struct PlanTotals {
  TimeMs source_video_ms = 0;
  TimeMs target_audio_ms = 0;
  TimeMs inserted_silence_ms = 0;
  std::size_t cue_count = 0;
  std::size_t cues_outside_band = 0;
};

struct AlignmentPlan {
  std::vector<CueAlignment> cues;
  PlanTotals totals;
};

// Plans every cue of a track. The three per-cue lists run parallel to
// track.cues (same length, same order); mismatched lengths throw
// ContractError. source_video_ms is the cue's timespan; the profile is the
// cue audio's pause structure.
AlignmentPlan build_alignment_plan(
    const srt::SubtitleTrack& track,
    const std::vector<PauseProfile>& source_profiles,
    const std::vector<TimeMs>& target_speech_ms,
    const std::vector<std::vector<analysis::SyllableBoundary>>& boundaries,
    const PlannerParams& params = {}, const BandLimits& limits = {});

// Plan JSON: {version, cues:[{index, source_video_ms, target_audio_ms,
// stretch_factor, duration_ratio, band, insertions:[{at_speech_ms,
// duration_ms, snapped_from_ms}], warnings:[...]}], totals}. Deterministic
// byte-for-byte for equal plans.
std::string plan_to_json(const AlignmentPlan& plan);

// Inverse of plan_to_json. Structural problems throw ValidationError.
AlignmentPlan plan_from_json(std::string_view json_text);

// Returns every schema problem found instead of throwing (empty == valid).
std::vector<std::string> validate_plan_json(std::string_view json_text);

}  // namespace isodub::align
