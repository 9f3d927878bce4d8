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

#include <vector>

#include "isodub/audio.hpp"
#include "isodub/types.hpp"

namespace isodub::analysis {

// Frame-level RMS envelope in dBFS. Frame i covers
// [i*hop_ms, i*hop_ms + frame_ms); values are 20*log10(rms), clamped at
// -120 (digital silence).
struct FrameEnergy {
  int frame_ms = 25;
  int hop_ms = 10;
  TimeMs source_duration_ms = 0;
  std::vector<double> values_dbfs;

  TimeMs frame_start_ms(std::size_t i) const {
    return static_cast<TimeMs>(i) * hop_ms;
  }
};

// Throws ContractError when the buffer is shorter than one frame or the
// frame/hop geometry is invalid (hop must divide into the frame: 0 < hop <=
// frame).
FrameEnergy frame_energies(const audio::AudioBuffer& buf, int frame_ms = 25,
                           int hop_ms = 10);

// Half-open silent region in buffer time.
struct SilenceRegion {
  TimeMs start_ms = 0;
  TimeMs end_ms = 0;

  bool operator==(const SilenceRegion&) const = default;
  TimeMs duration_ms() const { return end_ms - start_ms; }
};

struct SilenceParams {
  // A frame is silent when its level is below max(peak + threshold, floor).
  // The threshold is peak-relative so detection is gain-invariant; the
  // absolute floor exists so an all-silence buffer still classifies as
  // silent (its peak IS the noise floor).
  double threshold_db_rel_peak = -35.0;
  double floor_dbfs = -90.0;
  TimeMs min_silence_ms = 200;
};

// Maximal silent frame runs of at least min_silence_ms, as disjoint sorted
// half-open regions. A run's span reaches the end of its last frame; a run
// touching the final frame extends to the buffer end. Throws ContractError
// on an empty envelope.
std::vector<SilenceRegion> detect_silences(const FrameEnergy& energy,
                                           const SilenceParams& params = {});

// A point between two syllable nuclei where silence can be spliced in.
// gap_to_next_ms is the length of the low-energy span separating the nuclei;
// spans shorter than the coarticulation threshold are kept but flagged
// non-insertable.
struct SyllableBoundary {
  TimeMs at_ms = 0;
  TimeMs gap_to_next_ms = 0;
  bool insertable = false;
};

struct SyllableParams {
  int frame_ms = 25;
  int hop_ms = 10;
  // The dBFS envelope is smoothed with a centered moving average of this
  // width before valley picking.
  TimeMs smooth_ms = 50;
  // A valley qualifies when it sits at least this far below both flanking
  // maxima of the smoothed envelope.
  double valley_depth_db = 6.0;
  // Gaps shorter than this are coarticulated: a boundary is still reported,
  // but marked non-insertable.
  TimeMs min_insertable_gap_ms = 50;
  // Valleys closer than this collapse into the deeper one.
  TimeMs merge_within_ms = 50;
};

// Energy-valley syllable segmentation: one boundary per qualifying valley,
// placed at the center of the sub-threshold span around the valley,
// strictly increasing. Buffers shorter than one frame, or with no
// qualifying valley, yield an empty list.
std::vector<SyllableBoundary> detect_syllable_boundaries(
    const audio::AudioBuffer& buf, const SyllableParams& params = {});

}  // namespace isodub::analysis
