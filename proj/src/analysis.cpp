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

#include "isodub/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "isodub/errors.hpp"
#include "isodub/kernels.hpp"

namespace isodub::analysis {

FrameEnergy frame_energies(const audio::AudioBuffer& buf, int frame_ms,
                           int hop_ms) {
  if (frame_ms <= 0 || hop_ms <= 0 || hop_ms > frame_ms)
    throw ContractError("frame_energies: need 0 < hop_ms <= frame_ms");
  if (!audio::is_supported_rate(buf.sample_rate_hz))
    throw ContractError("frame_energies: unsupported sample rate");
  const std::size_t frame_len = audio::ms_to_samples(frame_ms, buf.sample_rate_hz);
  const std::size_t hop_len = audio::ms_to_samples(hop_ms, buf.sample_rate_hz);
  if (frame_len == 0 || hop_len == 0)
    throw ContractError("frame_energies: degenerate frame geometry");
  if (buf.samples.size() < frame_len)
    throw ContractError("frame_energies: buffer shorter than one frame");

  const std::size_t count = (buf.samples.size() - frame_len) / hop_len + 1;
  FrameEnergy out;
  out.frame_ms = frame_ms;
  out.hop_ms = hop_ms;
  out.source_duration_ms = buf.duration_ms();
  out.values_dbfs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double ss = kernels::sum_squares(buf.samples.data() + i * hop_len, frame_len);
    double mean = ss / static_cast<double>(frame_len);
    double db = mean > 0.0 ? 10.0 * std::log10(mean) : -120.0;
    out.values_dbfs.push_back(std::max(db, -120.0));
  }
  return out;
}

std::vector<SilenceRegion> detect_silences(const FrameEnergy& energy,
                                           const SilenceParams& params) {
  if (energy.values_dbfs.empty())
    throw ContractError("detect_silences: empty envelope");
  const std::vector<double>& v = energy.values_dbfs;
  const std::size_t n = v.size();
  const double peak = *std::max_element(v.begin(), v.end());
  const double cut = std::max(peak + params.threshold_db_rel_peak,
                              params.floor_dbfs);

  std::vector<SilenceRegion> regions;
  std::size_t i = 0;
  while (i < n) {
    if (v[i] >= cut) {
      ++i;
      continue;
    }
    std::size_t first = i;
    while (i + 1 < n && v[i + 1] < cut) ++i;
    std::size_t last = i;
    ++i;
    SilenceRegion r;
    r.start_ms = energy.frame_start_ms(first);
    r.end_ms = (last + 1 == n)
                   ? energy.source_duration_ms
                   : energy.frame_start_ms(last) + energy.frame_ms;
    regions.push_back(r);
  }

  // With frame_ms > 2*hop_ms a run's tail can reach past the next run's
  // head; clamp so the half-open regions stay disjoint.
  for (std::size_t k = 0; k + 1 < regions.size(); ++k)
    regions[k].end_ms = std::min(regions[k].end_ms, regions[k + 1].start_ms);

  std::vector<SilenceRegion> out;
  for (const SilenceRegion& r : regions)
    if (r.duration_ms() >= params.min_silence_ms) out.push_back(r);
  return out;
}

namespace {

// Equal-valued neighbors collapse so plateaus act as single extrema.
struct PlateauRun {
  double value;
  std::size_t first_frame;
  std::size_t last_frame;
};

struct ValleyCandidate {
  TimeMs at_ms;
  TimeMs gap_ms;
  double valley_dbfs;
  std::size_t span_first;
  std::size_t span_last;
};

}  // namespace

std::vector<SyllableBoundary> detect_syllable_boundaries(
    const audio::AudioBuffer& buf, const SyllableParams& p) {
  if (p.frame_ms <= 0 || p.hop_ms <= 0 || p.hop_ms > p.frame_ms ||
      p.valley_depth_db <= 0.0 || p.smooth_ms < 0)
    throw ContractError("detect_syllable_boundaries: invalid parameters");
  const std::size_t frame_len =
      audio::ms_to_samples(p.frame_ms, buf.sample_rate_hz);
  if (frame_len == 0 || buf.samples.size() < frame_len) return {};

  FrameEnergy fe = frame_energies(buf, p.frame_ms, p.hop_ms);
  const std::vector<double>& raw = fe.values_dbfs;
  const std::size_t n = raw.size();

  // Centered moving average over ~smooth_ms of frames.
  std::size_t half = 0;
  if (p.smooth_ms > p.hop_ms)
    half = static_cast<std::size_t>((p.smooth_ms / p.hop_ms) / 2);
  std::vector<double> smooth(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lo = i >= half ? i - half : 0;
    std::size_t hi = std::min(n - 1, i + half);
    double acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) acc += raw[j];
    smooth[i] = acc / static_cast<double>(hi - lo + 1);
  }

  std::vector<PlateauRun> runs;
  for (std::size_t i = 0; i < n; ++i) {
    if (!runs.empty() && smooth[i] == runs.back().value)
      runs.back().last_frame = i;
    else
      runs.push_back({smooth[i], i, i});
  }

  std::vector<std::size_t> minima;
  for (std::size_t k = 1; k + 1 < runs.size(); ++k)
    if (runs[k].value < runs[k - 1].value && runs[k].value < runs[k + 1].value)
      minima.push_back(k);
  if (minima.empty()) return {};

  std::vector<ValleyCandidate> cands;
  for (std::size_t m = 0; m < minima.size(); ++m) {
    const std::size_t k = minima[m];
    // Flanking maxima live strictly between this valley and its neighbors
    // (or the series ends).
    const std::size_t left_lo = (m == 0) ? 0 : minima[m - 1] + 1;
    const std::size_t right_hi =
        (m + 1 < minima.size()) ? minima[m + 1] : runs.size();
    double left_max = runs[left_lo].value;
    for (std::size_t j = left_lo; j < k; ++j)
      left_max = std::max(left_max, runs[j].value);
    double right_max = runs[k + 1].value;
    for (std::size_t j = k + 1; j < right_hi; ++j)
      right_max = std::max(right_max, runs[j].value);

    const double flank = std::min(left_max, right_max);
    if (flank - runs[k].value < p.valley_depth_db) continue;
    const double span_cut = flank - p.valley_depth_db;

    // The measurable gap is the sub-threshold span of the raw envelope
    // around the valley.
    std::size_t seed = runs[k].first_frame;
    for (std::size_t j = runs[k].first_frame; j <= runs[k].last_frame; ++j)
      if (raw[j] < raw[seed]) seed = j;
    std::size_t j0 = seed, j1 = seed;
    if (raw[seed] < span_cut) {
      while (j0 > 0 && raw[j0 - 1] < span_cut) --j0;
      while (j1 + 1 < n && raw[j1 + 1] < span_cut) ++j1;
    }
    ValleyCandidate c;
    c.span_first = j0;
    c.span_last = j1;
    TimeMs span_start = fe.frame_start_ms(j0);
    TimeMs span_end = fe.frame_start_ms(j1) + p.frame_ms;
    c.gap_ms = span_end - span_start;
    c.at_ms = (span_start + span_end) / 2;
    c.valley_dbfs = runs[k].value;
    cands.push_back(c);
  }

  std::sort(cands.begin(), cands.end(),
            [](const ValleyCandidate& a, const ValleyCandidate& b) {
              return a.at_ms < b.at_ms;
            });

  // Overlapping or near-coincident valleys collapse into the deeper one.
  std::vector<ValleyCandidate> merged;
  for (const ValleyCandidate& c : cands) {
    if (!merged.empty()) {
      ValleyCandidate& b = merged.back();
      bool overlap = c.span_first <= b.span_last;
      if (overlap || c.at_ms <= b.at_ms ||
          c.at_ms - b.at_ms < p.merge_within_ms) {
        if (c.valley_dbfs < b.valley_dbfs) b = c;
        continue;
      }
    }
    merged.push_back(c);
  }

  std::vector<SyllableBoundary> out;
  out.reserve(merged.size());
  for (const ValleyCandidate& c : merged)
    out.push_back({c.at_ms, c.gap_ms, c.gap_ms >= p.min_insertable_gap_ms});
  return out;
}

}  // namespace isodub::analysis
