// Copyright 2026 The mebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mebench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mebench {

SadSum sad_sum(std::span<const std::uint8_t> a,
               std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("sad over spans of " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " samples");
  }
  SadSum sum = 0;
#pragma omp simd reduction(+ : sum)
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += static_cast<SadSum>(std::abs(int{a[i]} - int{b[i]}));
  }
  return sum;
}

double sad(const PixelBlock& a, const PixelBlock& b) {
  if (a.side != b.side || a.samples.size() != b.samples.size() ||
      a.samples.size() != static_cast<std::size_t>(a.side) * a.side) {
    throw std::invalid_argument("sad over mismatched blocks (" +
                                std::to_string(a.side) + " vs " +
                                std::to_string(b.side) + ")");
  }
  return normalized_sad(sad_sum(a.samples, b.samples), a.side);
}

SadSum block_sad(const Frame& target, const Frame& anchor, BlockOrigin origin,
                 MotionVector d, int block_size) {
  SadSum sum = 0;
  for (int y = 0; y < block_size; ++y) {
    const std::uint8_t* t = target.row(origin.y + y) + origin.x;
    const std::uint8_t* a = anchor.row(origin.y + d.dy + y) + origin.x + d.dx;
#pragma omp simd reduction(+ : sum)
    for (int x = 0; x < block_size; ++x) {
      sum += static_cast<SadSum>(std::abs(int{t[x]} - int{a[x]}));
    }
  }
  return sum;
}

std::optional<SadSum> EvalCounter::find(MotionVector d) const {
  const auto it = memo_.find(key(d));
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void EvalCounter::record(MotionVector d, SadSum cost) {
  if (!memo_.emplace(key(d), cost).second) return;
  const Candidate c{d, cost};
  if (!best_ || ranks_before(c, *best_)) best_ = c;
}

void EvalCounter::clear() {
  memo_.clear();
  best_.reset();
  queries_ = 0;
}

SadSum sad_at(EvalCounter& counter, const FramePair& frames, BlockOrigin origin,
              MotionVector d, int block_size) {
  counter.count_query();
  if (const auto hit = counter.find(d)) return *hit;
  const auto bounds = displacement_bounds(frames.anchor.width(),
                                          frames.anchor.height(), origin,
                                          block_size);
  if (!bounds.contains(d) || origin.x < 0 || origin.y < 0 ||
      origin.x + block_size > frames.target.width() ||
      origin.y + block_size > frames.target.height()) {
    throw std::out_of_range("displacement (" + std::to_string(d.dx) + "," +
                            std::to_string(d.dy) + ") leaves the frame for block at (" +
                            std::to_string(origin.x) + "," +
                            std::to_string(origin.y) + ")");
  }
  const SadSum cost =
      block_sad(frames.target, frames.anchor, origin, d, block_size);
  counter.record(d, cost);
  return cost;
}

double mse(const Frame& a, const Frame& b) {
  if (!a.same_size(b)) {
    throw std::invalid_argument(
        "mse over " + std::to_string(a.width()) + "x" +
        std::to_string(a.height()) + " and " + std::to_string(b.width()) + "x" +
        std::to_string(b.height()) + " frames");
  }
  const auto pa = a.luma();
  const auto pb = b.luma();
  std::uint64_t sum = 0;
#pragma omp simd reduction(+ : sum)
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int diff = int{pa[i]} - int{pb[i]};
    sum += static_cast<std::uint64_t>(diff * diff);
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr_from_mse(double mse_value) {
  if (mse_value <= 0.0) return kPsnrCapDb;
  return std::min(kPsnrCapDb,
                  10.0 * std::log10(kPeakValue * kPeakValue / mse_value));
}

PsnrReport psnr(const Sequence& original, const Sequence& compensated,
                std::size_t first, std::size_t last) {
  if (original.width() != compensated.width() ||
      original.height() != compensated.height()) {
    throw std::invalid_argument("psnr over sequences of different frame size");
  }
  if (first > last || last > original.frame_count() ||
      last > compensated.frame_count()) {
    throw std::invalid_argument("psnr frame range [" + std::to_string(first) +
                                ", " + std::to_string(last) +
                                ") exceeds sequence length");
  }
  PsnrReport report;
  report.per_frame_db.resize(last - first);
  const auto n = static_cast<std::ptrdiff_t>(last - first);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = first + static_cast<std::size_t>(i);
    report.per_frame_db[static_cast<std::size_t>(i)] =
        frame_psnr(original[k], compensated[k]);
  }
  double total = 0.0;
  for (double v : report.per_frame_db) total += v;
  report.mean_db = n > 0 ? total / static_cast<double>(n) : 0.0;
  return report;
}

}  // namespace mebench
