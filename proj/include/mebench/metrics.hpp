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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mebench/block_model.hpp"
#include "mebench/frame.hpp"

namespace mebench {

/// Un-normalized sum of absolute differences. All cost comparisons use this
/// integer; the normalized value only appears at the reporting boundary.
using SadSum = std::uint32_t;

/// Divisor of the block cost: the block side N, not N*N. Thresholds such as
/// the zero-motion threshold are expressed in normalized units, so this is
/// the only place the convention is fixed.
constexpr int sad_normalizer(int block_size) { return block_size; }

/// Sum of |a - b| over equally sized sample spans.
SadSum sad_sum(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Normalized block cost, sum / N. Throws std::invalid_argument if the blocks
/// differ in side or sample count.
double sad(const PixelBlock& a, const PixelBlock& b);

inline double normalized_sad(SadSum sum, int block_size) {
  return static_cast<double>(sum) / sad_normalizer(block_size);
}

/// True when the normalized cost `sum / N` is strictly below `threshold`.
inline bool cost_below(SadSum sum, double threshold, int block_size) {
  return static_cast<double>(sum) <
         threshold * static_cast<double>(sad_normalizer(block_size));
}

/// Cost between the target block at `origin` and the anchor block at
/// `origin + d`. Unchecked: the displaced block must lie inside `anchor`.
SadSum block_sad(const Frame& target, const Frame& anchor, BlockOrigin origin,
                 MotionVector d, int block_size);

/// An evaluated displacement.
struct Candidate {
  MotionVector mv;
  SadSum cost = 0;
};

/// Strict total order shared by every search: lower cost, then smaller
/// |dx| + |dy|, then raster order of (dy, dx).
inline bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  if (a.mv.l1() != b.mv.l1()) return a.mv.l1() < b.mv.l1();
  if (a.mv.dy != b.mv.dy) return a.mv.dy < b.mv.dy;
  return a.mv.dx < b.mv.dx;
}

struct FramePair {
  const Frame& anchor;
  const Frame& target;
};

/// Per-block memo of evaluated displacements. `evals()` is the number of
/// distinct displacements costed, which is the computation metric.
class EvalCounter {
 public:
  std::optional<SadSum> find(MotionVector d) const;
  void record(MotionVector d, SadSum cost);

  std::size_t evals() const { return memo_.size(); }
  /// Number of cost requests, repeats included.
  std::size_t queries() const { return queries_; }
  void count_query() { ++queries_; }

  /// Best entry under ranks_before, if any.
  std::optional<Candidate> best() const { return best_; }

  void clear();

 private:
  static std::uint64_t key(MotionVector d) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(d.dx)) << 32) |
           static_cast<std::uint32_t>(d.dy);
  }

  std::unordered_map<std::uint64_t, SadSum> memo_;
  std::optional<Candidate> best_;
  std::size_t queries_ = 0;
};

/// Memoized block cost. Fresh displacements are costed and counted; repeats
/// are served from `counter`. Throws std::out_of_range for an illegal `d`.
SadSum sad_at(EvalCounter& counter, const FramePair& frames, BlockOrigin origin,
              MotionVector d, int block_size);

/// Reported PSNR for identical frames.
constexpr double kPsnrCapDb = 100.0;
constexpr double kPeakValue = 255.0;

/// Mean squared luma difference over all pixels. Throws
/// std::invalid_argument on size mismatch.
double mse(const Frame& a, const Frame& b);

/// 10 log10(255^2 / mse), capped at kPsnrCapDb.
double psnr_from_mse(double mse_value);

inline double frame_psnr(const Frame& a, const Frame& b) {
  return psnr_from_mse(mse(a, b));
}

struct PsnrReport {
  std::vector<double> per_frame_db;
  double mean_db = 0.0;
};

/// Per-frame PSNR over frames [first, last) and their mean. Frames are scored
/// in parallel; each frame's value does not depend on scheduling.
PsnrReport psnr(const Sequence& original, const Sequence& compensated,
                std::size_t first, std::size_t last);

inline PsnrReport psnr(const Sequence& original, const Sequence& compensated) {
  return psnr(original, compensated, 0, original.frame_count());
}

}  // namespace mebench
