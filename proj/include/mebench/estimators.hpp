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
#include <string>
#include <string_view>
#include <vector>

#include "mebench/block_model.hpp"
#include "mebench/frame.hpp"
#include "mebench/metrics.hpp"
#include "mebench/motion_field.hpp"
#include "mebench/pso_zmp.hpp"

namespace mebench {

enum class Algorithm { kES, kDS, kARPS, kPsoZmp };

/// Accepts "es", "ds", "arps", "pso-zmp" (case-insensitive). Throws
/// UsageError otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algo);

/// Whether the algorithm runs the zero-motion test under `config`.
bool uses_zmp(Algorithm algo, const EstimatorConfig& config);

/// Full search of the (2P+1)^2 window intersected with the frame.
MotionVector es_search(const FramePair& frames, BlockOrigin origin,
                       const EstimatorConfig& config, EvalCounter& counter);

/// Large diamond (radius 2) until the centre wins, then one small diamond.
MotionVector ds_search(const FramePair& frames, BlockOrigin origin,
                       const EstimatorConfig& config, EvalCounter& counter);

/// Zero-motion test, then an adaptive rood sized by the left neighbour's
/// vector (arm 2 without one), then unit-rood refinement until the centre
/// wins.
MotionVector arps_search(const FramePair& frames, BlockOrigin origin,
                         const EstimatorConfig& config, EvalCounter& counter,
                         std::optional<MotionVector> left_neighbor_mv);

/// One motion field for `target` against `anchor`. ES blocks are searched in
/// parallel; the other algorithms walk blocks in raster order.
MotionField estimate(Algorithm algo, const Frame& anchor, const Frame& target,
                     const EstimatorConfig& config, const PsoConfig& pso = {});

/// Generator seed used for the pair whose target is frame `target_index`.
inline std::uint64_t pair_seed(std::uint64_t seed, std::size_t target_index) {
  return seed ^ static_cast<std::uint64_t>(target_index);
}

/// Fields for every consecutive pair (k-1 anchor, k target), k = 1..K-1.
/// Pairs run in parallel; result k-1 belongs to target k and is seeded with
/// pair_seed(pso.seed, k), so output does not depend on scheduling.
std::vector<MotionField> estimate_sequence(Algorithm algo,
                                           const Sequence& sequence,
                                           const EstimatorConfig& config,
                                           const PsoConfig& pso = {});

}  // namespace mebench
