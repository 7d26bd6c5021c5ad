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

#include <cstdint>
#include <vector>

#include "mebench/block_model.hpp"

namespace mebench {

/// Settings shared by all block matchers.
struct EstimatorConfig {
  int block_size = 16;
  /// Search window half-width P for ES, DS and ARPS (|dx|, |dy| <= P).
  int search_range = 7;
  /// Zero-motion threshold, in normalized cost units. A block whose
  /// co-located cost is strictly below it is declared static.
  double zmp_threshold = 0.0;
  /// Run the zero-motion test in front of DS as well.
  bool ds_zmp = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Per-block output of one estimation pass, raster order.
struct MotionField {
  explicit MotionField(BlockGrid g)
      : grid(g),
        vectors(static_cast<std::size_t>(g.block_count())),
        evals(static_cast<std::size_t>(g.block_count()), 0),
        static_flags(static_cast<std::size_t>(g.block_count()), 0) {}

  BlockGrid grid;
  std::vector<MotionVector> vectors;
  std::vector<std::uint32_t> evals;
  std::vector<std::uint8_t> static_flags;

  std::uint64_t total_evals() const;
  double avg_evals() const;
  double static_fraction() const;

  friend bool operator==(const MotionField&, const MotionField&) = default;
};

}  // namespace mebench
