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
#include <cstdlib>
#include <vector>

#include "mebench/frame.hpp"

namespace mebench {

/// Integer-pel displacement. A block at origin `o` in the target frame is
/// matched against the anchor frame at `o + (dx, dy)`.
struct MotionVector {
  int dx = 0;
  int dy = 0;

  int l1() const { return std::abs(dx) + std::abs(dy); }
  friend bool operator==(const MotionVector&, const MotionVector&) = default;
  friend MotionVector operator+(MotionVector a, MotionVector b) {
    return {a.dx + b.dx, a.dy + b.dy};
  }
};

struct BlockOrigin {
  int x = 0;
  int y = 0;
  friend bool operator==(const BlockOrigin&, const BlockOrigin&) = default;
};

/// Raster partition of a frame into square, non-overlapping blocks. Pixels
/// right of cols * block_size or below rows * block_size are not covered.
class BlockGrid {
 public:
  /// Throws std::invalid_argument if block_size < 2 or the frame is smaller
  /// than one block in either direction.
  BlockGrid(int frame_width, int frame_height, int block_size = 16);

  int block_size() const { return block_size_; }
  int cols() const { return cols_; }
  int rows() const { return rows_; }
  int block_count() const { return cols_ * rows_; }
  int frame_width() const { return frame_width_; }
  int frame_height() const { return frame_height_; }

  /// Top-left corner of block `index` (raster order). Throws
  /// std::out_of_range for an invalid index.
  BlockOrigin origin(int index) const;

  int col_of(int index) const { return index % cols_; }
  int row_of(int index) const { return index / cols_; }

  friend bool operator==(const BlockGrid&, const BlockGrid&) = default;

 private:
  int frame_width_;
  int frame_height_;
  int block_size_;
  int cols_;
  int rows_;
};

/// Inclusive range of displacements that keep a block inside the frame.
struct DisplacementBounds {
  int min_dx;
  int max_dx;
  int min_dy;
  int max_dy;

  bool contains(MotionVector d) const {
    return d.dx >= min_dx && d.dx <= max_dx && d.dy >= min_dy &&
           d.dy <= max_dy;
  }
  /// Component-wise clamp, i.e. the L-infinity nearest legal displacement.
  MotionVector clamp(MotionVector d) const;
};

DisplacementBounds displacement_bounds(int frame_width, int frame_height,
                                       BlockOrigin origin, int block_size);

inline DisplacementBounds displacement_bounds(const BlockGrid& grid,
                                              BlockOrigin origin) {
  return displacement_bounds(grid.frame_width(), grid.frame_height(), origin,
                             grid.block_size());
}

MotionVector clamp_displacement(const BlockGrid& grid, const Frame& frame,
                                BlockOrigin origin, MotionVector d);

/// Square block of samples, row-major.
struct PixelBlock {
  int side = 0;
  std::vector<std::uint8_t> samples;

  friend bool operator==(const PixelBlock&, const PixelBlock&) = default;
};

/// Copies the block at `origin + d`. Throws std::out_of_range if any part of
/// the displaced block would fall outside the frame; callers clamp first.
PixelBlock extract_block(const Frame& frame, BlockOrigin origin,
                         MotionVector d, int block_size);

}  // namespace mebench
