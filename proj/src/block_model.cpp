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

#include "mebench/block_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mebench {

BlockGrid::BlockGrid(int frame_width, int frame_height, int block_size)
    : frame_width_(frame_width),
      frame_height_(frame_height),
      block_size_(block_size),
      cols_(block_size > 0 ? frame_width / block_size : 0),
      rows_(block_size > 0 ? frame_height / block_size : 0) {
  if (block_size < 2) {
    throw std::invalid_argument("block size must be at least 2, got " +
                                std::to_string(block_size));
  }
  if (cols_ < 1 || rows_ < 1) {
    throw std::invalid_argument(
        "frame " + std::to_string(frame_width) + "x" +
        std::to_string(frame_height) + " is smaller than one " +
        std::to_string(block_size) + "x" + std::to_string(block_size) +
        " block");
  }
}

BlockOrigin BlockGrid::origin(int index) const {
  if (index < 0 || index >= block_count()) {
    throw std::out_of_range("block index " + std::to_string(index) +
                            " outside [0, " + std::to_string(block_count()) +
                            ")");
  }
  return {block_size_ * (index % cols_), block_size_ * (index / cols_)};
}

MotionVector DisplacementBounds::clamp(MotionVector d) const {
  return {std::clamp(d.dx, min_dx, max_dx), std::clamp(d.dy, min_dy, max_dy)};
}

DisplacementBounds displacement_bounds(int frame_width, int frame_height,
                                       BlockOrigin origin, int block_size) {
  return {-origin.x, frame_width - block_size - origin.x, -origin.y,
          frame_height - block_size - origin.y};
}

MotionVector clamp_displacement(const BlockGrid& grid, const Frame& frame,
                                BlockOrigin origin, MotionVector d) {
  return displacement_bounds(frame.width(), frame.height(), origin,
                             grid.block_size())
      .clamp(d);
}

PixelBlock extract_block(const Frame& frame, BlockOrigin origin,
                         MotionVector d, int block_size) {
  const int x0 = origin.x + d.dx;
  const int y0 = origin.y + d.dy;
  if (block_size <= 0 || x0 < 0 || y0 < 0 ||
      x0 + block_size > frame.width() || y0 + block_size > frame.height()) {
    throw std::out_of_range(
        "block at (" + std::to_string(x0) + "," + std::to_string(y0) +
        ") size " + std::to_string(block_size) + " exceeds " +
        std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
        " frame");
  }
  PixelBlock block{block_size, {}};
  block.samples.reserve(static_cast<std::size_t>(block_size) * block_size);
  for (int y = 0; y < block_size; ++y) {
    const std::uint8_t* src = frame.row(y0 + y) + x0;
    block.samples.insert(block.samples.end(), src, src + block_size);
  }
  return block;
}

}  // namespace mebench
