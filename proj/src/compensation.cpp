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

#include "mebench/compensation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mebench {

CompensatedFrame compensate(const Frame& anchor, const MotionField& field) {
  const BlockGrid& grid = field.grid;
  if (grid.frame_width() != anchor.width() ||
      grid.frame_height() != anchor.height()) {
    throw std::invalid_argument("motion field grid does not match the anchor");
  }
  const int blocks = grid.block_count();
  const int bs = grid.block_size();
  for (int m = 0; m < blocks; ++m) {
    const MotionVector d = field.vectors[static_cast<std::size_t>(m)];
    if (!displacement_bounds(grid, grid.origin(m)).contains(d)) {
      throw std::invalid_argument(
          "block " + std::to_string(m) + " vector (" + std::to_string(d.dx) +
          "," + std::to_string(d.dy) + ") leaves the frame");
    }
  }

  CompensatedFrame out{anchor, &field};
#pragma omp parallel for schedule(static)
  for (int m = 0; m < blocks; ++m) {
    const BlockOrigin o = grid.origin(m);
    const MotionVector d = field.vectors[static_cast<std::size_t>(m)];
    for (int y = 0; y < bs; ++y) {
      const std::uint8_t* src = anchor.row(o.y + d.dy + y) + o.x + d.dx;
      std::copy(src, src + bs, out.frame.row(o.y + y) + o.x);
    }
  }
  return out;
}

}  // namespace mebench
