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

// Synthetic frames and brute-force oracles shared by the test binaries.
// Nothing here calls into the estimation or metric kernels.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mebench/block_model.hpp"
#include "mebench/frame.hpp"
#include "mebench/motion_field.hpp"

namespace mebench::testing {

Frame constant_frame(int width, int height, std::uint8_t value);

/// Independent uniform samples in [0, 255].
Frame noise_frame(int width, int height, std::uint64_t seed);

/// Smooth, aperiodic texture: bilinear interpolation of a random lattice
/// with spacing `cell`, plus a little pixel noise. No two displacements of a
/// block look alike, and the cost surface has a basin around the true shift.
Frame texture_frame(int width, int height, std::uint64_t seed, int cell = 4);

/// target(x, y) = anchor(x + dx, y + dy), edge samples replicated. A block
/// whose displaced copy stays inside the frame is matched exactly by d.
Frame shifted(const Frame& anchor, MotionVector d);

/// Blocks whose window of radius `margin` around them is inside the frame.
bool is_interior(const BlockGrid& grid, int index, int margin);

/// Direct double loop over Frame::at.
std::uint64_t oracle_sad_sum(const Frame& target, const Frame& anchor,
                             BlockOrigin origin, MotionVector d,
                             int block_size);

/// Scratch directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag);
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

void write_bytes(const std::filesystem::path& path,
                 const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

}  // namespace mebench::testing
