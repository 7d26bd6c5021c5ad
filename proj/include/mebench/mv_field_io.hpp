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

#include <filesystem>
#include <string>
#include <string_view>

#include "mebench/motion_field.hpp"

namespace mebench {

// Text format, one record per line:
//
//   MVF v1 <cols> <rows> <block_size>
//   <dx> <dy> <evals> <static 0|1>      (rows * cols lines, raster order)
//
// Only the tiled grid is stored. A parsed field's frame size is
// cols * block_size by rows * block_size.

std::string format_mv_field(const MotionField& field);

/// Throws FormatError naming the offending line.
MotionField parse_mv_field(std::string_view text);

void dump_mv_field(const MotionField& field, const std::filesystem::path& path);
MotionField load_mv_field(const std::filesystem::path& path);

/// Equality over what the format stores: grid shape, vectors, counts, flags.
bool same_blocks(const MotionField& a, const MotionField& b);

}  // namespace mebench
