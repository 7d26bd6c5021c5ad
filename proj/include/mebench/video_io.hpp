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
#include <filesystem>
#include <optional>

#include "mebench/frame.hpp"

namespace mebench {

/// Chroma layout of a headerless planar file. Chroma is skipped, never kept.
enum class RawChroma { k420, k400 };

/// Reads every frame (or the first `max_frames`) of a YUV4MPEG2 stream and
/// keeps the luma planes. Accepts 4:2:0 variants and mono.
///
/// Throws IoError if the file cannot be opened, FormatError on a malformed
/// header (the message names the token) or a truncated frame (the message
/// names the frame index).
Sequence load_y4m(const std::filesystem::path& path,
                  std::optional<std::size_t> max_frames = std::nullopt);

/// Reads consecutive headerless frames of `width` x `height`.
///
/// Stops after `max_frames` if given. Otherwise the file must hold a whole
/// number of frames: leftover bytes raise FormatError, as does a file with
/// no complete frame.
Sequence load_raw_yuv(const std::filesystem::path& path, int width, int height,
                      std::optional<std::size_t> max_frames = std::nullopt,
                      RawChroma chroma = RawChroma::k420);

/// Bytes per frame for a raw file: luma plus subsampled chroma.
std::size_t raw_frame_bytes(int width, int height, RawChroma chroma);

/// Binary PGM (P5, maxval 255).
void write_pgm(const Frame& frame, const std::filesystem::path& path);
Frame read_pgm(const std::filesystem::path& path);

/// Writes a mono (Cmono) YUV4MPEG2 stream; used for exporting reconstructions.
void write_y4m(const Sequence& sequence, const std::filesystem::path& path,
               int fps_num = 30, int fps_den = 1);

}  // namespace mebench
