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
#include <span>
#include <vector>

namespace mebench {

/// One 8-bit luma plane, row-major.
class Frame {
 public:
  Frame() = default;
  /// Zero-filled frame. Throws std::invalid_argument on non-positive size.
  Frame(int width, int height);
  /// Takes ownership of `luma`; its size must equal width * height.
  Frame(int width, int height, std::vector<std::uint8_t> luma);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return luma_.size(); }

  std::uint8_t at(int x, int y) const {
    return luma_[static_cast<std::size_t>(y) * width_ + x];
  }
  std::uint8_t& at(int x, int y) {
    return luma_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::uint8_t* row(int y) const {
    return luma_.data() + static_cast<std::size_t>(y) * width_;
  }
  std::uint8_t* row(int y) {
    return luma_.data() + static_cast<std::size_t>(y) * width_;
  }

  std::span<const std::uint8_t> luma() const { return luma_; }
  std::span<std::uint8_t> luma() { return luma_; }

  bool same_size(const Frame& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> luma_;
};

/// Ordered frames sharing one size.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Frame> frames);

  /// Throws std::invalid_argument if `frame` differs in size from frame 0.
  void push_back(Frame frame);

  std::size_t frame_count() const { return frames_.size(); }
  bool empty() const { return frames_.empty(); }
  int width() const { return frames_.empty() ? 0 : frames_.front().width(); }
  int height() const { return frames_.empty() ? 0 : frames_.front().height(); }

  const Frame& operator[](std::size_t i) const { return frames_[i]; }
  Frame& operator[](std::size_t i) { return frames_[i]; }
  const std::vector<Frame>& frames() const { return frames_; }

  auto begin() const { return frames_.begin(); }
  auto end() const { return frames_.end(); }

 private:
  std::vector<Frame> frames_;
};

}  // namespace mebench
