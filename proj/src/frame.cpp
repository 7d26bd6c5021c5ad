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

#include "mebench/frame.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace mebench {

namespace {

void check_dimensions(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("frame dimensions must be positive, got " +
                                std::to_string(width) + "x" +
                                std::to_string(height));
  }
}

}  // namespace

Frame::Frame(int width, int height) : width_(width), height_(height) {
  check_dimensions(width, height);
  luma_.assign(static_cast<std::size_t>(width) * height, 0);
}

Frame::Frame(int width, int height, std::vector<std::uint8_t> luma)
    : width_(width), height_(height), luma_(std::move(luma)) {
  check_dimensions(width, height);
  if (luma_.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("luma holds " + std::to_string(luma_.size()) +
                                " samples, expected " +
                                std::to_string(width * height));
  }
}

Sequence::Sequence(std::vector<Frame> frames) {
  frames_.reserve(frames.size());
  for (auto& f : frames) push_back(std::move(f));
}

void Sequence::push_back(Frame frame) {
  if (!frames_.empty() && !frames_.front().same_size(frame)) {
    throw std::invalid_argument(
        "frame " + std::to_string(frames_.size()) + " is " +
        std::to_string(frame.width()) + "x" + std::to_string(frame.height()) +
        ", sequence is " + std::to_string(width()) + "x" +
        std::to_string(height()));
  }
  frames_.push_back(std::move(frame));
}

}  // namespace mebench
