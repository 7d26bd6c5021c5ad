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

#include "testing/synthetic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace mebench::testing {

Frame constant_frame(int width, int height, std::uint8_t value) {
  return Frame(width, height,
               std::vector<std::uint8_t>(
                   static_cast<std::size_t>(width) * height, value));
}

Frame noise_frame(int width, int height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, 255);
  Frame f(width, height);
  for (auto& v : f.luma()) v = static_cast<std::uint8_t>(dist(rng));
  return f;
}

Frame texture_frame(int width, int height, std::uint64_t seed, int cell) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> level(0.0, 255.0);
  std::uniform_real_distribution<double> jitter(-6.0, 6.0);
  const int gw = width / cell + 2;
  const int gh = height / cell + 2;
  std::vector<double> lattice(static_cast<std::size_t>(gw) * gh);
  for (auto& v : lattice) v = level(rng);
  auto node = [&](int gx, int gy) {
    return lattice[static_cast<std::size_t>(gy) * gw + gx];
  };
  Frame f(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double fx = double(x) / cell;
      const double fy = double(y) / cell;
      const int gx = static_cast<int>(fx);
      const int gy = static_cast<int>(fy);
      const double tx = fx - gx;
      const double ty = fy - gy;
      const double top = node(gx, gy) * (1 - tx) + node(gx + 1, gy) * tx;
      const double bot =
          node(gx, gy + 1) * (1 - tx) + node(gx + 1, gy + 1) * tx;
      const double v = top * (1 - ty) + bot * ty + jitter(rng);
      f.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
    }
  }
  return f;
}

Frame shifted(const Frame& anchor, MotionVector d) {
  Frame out(anchor.width(), anchor.height());
  for (int y = 0; y < anchor.height(); ++y) {
    for (int x = 0; x < anchor.width(); ++x) {
      const int sx = std::clamp(x + d.dx, 0, anchor.width() - 1);
      const int sy = std::clamp(y + d.dy, 0, anchor.height() - 1);
      out.at(x, y) = anchor.at(sx, sy);
    }
  }
  return out;
}

bool is_interior(const BlockGrid& grid, int index, int margin) {
  const BlockOrigin o = grid.origin(index);
  return o.x - margin >= 0 && o.y - margin >= 0 &&
         o.x + grid.block_size() + margin <= grid.frame_width() &&
         o.y + grid.block_size() + margin <= grid.frame_height();
}

std::uint64_t oracle_sad_sum(const Frame& target, const Frame& anchor,
                             BlockOrigin origin, MotionVector d,
                             int block_size) {
  std::uint64_t sum = 0;
  for (int y = 0; y < block_size; ++y) {
    for (int x = 0; x < block_size; ++x) {
      const int t = target.at(origin.x + x, origin.y + y);
      const int a = anchor.at(origin.x + d.dx + x, origin.y + d.dy + y);
      sum += static_cast<std::uint64_t>(t > a ? t - a : a - t);
    }
  }
  return sum;
}

TempDir::TempDir(const std::string& tag) {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("mebench_" + tag + "_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_bytes(const std::filesystem::path& path,
                 const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("test fixture write failed");
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mebench::testing
