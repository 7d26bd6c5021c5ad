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

#include "mebench/metrics.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "testing/synthetic.hpp"

namespace mebench {
namespace {

PixelBlock filled(int side, std::uint8_t v) {
  return {side, std::vector<std::uint8_t>(static_cast<std::size_t>(side) * side, v)};
}

PixelBlock random_block(int side, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 255);
  PixelBlock b{side, {}};
  for (int i = 0; i < side * side; ++i) b.samples.push_back(std::uint8_t(d(rng)));
  return b;
}

TEST(Sad, Examples) {
  EXPECT_EQ(sad(filled(16, 40), filled(16, 40)), 0.0);
  // 256 pixels differing by 1, divided by N = 16.
  EXPECT_EQ(sad(filled(16, 10), filled(16, 11)), 16.0);
  EXPECT_EQ(sad(PixelBlock{2, {0, 0, 0, 0}}, PixelBlock{2, {10, 0, 0, 0}}), 5.0);
}

TEST(Sad, SizeMismatchIsError) {
  EXPECT_THROW(sad(filled(16, 0), filled(8, 0)), std::invalid_argument);
  EXPECT_THROW(sad_sum(std::vector<std::uint8_t>(3), std::vector<std::uint8_t>(4)),
               std::invalid_argument);
}

TEST(Sad, SymmetryZeroAndTriangle) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_block(16, rng);
    const auto b = random_block(16, rng);
    const auto c = random_block(16, rng);
    ASSERT_EQ(sad(a, b), sad(b, a));
    ASSERT_EQ(sad(a, a), 0.0);
    const auto ab = sad_sum(a.samples, b.samples);
    const auto bc = sad_sum(b.samples, c.samples);
    const auto ac = sad_sum(a.samples, c.samples);
    ASSERT_LE(ac, ab + bc);
  }
}

TEST(BlockSad, AgreesWithOracle) {
  const Frame anchor = testing::noise_frame(64, 48, 11);
  const Frame target = testing::noise_frame(64, 48, 12);
  const BlockGrid grid(64, 48, 16);
  for (int m = 0; m < grid.block_count(); ++m) {
    const BlockOrigin o = grid.origin(m);
    const auto b = displacement_bounds(grid, o);
    for (int dy = b.min_dy; dy <= b.max_dy; dy += 3) {
      for (int dx = b.min_dx; dx <= b.max_dx; dx += 5) {
        ASSERT_EQ(block_sad(target, anchor, o, {dx, dy}, 16),
                  testing::oracle_sad_sum(target, anchor, o, {dx, dy}, 16));
      }
    }
  }
}

TEST(CostBelow, ComparesAgainstNormalizedThreshold) {
  // Normalized cost = sum / 16; threshold 384 corresponds to sum 6144.
  EXPECT_TRUE(cost_below(6143, 384.0, 16));
  EXPECT_FALSE(cost_below(6144, 384.0, 16));
  EXPECT_FALSE(cost_below(0, 0.0, 16));
}

TEST(RanksBefore, CostThenLengthThenRaster) {
  EXPECT_TRUE(ranks_before({{5, 5}, 1}, {{0, 0}, 2}));
  EXPECT_TRUE(ranks_before({{0, 1}, 3}, {{1, 1}, 3}));
  EXPECT_TRUE(ranks_before({{1, -1}, 3}, {{-1, 1}, 3}));  // dy first
  EXPECT_TRUE(ranks_before({{-1, 0}, 3}, {{1, 0}, 3}));
  EXPECT_FALSE(ranks_before({{1, 0}, 3}, {{1, 0}, 3}));
}

TEST(SadAt, MemoizesRepeatedQueries) {
  const Frame anchor = testing::noise_frame(64, 48, 1);
  const Frame target = testing::noise_frame(64, 48, 2);
  const FramePair pair{anchor, target};
  EvalCounter counter;
  const auto first = sad_at(counter, pair, {16, 16}, {2, -1}, 16);
  const auto second = sad_at(counter, pair, {16, 16}, {2, -1}, 16);
  EXPECT_EQ(first, second);
  EXPECT_EQ(counter.evals(), 1u);
  EXPECT_EQ(counter.queries(), 2u);
}

TEST(SadAt, CountsDistinctDisplacements) {
  const Frame anchor = testing::noise_frame(64, 48, 1);
  const Frame target = testing::noise_frame(64, 48, 2);
  const FramePair pair{anchor, target};
  EvalCounter counter;
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  std::size_t last = 0;
  for (int k = 0; k < 100; ++k) {
    sad_at(counter, pair, {16, 16}, {d(rng), d(rng)}, 16);
    ASSERT_GE(counter.evals(), last);
    ASSERT_LE(counter.evals(), counter.queries());
    last = counter.evals();
  }
  EvalCounter fresh;
  for (int k = 0; k < 7; ++k) sad_at(fresh, pair, {16, 16}, {k - 3, 0}, 16);
  EXPECT_EQ(fresh.evals(), 7u);
}

TEST(SadAt, ShiftedFrameHasZeroCostAtShift) {
  const Frame anchor = testing::noise_frame(64, 48, 9);
  const Frame target = testing::shifted(anchor, {3, 0});
  EvalCounter counter;
  EXPECT_EQ(sad_at(counter, {anchor, target}, {16, 16}, {3, 0}, 16), 0u);
  EXPECT_GT(sad_at(counter, {anchor, target}, {16, 16}, {0, 0}, 16), 0u);
}

TEST(SadAt, IllegalDisplacementIsError) {
  const Frame f(64, 48);
  EvalCounter counter;
  EXPECT_THROW(sad_at(counter, {f, f}, {0, 0}, {-1, 0}, 16), std::out_of_range);
  EXPECT_EQ(counter.evals(), 0u);
}

TEST(Psnr, IdenticalFramesAreCapped) {
  Sequence a;
  a.push_back(testing::noise_frame(16, 16, 1));
  a.push_back(testing::noise_frame(16, 16, 2));
  const auto r = psnr(a, a);
  ASSERT_EQ(r.per_frame_db.size(), 2u);
  EXPECT_EQ(r.per_frame_db[0], 100.0);
  EXPECT_EQ(r.mean_db, 100.0);
}

TEST(Psnr, UniformOffsetOfSixteen) {
  Sequence a, b;
  a.push_back(testing::constant_frame(32, 32, 100));
  b.push_back(testing::constant_frame(32, 32, 116));
  // MSE = 256, PSNR = 10 log10(65025 / 256) = 24.04840...
  const auto r = psnr(a, b);
  EXPECT_NEAR(r.per_frame_db[0], 24.0484, 1e-4);
  EXPECT_DOUBLE_EQ(r.per_frame_db[0], 10.0 * std::log10(65025.0 / 256.0));
}

TEST(Psnr, StrictlyDecreasingInMse) {
  double prev = psnr_from_mse(1e-3);
  for (double m = 0.01; m < 5000.0; m *= 1.7) {
    const double cur = psnr_from_mse(m);
    ASSERT_LT(cur, prev) << m;
    prev = cur;
  }
}

TEST(Psnr, RangeAndDimensionChecks) {
  Sequence a, b;
  a.push_back(Frame(16, 16));
  b.push_back(Frame(16, 8));
  EXPECT_THROW(psnr(a, b), std::invalid_argument);
  EXPECT_THROW(psnr(a, a, 0, 2), std::invalid_argument);
}

}  // namespace
}  // namespace mebench
