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

// Particle-swarm block matching with zero-motion prejudgment.
//
// Per block, in raster order:
//   1. cost the zero displacement; below the threshold the block is static;
//   2. pick an initialization pattern from the block's position (B for the
//      first block, C for the bottom-left block, D for other left-column
//      blocks, A elsewhere);
//   3. for pattern A, centre the pattern on the left neighbour's vector and
//      also offer that vector as an initial global-best candidate;
//   4. run a fixed number of synchronous PSO iterations with linearly
//      decaying inertia and velocity clamping.
//
// Particle state is continuous. Positions are rounded half away from zero
// only to cost them and to report the result. Random numbers come from one
// mt19937_64 stream per estimation call; each iteration draws, for each
// particle in ascending order, r1 and r2 for x followed by r1 and r2 for y.
// A draw is (engine() >> 11) * 2^-53, uniform on [0, 1).

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mebench/block_model.hpp"
#include "mebench/frame.hpp"
#include "mebench/metrics.hpp"
#include "mebench/motion_field.hpp"

namespace mebench {

struct PsoConfig {
  int particles = 8;
  int iterations = 5;
  double w_start = 0.9;
  double w_end = 0.4;
  double c1 = 2.0;
  double c2 = 2.0;
  double v_max = 5.0;
  std::uint64_t seed = 0;
  /// Cost the predicted vector and use it as an initial global best. When
  /// off, the prediction only recentres pattern A.
  bool seed_prediction = true;

  void validate() const;
};

/// w(t) = w_start - (w_start - w_end) * t / (T - 1); w_start when T == 1.
double inertia_weight(const PsoConfig& config, int iteration);

enum class InitPattern : char { A = 'A', B = 'B', C = 'C', D = 'D' };

/// Throws std::invalid_argument for anything but 'A'..'D'.
InitPattern parse_pattern(char kind);

/// Eight initial positions (before clamping), translated by `center`.
std::array<MotionVector, 8> init_pattern(InitPattern kind, MotionVector center);

InitPattern select_pattern(int block_index, const BlockGrid& grid);

/// Costs d = (0, 0) once. Returns (0, 0) when the normalized cost is strictly
/// below `threshold`; the cost stays memoized either way.
std::optional<MotionVector> zmp_check(const FramePair& frames,
                                      BlockOrigin origin, double threshold,
                                      int block_size, EvalCounter& counter);

/// Left neighbour's vector; empty for left-column blocks.
std::optional<MotionVector> predict_mv_ros_d(const MotionField& field,
                                             int block_index);

class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Particle {
  Vec2 position;
  Vec2 velocity;
  MotionVector best_position;
  SadSum best_cost = 0;
};

struct Swarm {
  std::vector<Particle> particles;
  Candidate global_best;
};

/// Swarm snapshots after each iteration's move; tests use it to observe the
/// dynamics.
struct PsoTrace {
  std::vector<Swarm> iterations;
};

/// One block's swarm search. Positions are clamped to the frame before the
/// first evaluation. The global best starts from the best displacement
/// already in `counter` (e.g. the zero-motion probe) and from
/// `seed_candidate`, when given.
MotionVector pso_match(const FramePair& frames, BlockOrigin origin,
                       std::span<const MotionVector> pattern,
                       std::optional<MotionVector> seed_candidate,
                       int block_size, const PsoConfig& config,
                       EvalCounter& counter, UniformRng& rng,
                       PsoTrace* trace = nullptr);

/// Whole-frame PSO-ZMP pass. Seeds its generator from `pso.seed`.
MotionField estimate_pso_zmp(const Frame& anchor, const Frame& target,
                             const EstimatorConfig& config,
                             const PsoConfig& pso);

}  // namespace mebench
