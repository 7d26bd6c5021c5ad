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

#include "mebench/pso_zmp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mebench {

namespace {

// Initial offsets per pattern, relative to the pattern centre.
constexpr std::array<MotionVector, 8> kPatternA = {{
    {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1},
}};
constexpr std::array<MotionVector, 8> kPatternB = {{
    {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2},
}};
constexpr std::array<MotionVector, 8> kPatternC = {{
    {0, -1}, {1, 0}, {1, -1}, {2, 0}, {0, -2}, {2, -1}, {1, -2}, {2, -2},
}};
constexpr std::array<MotionVector, 8> kPatternD = {{
    {0, 1}, {0, -1}, {0, 2}, {0, -2}, {1, 0}, {2, 0}, {1, 1}, {1, -1},
}};

Vec2 clamp_position(Vec2 p, const DisplacementBounds& b) {
  return {std::clamp(p.x, double(b.min_dx), double(b.max_dx)),
          std::clamp(p.y, double(b.min_dy), double(b.max_dy))};
}

MotionVector to_lattice(Vec2 p, const DisplacementBounds& b) {
  return b.clamp({static_cast<int>(std::lround(p.x)),
                  static_cast<int>(std::lround(p.y))});
}

double clamp_velocity(double v, double v_max) {
  return std::clamp(v, -v_max, v_max);
}

}  // namespace

void PsoConfig::validate() const {
  if (particles < 1) throw std::invalid_argument("need at least one particle");
  if (iterations < 1) throw std::invalid_argument("need at least one iteration");
  if (!(w_end >= 0.0 && w_end <= w_start)) {
    throw std::invalid_argument("inertia must satisfy 0 <= w_end <= w_start");
  }
  if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be positive");
}

double inertia_weight(const PsoConfig& config, int iteration) {
  if (config.iterations <= 1) return config.w_start;
  if (iteration == config.iterations - 1) return config.w_end;
  return config.w_start - (config.w_start - config.w_end) * iteration /
                              (config.iterations - 1);
}

InitPattern parse_pattern(char kind) {
  switch (kind) {
    case 'A': return InitPattern::A;
    case 'B': return InitPattern::B;
    case 'C': return InitPattern::C;
    case 'D': return InitPattern::D;
  }
  throw std::invalid_argument(std::string("unknown initialization pattern '") +
                              kind + "'");
}

std::array<MotionVector, 8> init_pattern(InitPattern kind,
                                         MotionVector center) {
  const std::array<MotionVector, 8>* offsets = nullptr;
  switch (kind) {
    case InitPattern::A: offsets = &kPatternA; break;
    case InitPattern::B: offsets = &kPatternB; break;
    case InitPattern::C: offsets = &kPatternC; break;
    case InitPattern::D: offsets = &kPatternD; break;
  }
  if (offsets == nullptr) {
    throw std::invalid_argument("unknown initialization pattern");
  }
  std::array<MotionVector, 8> out{};
  std::transform(offsets->begin(), offsets->end(), out.begin(),
                 [center](MotionVector off) { return center + off; });
  return out;
}

InitPattern select_pattern(int block_index, const BlockGrid& grid) {
  if (block_index == 0) return InitPattern::B;
  if (grid.col_of(block_index) != 0) return InitPattern::A;
  if (grid.row_of(block_index) == grid.rows() - 1) return InitPattern::C;
  return InitPattern::D;
}

std::optional<MotionVector> zmp_check(const FramePair& frames,
                                      BlockOrigin origin, double threshold,
                                      int block_size, EvalCounter& counter) {
  const SadSum cost = sad_at(counter, frames, origin, {0, 0}, block_size);
  if (cost_below(cost, threshold, block_size)) return MotionVector{0, 0};
  return std::nullopt;
}

std::optional<MotionVector> predict_mv_ros_d(const MotionField& field,
                                             int block_index) {
  if (block_index <= 0 || field.grid.col_of(block_index) == 0) {
    return std::nullopt;
  }
  return field.vectors[static_cast<std::size_t>(block_index - 1)];
}

MotionVector pso_match(const FramePair& frames, BlockOrigin origin,
                       std::span<const MotionVector> pattern,
                       std::optional<MotionVector> seed_candidate,
                       int block_size, const PsoConfig& config,
                       EvalCounter& counter, UniformRng& rng,
                       PsoTrace* trace) {
  if (pattern.empty()) {
    throw std::invalid_argument("pso_match needs at least one start position");
  }
  const auto bounds = displacement_bounds(
      frames.anchor.width(), frames.anchor.height(), origin, block_size);

  Swarm swarm;
  swarm.particles.resize(static_cast<std::size_t>(config.particles));
  for (std::size_t i = 0; i < swarm.particles.size(); ++i) {
    const MotionVector start = bounds.clamp(pattern[i % pattern.size()]);
    swarm.particles[i].position = {double(start.dx), double(start.dy)};
  }

  std::optional<Candidate> global_best = counter.best();
  if (seed_candidate) {
    const MotionVector d = bounds.clamp(*seed_candidate);
    const Candidate c{d, sad_at(counter, frames, origin, d, block_size)};
    if (!global_best || ranks_before(c, *global_best)) global_best = c;
  }

  for (int t = 0; t < config.iterations; ++t) {
    for (Particle& p : swarm.particles) {
      const MotionVector d = to_lattice(p.position, bounds);
      const Candidate c{d, sad_at(counter, frames, origin, d, block_size)};
      if (t == 0 || ranks_before(c, {p.best_position, p.best_cost})) {
        p.best_position = c.mv;
        p.best_cost = c.cost;
      }
    }
    for (const Particle& p : swarm.particles) {
      const Candidate c{p.best_position, p.best_cost};
      if (!global_best || ranks_before(c, *global_best)) global_best = c;
    }
    swarm.global_best = *global_best;

    const double w = inertia_weight(config, t);
    const double gx = global_best->mv.dx;
    const double gy = global_best->mv.dy;
    for (Particle& p : swarm.particles) {
      const double r1x = rng.next();
      const double r2x = rng.next();
      const double r1y = rng.next();
      const double r2y = rng.next();
      p.velocity.x = clamp_velocity(
          w * p.velocity.x +
              config.c1 * r1x * (p.best_position.dx - p.position.x) +
              config.c2 * r2x * (gx - p.position.x),
          config.v_max);
      p.velocity.y = clamp_velocity(
          w * p.velocity.y +
              config.c1 * r1y * (p.best_position.dy - p.position.y) +
              config.c2 * r2y * (gy - p.position.y),
          config.v_max);
      p.position = clamp_position(
          {p.position.x + p.velocity.x, p.position.y + p.velocity.y}, bounds);
    }
    if (trace != nullptr) trace->iterations.push_back(swarm);
  }
  return global_best->mv;
}

MotionField estimate_pso_zmp(const Frame& anchor, const Frame& target,
                             const EstimatorConfig& config,
                             const PsoConfig& pso) {
  config.validate();
  pso.validate();
  const FramePair frames{anchor, target};
  MotionField field(
      BlockGrid(anchor.width(), anchor.height(), config.block_size));
  UniformRng rng(pso.seed);

  for (int m = 0; m < field.grid.block_count(); ++m) {
    const auto m_idx = static_cast<std::size_t>(m);
    const BlockOrigin origin = field.grid.origin(m);
    EvalCounter counter;
    if (zmp_check(frames, origin, config.zmp_threshold, config.block_size,
                  counter)) {
      field.vectors[m_idx] = {0, 0};
      field.evals[m_idx] = 1;
      field.static_flags[m_idx] = 1;
      continue;
    }

    const InitPattern kind = select_pattern(m, field.grid);
    MotionVector center{0, 0};
    std::optional<MotionVector> seed;
    if (kind == InitPattern::A) {
      center = predict_mv_ros_d(field, m).value_or(MotionVector{0, 0});
      if (pso.seed_prediction) seed = center;
    }
    const auto positions = init_pattern(kind, center);
    field.vectors[m_idx] = pso_match(frames, origin, positions, seed,
                                     config.block_size, pso, counter, rng);
    field.evals[m_idx] = static_cast<std::uint32_t>(counter.evals());
  }
  return field;
}

}  // namespace mebench
