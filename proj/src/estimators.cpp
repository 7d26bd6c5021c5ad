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

#include "mebench/estimators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

#include "mebench/errors.hpp"

namespace mebench {

namespace {

constexpr std::array<MotionVector, 8> kLargeDiamond = {{
    {0, -2}, {-1, -1}, {1, -1}, {-2, 0}, {2, 0}, {-1, 1}, {1, 1}, {0, 2},
}};

constexpr std::array<MotionVector, 4> kSmallDiamond = {{
    {0, -1}, {-1, 0}, {1, 0}, {0, 1},
}};

// Frame-legal displacements that also respect the +-P window.
DisplacementBounds search_bounds(const FramePair& frames, BlockOrigin origin,
                                 const EstimatorConfig& config) {
  auto b = displacement_bounds(frames.anchor.width(), frames.anchor.height(),
                               origin, config.block_size);
  const int p = config.search_range;
  return {std::max(b.min_dx, -p), std::min(b.max_dx, p),
          std::max(b.min_dy, -p), std::min(b.max_dy, p)};
}

// Costs `center + offset` for every legal offset and returns the best of
// those and `best`.
template <std::size_t K>
Candidate probe(const FramePair& frames, BlockOrigin origin,
                const EstimatorConfig& config, const DisplacementBounds& bounds,
                EvalCounter& counter, MotionVector center,
                const std::array<MotionVector, K>& offsets, Candidate best) {
  for (const MotionVector off : offsets) {
    const MotionVector d = center + off;
    if (!bounds.contains(d)) continue;
    const Candidate c{d, sad_at(counter, frames, origin, d, config.block_size)};
    if (ranks_before(c, best)) best = c;
  }
  return best;
}

Candidate cost_of(const FramePair& frames, BlockOrigin origin,
                  const EstimatorConfig& config, EvalCounter& counter,
                  MotionVector d) {
  return {d, sad_at(counter, frames, origin, d, config.block_size)};
}

// Repeated unit-rood steps until the centre stays best.
Candidate refine_small_diamond(const FramePair& frames, BlockOrigin origin,
                               const EstimatorConfig& config,
                               const DisplacementBounds& bounds,
                               EvalCounter& counter, Candidate center) {
  while (true) {
    const Candidate next = probe(frames, origin, config, bounds, counter,
                                 center.mv, kSmallDiamond, center);
    if (next.mv == center.mv) return center;
    center = next;
  }
}

}  // namespace

void EstimatorConfig::validate() const {
  if (block_size < 2) {
    throw std::invalid_argument("block size must be at least 2");
  }
  if (search_range < 1) {
    throw std::invalid_argument("search range must be at least 1");
  }
  if (!(zmp_threshold >= 0.0)) {
    throw std::invalid_argument("zero-motion threshold must be non-negative");
  }
}

std::uint64_t MotionField::total_evals() const {
  std::uint64_t total = 0;
  for (auto e : evals) total += e;
  return total;
}

double MotionField::avg_evals() const {
  return static_cast<double>(total_evals()) /
         static_cast<double>(grid.block_count());
}

double MotionField::static_fraction() const {
  const auto n = std::count(static_flags.begin(), static_flags.end(), 1);
  return static_cast<double>(n) / static_cast<double>(grid.block_count());
}

Algorithm parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "es") return Algorithm::kES;
  if (lower == "ds") return Algorithm::kDS;
  if (lower == "arps") return Algorithm::kARPS;
  if (lower == "pso-zmp" || lower == "psozmp" || lower == "pso_zmp") {
    return Algorithm::kPsoZmp;
  }
  throw UsageError("unknown algorithm '" + std::string(name) +
                   "' (expected es, ds, arps or pso-zmp)");
}

std::string_view algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kES: return "es";
    case Algorithm::kDS: return "ds";
    case Algorithm::kARPS: return "arps";
    case Algorithm::kPsoZmp: return "pso-zmp";
  }
  return "?";
}

bool uses_zmp(Algorithm algo, const EstimatorConfig& config) {
  switch (algo) {
    case Algorithm::kES: return false;
    case Algorithm::kDS: return config.ds_zmp;
    case Algorithm::kARPS:
    case Algorithm::kPsoZmp: return true;
  }
  return false;
}

MotionVector es_search(const FramePair& frames, BlockOrigin origin,
                       const EstimatorConfig& config, EvalCounter& counter) {
  const auto bounds = search_bounds(frames, origin, config);
  Candidate best = cost_of(frames, origin, config, counter, {0, 0});
  for (int dy = bounds.min_dy; dy <= bounds.max_dy; ++dy) {
    for (int dx = bounds.min_dx; dx <= bounds.max_dx; ++dx) {
      const Candidate c = cost_of(frames, origin, config, counter, {dx, dy});
      if (ranks_before(c, best)) best = c;
    }
  }
  return best.mv;
}

MotionVector ds_search(const FramePair& frames, BlockOrigin origin,
                       const EstimatorConfig& config, EvalCounter& counter) {
  const auto bounds = search_bounds(frames, origin, config);
  Candidate center = cost_of(frames, origin, config, counter, {0, 0});
  if (config.ds_zmp &&
      cost_below(center.cost, config.zmp_threshold, config.block_size)) {
    return center.mv;
  }
  while (true) {
    const Candidate next = probe(frames, origin, config, bounds, counter,
                                 center.mv, kLargeDiamond, center);
    if (next.mv == center.mv) break;
    center = next;
  }
  return probe(frames, origin, config, bounds, counter, center.mv,
               kSmallDiamond, center)
      .mv;
}

MotionVector arps_search(const FramePair& frames, BlockOrigin origin,
                         const EstimatorConfig& config, EvalCounter& counter,
                         std::optional<MotionVector> left_neighbor_mv) {
  const auto bounds = search_bounds(frames, origin, config);
  Candidate best = cost_of(frames, origin, config, counter, {0, 0});
  if (cost_below(best.cost, config.zmp_threshold, config.block_size)) {
    return best.mv;
  }
  const int arm = left_neighbor_mv ? std::max(std::abs(left_neighbor_mv->dx),
                                              std::abs(left_neighbor_mv->dy))
                                   : 2;
  const std::array<MotionVector, 4> rood = {{
      {0, -arm}, {-arm, 0}, {arm, 0}, {0, arm},
  }};
  best = probe(frames, origin, config, bounds, counter, {0, 0}, rood, best);
  if (left_neighbor_mv && bounds.contains(*left_neighbor_mv)) {
    const Candidate c =
        cost_of(frames, origin, config, counter, *left_neighbor_mv);
    if (ranks_before(c, best)) best = c;
  }
  return refine_small_diamond(frames, origin, config, bounds, counter, best)
      .mv;
}

MotionField estimate(Algorithm algo, const Frame& anchor, const Frame& target,
                     const EstimatorConfig& config, const PsoConfig& pso) {
  config.validate();
  if (!anchor.same_size(target)) {
    throw std::invalid_argument("anchor and target frames differ in size");
  }
  if (algo == Algorithm::kPsoZmp) {
    return estimate_pso_zmp(anchor, target, config, pso);
  }

  const FramePair frames{anchor, target};
  MotionField field(BlockGrid(anchor.width(), anchor.height(),
                              config.block_size));
  const int blocks = field.grid.block_count();
  const bool zmp = uses_zmp(algo, config);

  auto finish = [&](int m, MotionVector mv, const EvalCounter& counter) {
    const auto m_idx = static_cast<std::size_t>(m);
    field.vectors[m_idx] = mv;
    field.evals[m_idx] = static_cast<std::uint32_t>(counter.evals());
    const auto zero_cost = counter.find({0, 0});
    field.static_flags[m_idx] =
        zmp && zero_cost &&
        cost_below(*zero_cost, config.zmp_threshold, config.block_size);
  };

  if (algo == Algorithm::kES) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int m = 0; m < blocks; ++m) {
      EvalCounter counter;
      const auto mv = es_search(frames, field.grid.origin(m), config, counter);
      finish(m, mv, counter);
    }
    return field;
  }

  for (int m = 0; m < blocks; ++m) {
    EvalCounter counter;
    const BlockOrigin origin = field.grid.origin(m);
    MotionVector mv;
    if (algo == Algorithm::kDS) {
      mv = ds_search(frames, origin, config, counter);
    } else {
      mv = arps_search(frames, origin, config, counter,
                       predict_mv_ros_d(field, m));
    }
    finish(m, mv, counter);
  }
  return field;
}

std::vector<MotionField> estimate_sequence(Algorithm algo,
                                           const Sequence& sequence,
                                           const EstimatorConfig& config,
                                           const PsoConfig& pso) {
  if (sequence.frame_count() < 2) {
    throw std::invalid_argument("estimation needs at least two frames");
  }
  const BlockGrid grid(sequence.width(), sequence.height(), config.block_size);
  const auto pairs = static_cast<std::ptrdiff_t>(sequence.frame_count() - 1);
  std::vector<MotionField> fields(static_cast<std::size_t>(pairs),
                                  MotionField(grid));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < pairs; ++i) {
    const auto k = static_cast<std::size_t>(i) + 1;
    PsoConfig pair_pso = pso;
    pair_pso.seed = pair_seed(pso.seed, k);
    fields[k - 1] =
        estimate(algo, sequence[k - 1], sequence[k], config, pair_pso);
  }
  return fields;
}

}  // namespace mebench
