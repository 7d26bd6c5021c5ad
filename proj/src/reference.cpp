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

#include "mebench/reference.hpp"

#include <algorithm>
#include <cmath>

namespace mebench::reference {

SadSum block_sad(const Frame& target, const Frame& anchor, BlockOrigin origin,
                 MotionVector d, int block_size) {
  const PixelBlock t = extract_block(target, origin, {0, 0}, block_size);
  const PixelBlock a = extract_block(anchor, origin, d, block_size);
  SadSum sum = 0;
  for (std::size_t i = 0; i < t.samples.size(); ++i) {
    sum += static_cast<SadSum>(std::abs(int{t.samples[i]} - int{a.samples[i]}));
  }
  return sum;
}

MotionField estimate_es(const Frame& anchor, const Frame& target,
                        const EstimatorConfig& config) {
  MotionField field(BlockGrid(anchor.width(), anchor.height(),
                              config.block_size));
  const int p = config.search_range;
  for (int m = 0; m < field.grid.block_count(); ++m) {
    const BlockOrigin o = field.grid.origin(m);
    const auto legal = displacement_bounds(field.grid, o);
    Candidate best{{0, 0}, reference::block_sad(target, anchor, o, {0, 0},
                                     config.block_size)};
    std::uint32_t evals = 0;
    for (int dy = -p; dy <= p; ++dy) {
      for (int dx = -p; dx <= p; ++dx) {
        if (!legal.contains({dx, dy})) continue;
        ++evals;
        const Candidate c{{dx, dy},
                          reference::block_sad(target, anchor, o, {dx, dy},
                                    config.block_size)};
        if (ranks_before(c, best)) best = c;
      }
    }
    field.vectors[static_cast<std::size_t>(m)] = best.mv;
    field.evals[static_cast<std::size_t>(m)] = evals;
  }
  return field;
}

Frame compensate(const Frame& anchor, const MotionField& field) {
  Frame out = anchor;
  const int bs = field.grid.block_size();
  for (int m = 0; m < field.grid.block_count(); ++m) {
    const BlockOrigin o = field.grid.origin(m);
    const PixelBlock block = extract_block(
        anchor, o, field.vectors[static_cast<std::size_t>(m)], bs);
    for (int y = 0; y < bs; ++y) {
      for (int x = 0; x < bs; ++x) {
        out.at(o.x + x, o.y + y) =
            block.samples[static_cast<std::size_t>(y * bs + x)];
      }
    }
  }
  return out;
}

PsnrReport psnr(const Sequence& original, const Sequence& compensated,
                std::size_t first, std::size_t last) {
  PsnrReport report;
  for (std::size_t k = first; k < last; ++k) {
    const Frame& a = original[k];
    const Frame& b = compensated[k];
    double sq = 0.0;
    for (int y = 0; y < a.height(); ++y) {
      for (int x = 0; x < a.width(); ++x) {
        const double diff = double(a.at(x, y)) - double(b.at(x, y));
        sq += diff * diff;
      }
    }
    const double mse_value = sq / (double(a.width()) * a.height());
    report.per_frame_db.push_back(
        mse_value == 0.0
            ? kPsnrCapDb
            : std::min(kPsnrCapDb, 10.0 * std::log10(255.0 * 255.0 / mse_value)));
  }
  double total = 0.0;
  for (double v : report.per_frame_db) total += v;
  report.mean_db =
      report.per_frame_db.empty() ? 0.0 : total / report.per_frame_db.size();
  return report;
}

std::vector<MotionField> estimate_sequence(Algorithm algo,
                                           const Sequence& sequence,
                                           const EstimatorConfig& config,
                                           const PsoConfig& pso) {
  std::vector<MotionField> fields;
  for (std::size_t k = 1; k < sequence.frame_count(); ++k) {
    PsoConfig pair_pso = pso;
    pair_pso.seed = pair_seed(pso.seed, k);
    fields.push_back(algo == Algorithm::kES
                         ? estimate_es(sequence[k - 1], sequence[k], config)
                         : estimate(algo, sequence[k - 1], sequence[k], config,
                                    pair_pso));
  }
  return fields;
}

}  // namespace mebench::reference
