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

// Serial, straightforward versions of the parallel kernels. They go through
// the bounds-checked block accessors and plain loops, and exist so tests can
// compare the optimized paths against them bit for bit.

#include <cstddef>
#include <vector>

#include "mebench/estimators.hpp"
#include "mebench/frame.hpp"
#include "mebench/metrics.hpp"
#include "mebench/motion_field.hpp"

namespace mebench::reference {

/// Cost via extract_block + sad_sum.
SadSum block_sad(const Frame& target, const Frame& anchor, BlockOrigin origin,
                 MotionVector d, int block_size);

/// Full search of every block, one after another, scanning the window in
/// raster order and keeping the first best under ranks_before.
MotionField estimate_es(const Frame& anchor, const Frame& target,
                        const EstimatorConfig& config);

Frame compensate(const Frame& anchor, const MotionField& field);

PsnrReport psnr(const Sequence& original, const Sequence& compensated,
                std::size_t first, std::size_t last);

std::vector<MotionField> estimate_sequence(Algorithm algo,
                                           const Sequence& sequence,
                                           const EstimatorConfig& config,
                                           const PsoConfig& pso);

}  // namespace mebench::reference
