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

#include "mebench/frame.hpp"
#include "mebench/motion_field.hpp"

namespace mebench {

/// Prediction of a target frame built from the anchor and a motion field.
struct CompensatedFrame {
  Frame frame;
  const MotionField* source_field = nullptr;
};

/// Block m of the output is the anchor block at origin(m) + vectors[m];
/// pixels outside the tiled region are copied from the anchor unchanged.
/// Blocks are filled in parallel.
///
/// Throws std::invalid_argument if the field's grid does not match the
/// anchor or any vector leaves the frame.
CompensatedFrame compensate(const Frame& anchor, const MotionField& field);

}  // namespace mebench
