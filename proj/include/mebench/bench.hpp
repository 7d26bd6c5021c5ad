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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mebench/estimators.hpp"
#include "mebench/frame.hpp"
#include "mebench/motion_field.hpp"
#include "mebench/pso_zmp.hpp"
#include "mebench/video_io.hpp"

namespace mebench {

enum class InputFormat { kAuto, kY4m, kYuv };

struct RunSpec {
  std::filesystem::path input;
  InputFormat format = InputFormat::kAuto;
  int width = 0;   // raw input only
  int height = 0;  // raw input only
  RawChroma chroma = RawChroma::k420;
  std::optional<std::size_t> max_frames;
  std::vector<Algorithm> algorithms;
  EstimatorConfig estimator;
  /// Overrides the per-sequence default threshold when set.
  std::optional<double> zmp_threshold;
  PsoConfig pso;
  std::filesystem::path out_dir = "mebench_out";
  bool dump_mv = false;
  bool dump_recon = false;
};

/// Default zero-motion thresholds of the standard QCIF test clips, matched as
/// a case-insensitive substring of `name`.
std::optional<double> default_zmp_threshold(std::string_view name);

/// The explicit threshold if given, else the default for the input's file
/// name. Throws UsageError when neither applies.
double resolve_zmp_threshold(const RunSpec& spec);

/// Loads `spec.input` according to its format (".y4m" means Y4M under kAuto).
Sequence load_input(const RunSpec& spec);

struct FrameRow {
  std::size_t frame = 0;  // target frame index, from 1
  Algorithm algo = Algorithm::kES;
  double avg_evals = 0.0;
  double psnr_db = 0.0;
  double static_fraction = 0.0;
};

struct AlgoSummary {
  Algorithm algo = Algorithm::kES;
  double mean_psnr_db = 0.0;
  double mean_evals = 0.0;
  double mean_static_fraction = 0.0;
};

struct SequenceReport {
  /// Frame-major, algorithms in request order within a frame.
  std::vector<FrameRow> rows;
  /// One entry per algorithm, request order.
  std::vector<AlgoSummary> summary;

  /// Throws std::out_of_range if `algo` was not run.
  const AlgoSummary& summary_for(Algorithm algo) const;
  /// Speed-up of `a` over `b`: mean_evals(b) / mean_evals(a).
  double gain(Algorithm a, Algorithm b) const;
};

/// Per-algorithm artefacts of an evaluation, kept only on request.
struct AlgorithmRun {
  Algorithm algo = Algorithm::kES;
  std::vector<MotionField> fields;        // index k-1 -> target frame k
  std::vector<Frame> reconstructed;       // index k-1 -> target frame k
};

/// Estimates, compensates and scores every consecutive frame pair with each
/// algorithm. Needs at least two frames and one algorithm.
SequenceReport evaluate(const Sequence& sequence,
                        const std::vector<Algorithm>& algorithms,
                        const EstimatorConfig& config, const PsoConfig& pso,
                        std::vector<AlgorithmRun>* runs = nullptr);

/// Loads the input, resolves the threshold, evaluates, and writes the CSV
/// files, sidecar and optional dumps under `spec.out_dir`.
SequenceReport run(const RunSpec& spec);

/// Writes per_frame.csv, summary.csv, gains.csv and meta.json into `dir`.
/// `spec.estimator.zmp_threshold` is recorded as the threshold used.
void write_csv(const SequenceReport& report, const RunSpec& spec,
               std::size_t frame_count, const std::filesystem::path& dir);

/// Fixed-precision rendering used by every CSV field.
std::string format_fixed(double value, int decimals);

/// Human-readable summary and gain table.
std::string format_summary(const SequenceReport& report);

/// Library version recorded in the sidecar.
std::string_view version();

}  // namespace mebench
