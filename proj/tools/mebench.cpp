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

// mebench: block-matching motion estimation benchmark.
//
//   mebench run --input clip.yuv --width 176 --height 144 --algos ds,arps,pso-zmp
//   mebench psnr --a original.y4m --b decoded.y4m
//
// Exit codes: 0 ok, 1 usage, 2 I/O, 3 data format.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mebench/bench.hpp"
#include "mebench/errors.hpp"
#include "mebench/estimators.hpp"
#include "mebench/metrics.hpp"
#include "mebench/video_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitFormat = 3;

mebench::InputFormat parse_format(const std::string& s) {
  if (s.empty() || s == "auto") return mebench::InputFormat::kAuto;
  if (s == "y4m") return mebench::InputFormat::kY4m;
  if (s == "yuv") return mebench::InputFormat::kYuv;
  throw mebench::UsageError("unknown --format '" + s + "'");
}

mebench::RawChroma parse_chroma(const std::string& s) {
  if (s == "420") return mebench::RawChroma::k420;
  if (s == "400") return mebench::RawChroma::k400;
  throw mebench::UsageError("unknown --chroma '" + s + "' (420 or 400)");
}

std::vector<mebench::Algorithm> parse_algos(const std::string& list) {
  std::vector<mebench::Algorithm> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(mebench::parse_algorithm(item));
  }
  if (out.empty()) throw mebench::UsageError("--algos is empty");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-matching motion estimation benchmark"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mebench::version()));

  // run
  auto* run_cmd = app.add_subcommand("run", "Estimate, compensate and score a sequence");
  std::string input, format, chroma = "420", algos = "ds,arps,pso-zmp";
  std::string out_dir = "mebench_out";
  int width = 0, height = 0;
  std::size_t frames = 0;
  mebench::RunSpec spec;
  double zmp = -1.0;
  run_cmd->add_option("--input", input, "Input .y4m or raw planar .yuv")->required();
  run_cmd->add_option("--format", format, "y4m | yuv (default: from extension)");
  run_cmd->add_option("--width", width, "Frame width (raw input)");
  run_cmd->add_option("--height", height, "Frame height (raw input)");
  run_cmd->add_option("--chroma", chroma, "Raw chroma layout: 420 | 400");
  run_cmd->add_option("--frames", frames, "Read at most N frames");
  run_cmd->add_option("--algos", algos, "Comma list of es,ds,arps,pso-zmp");
  run_cmd->add_option("--block", spec.estimator.block_size, "Block size");
  run_cmd->add_option("--p", spec.estimator.search_range, "Search range for ES/DS/ARPS");
  run_cmd->add_option("--zmp-threshold", zmp, "Zero-motion threshold (normalized cost)");
  run_cmd->add_flag("--ds-zmp", spec.estimator.ds_zmp, "Also run zero-motion test before DS");
  run_cmd->add_option("--particles", spec.pso.particles, "Swarm size");
  run_cmd->add_option("--iters", spec.pso.iterations, "PSO iterations");
  run_cmd->add_option("--vmax", spec.pso.v_max, "PSO velocity clamp");
  run_cmd->add_option("--seed", spec.pso.seed, "PSO seed");
  run_cmd->add_flag("--no-seed-prediction", "Predicted vector only recentres the pattern");
  run_cmd->add_option("--out", out_dir, "Output directory");
  run_cmd->add_flag("--dump-mv", spec.dump_mv, "Write per-frame MVF files");
  run_cmd->add_flag("--dump-recon", spec.dump_recon, "Write reconstructed frames as PGM");

  // psnr
  auto* psnr_cmd = app.add_subcommand("psnr", "Per-frame PSNR between two sequences");
  std::string a_path, b_path, psnr_format;
  int pw = 0, ph = 0;
  psnr_cmd->add_option("--a", a_path, "Reference sequence")->required();
  psnr_cmd->add_option("--b", b_path, "Test sequence")->required();
  psnr_cmd->add_option("--format", psnr_format, "y4m | yuv (default: from extension)");
  psnr_cmd->add_option("--width", pw, "Frame width (raw input)");
  psnr_cmd->add_option("--height", ph, "Frame height (raw input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) {
      spec.input = input;
      spec.format = parse_format(format);
      spec.width = width;
      spec.height = height;
      spec.chroma = parse_chroma(chroma);
      if (frames > 0) spec.max_frames = frames;
      spec.algorithms = parse_algos(algos);
      if (zmp >= 0.0) spec.zmp_threshold = zmp;
      spec.pso.seed_prediction = run_cmd->count("--no-seed-prediction") == 0;
      spec.out_dir = out_dir;

      const auto report = mebench::run(spec);
      std::cout << mebench::format_summary(report);
      std::cout << "\nwrote " << (spec.out_dir / "per_frame.csv").string()
                << '\n';
      return kExitOk;
    }

    auto load = [&](const std::string& path) {
      mebench::RunSpec s;
      s.input = path;
      s.format = parse_format(psnr_format);
      s.width = pw;
      s.height = ph;
      return mebench::load_input(s);
    };
    const auto a = load(a_path);
    const auto b = load(b_path);
    if (a.width() != b.width() || a.height() != b.height()) {
      throw mebench::FormatError("sequences differ in frame size");
    }
    const std::size_t n = std::min(a.frame_count(), b.frame_count());
    const auto report = mebench::psnr(a, b, 0, n);
    std::cout << "frame,psnr_db\n";
    for (std::size_t k = 0; k < n; ++k) {
      std::cout << k << ',' << mebench::format_fixed(report.per_frame_db[k], 2)
                << '\n';
    }
    std::cout << "mean," << mebench::format_fixed(report.mean_db, 2) << '\n';
    return kExitOk;
  } catch (const mebench::UsageError& e) {
    std::cerr << "mebench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mebench::IoError& e) {
    std::cerr << "mebench: " << e.what() << '\n';
    return kExitIo;
  } catch (const mebench::FormatError& e) {
    std::cerr << "mebench: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "mebench: " << e.what() << '\n';
    return kExitUsage;
  }
}
