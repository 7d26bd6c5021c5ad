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

#include "mebench/bench.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "mebench/compensation.hpp"
#include "mebench/errors.hpp"
#include "mebench/metrics.hpp"
#include "mebench/mv_field_io.hpp"

#ifndef MEBENCH_VERSION
#define MEBENCH_VERSION "0.0.0-dev"
#endif

namespace mebench {

namespace {

struct ClipThreshold {
  std::string_view key;
  double threshold;
};

// Thresholds used for the five standard QCIF clips.
constexpr std::array<ClipThreshold, 5> kClipThresholds = {{
    {"akiyo", 384.0},
    {"container", 512.0},
    {"mother", 384.0},
    {"news", 512.0},
    {"silent", 384.0},
}};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::ofstream create_file(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  return out;
}

void finish_file(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void make_dirs(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create directory '" + dir.string() +
                  "': " + ec.message());
  }
}

std::string frame_file(std::size_t k, std::string_view ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%04zu.%s", k,
                std::string(ext).c_str());
  return buf;
}

}  // namespace

std::string_view version() { return MEBENCH_VERSION; }

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::optional<double> default_zmp_threshold(std::string_view name) {
  const std::string lower = lowercase(name);
  for (const auto& entry : kClipThresholds) {
    if (lower.find(entry.key) != std::string::npos) return entry.threshold;
  }
  return std::nullopt;
}

double resolve_zmp_threshold(const RunSpec& spec) {
  if (spec.zmp_threshold) return *spec.zmp_threshold;
  if (auto t = default_zmp_threshold(spec.input.filename().string())) return *t;
  throw UsageError("no default zero-motion threshold for '" +
                   spec.input.filename().string() +
                   "'; pass --zmp-threshold");
}

Sequence load_input(const RunSpec& spec) {
  InputFormat format = spec.format;
  if (format == InputFormat::kAuto) {
    format = lowercase(spec.input.extension().string()) == ".y4m"
                 ? InputFormat::kY4m
                 : InputFormat::kYuv;
  }
  if (format == InputFormat::kY4m) return load_y4m(spec.input, spec.max_frames);
  return load_raw_yuv(spec.input, spec.width, spec.height, spec.max_frames,
                      spec.chroma);
}

const AlgoSummary& SequenceReport::summary_for(Algorithm algo) const {
  for (const auto& s : summary) {
    if (s.algo == algo) return s;
  }
  throw std::out_of_range("algorithm '" + std::string(algorithm_name(algo)) +
                          "' not in report");
}

double SequenceReport::gain(Algorithm a, Algorithm b) const {
  return summary_for(b).mean_evals / summary_for(a).mean_evals;
}

SequenceReport evaluate(const Sequence& sequence,
                        const std::vector<Algorithm>& algorithms,
                        const EstimatorConfig& config, const PsoConfig& pso,
                        std::vector<AlgorithmRun>* runs) {
  if (algorithms.empty()) throw UsageError("no algorithm selected");
  if (sequence.frame_count() < 2) {
    throw UsageError("need at least two frames, got " +
                     std::to_string(sequence.frame_count()));
  }
  const std::size_t frames = sequence.frame_count();
  const std::size_t pairs = frames - 1;

  std::vector<std::vector<FrameRow>> per_algo;
  SequenceReport report;
  for (const Algorithm algo : algorithms) {
    auto fields = estimate_sequence(algo, sequence, config, pso);

    Sequence compensated;
    compensated.push_back(sequence[0]);
    for (std::size_t k = 1; k < frames; ++k) {
      compensated.push_back(compensate(sequence[k - 1], fields[k - 1]).frame);
    }
    const PsnrReport quality = psnr(sequence, compensated, 1, frames);

    std::vector<FrameRow> rows;
    AlgoSummary summary{algo, quality.mean_db, 0.0, 0.0};
    for (std::size_t k = 1; k < frames; ++k) {
      const MotionField& f = fields[k - 1];
      rows.push_back({k, algo, f.avg_evals(), quality.per_frame_db[k - 1],
                      f.static_fraction()});
      summary.mean_evals += f.avg_evals();
      summary.mean_static_fraction += f.static_fraction();
    }
    summary.mean_evals /= static_cast<double>(pairs);
    summary.mean_static_fraction /= static_cast<double>(pairs);
    report.summary.push_back(summary);
    per_algo.push_back(std::move(rows));

    if (runs != nullptr) {
      AlgorithmRun run{algo, std::move(fields), {}};
      for (std::size_t k = 1; k < frames; ++k) {
        run.reconstructed.push_back(compensated[k]);
      }
      runs->push_back(std::move(run));
    }
  }

  for (std::size_t i = 0; i < pairs; ++i) {
    for (const auto& rows : per_algo) report.rows.push_back(rows[i]);
  }
  return report;
}

void write_csv(const SequenceReport& report, const RunSpec& spec,
               std::size_t frame_count, const std::filesystem::path& dir) {
  make_dirs(dir);

  {
    const auto path = dir / "per_frame.csv";
    auto out = create_file(path);
    out << "frame,algo,avg_evals,psnr_db,static_fraction\n";
    for (const FrameRow& r : report.rows) {
      out << r.frame << ',' << algorithm_name(r.algo) << ','
          << format_fixed(r.avg_evals, 3) << ',' << format_fixed(r.psnr_db, 2)
          << ',' << format_fixed(r.static_fraction, 3) << '\n';
    }
    finish_file(out, path);
  }
  {
    const auto path = dir / "summary.csv";
    auto out = create_file(path);
    out << "algo,mean_psnr_db,mean_evals\n";
    for (const AlgoSummary& s : report.summary) {
      out << algorithm_name(s.algo) << ',' << format_fixed(s.mean_psnr_db, 2)
          << ',' << format_fixed(s.mean_evals, 3) << '\n';
    }
    finish_file(out, path);
  }
  {
    // Row A, column B holds the speed-up of A over B.
    const auto path = dir / "gains.csv";
    auto out = create_file(path);
    out << "algo";
    for (const AlgoSummary& s : report.summary) {
      out << ',' << algorithm_name(s.algo);
    }
    out << '\n';
    for (const AlgoSummary& a : report.summary) {
      out << algorithm_name(a.algo);
      for (const AlgoSummary& b : report.summary) {
        out << ',' << format_fixed(report.gain(a.algo, b.algo), 3);
      }
      out << '\n';
    }
    finish_file(out, path);
  }
  {
    nlohmann::ordered_json meta;
    meta["tool"] = "mebench";
    meta["version"] = std::string(version());
    meta["input"] = spec.input.string();
    meta["frames"] = frame_count;
    nlohmann::ordered_json algos = nlohmann::ordered_json::array();
    for (const Algorithm a : spec.algorithms) {
      algos.push_back(std::string(algorithm_name(a)));
    }
    meta["algorithms"] = algos;
    meta["block_size"] = spec.estimator.block_size;
    meta["search_range"] = spec.estimator.search_range;
    meta["zmp_threshold"] = spec.estimator.zmp_threshold;
    meta["ds_zmp"] = spec.estimator.ds_zmp;
    meta["pso"] = {
        {"particles", spec.pso.particles},
        {"iterations", spec.pso.iterations},
        {"w_start", spec.pso.w_start},
        {"w_end", spec.pso.w_end},
        {"c1", spec.pso.c1},
        {"c2", spec.pso.c2},
        {"v_max", spec.pso.v_max},
        {"seed_prediction", spec.pso.seed_prediction},
    };
    meta["seed"] = spec.pso.seed;
    meta["pair_seed"] = "seed xor target_frame_index";
    meta["rng"] = "mt19937_64, (x >> 11) * 2^-53";
    meta["eval_counting"] =
        "distinct displacements per block; repeated queries are not counted";
    meta["sad_normalization"] = "sum / block_side";
    meta["psnr_cap_db"] = kPsnrCapDb;

    const auto path = dir / "meta.json";
    auto out = create_file(path);
    out << meta.dump(2) << '\n';
    finish_file(out, path);
  }
}

std::string format_summary(const SequenceReport& report) {
  std::ostringstream out;
  out << "algo      mean_psnr_db  mean_evals  static\n";
  for (const AlgoSummary& s : report.summary) {
    char line[128];
    std::snprintf(line, sizeof line, "%-9s %12.2f %11.3f %7.3f\n",
                  std::string(algorithm_name(s.algo)).c_str(), s.mean_psnr_db,
                  s.mean_evals, s.mean_static_fraction);
    out << line;
  }
  if (report.summary.size() > 1) {
    out << "\ngain (row over column)\n";
    out << "         ";
    for (const AlgoSummary& b : report.summary) {
      char cell[32];
      std::snprintf(cell, sizeof cell, " %8s",
                    std::string(algorithm_name(b.algo)).c_str());
      out << cell;
    }
    out << '\n';
    for (const AlgoSummary& a : report.summary) {
      char cell[32];
      std::snprintf(cell, sizeof cell, "%-9s",
                    std::string(algorithm_name(a.algo)).c_str());
      out << cell;
      for (const AlgoSummary& b : report.summary) {
        std::snprintf(cell, sizeof cell, " %8.2f", report.gain(a.algo, b.algo));
        out << cell;
      }
      out << '\n';
    }
  }
  return out.str();
}

SequenceReport run(const RunSpec& spec_in) {
  RunSpec spec = spec_in;
  if (spec.algorithms.empty()) throw UsageError("no algorithm selected");
  spec.estimator.zmp_threshold = resolve_zmp_threshold(spec);
  try {
    spec.estimator.validate();
    spec.pso.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const Sequence sequence = load_input(spec);
  const bool keep = spec.dump_mv || spec.dump_recon;
  std::vector<AlgorithmRun> runs;
  SequenceReport report = evaluate(sequence, spec.algorithms, spec.estimator,
                                   spec.pso, keep ? &runs : nullptr);
  write_csv(report, spec, sequence.frame_count(), spec.out_dir);

  for (const AlgorithmRun& r : runs) {
    const std::string name(algorithm_name(r.algo));
    if (spec.dump_mv) {
      const auto dir = spec.out_dir / "mv" / name;
      make_dirs(dir);
      for (std::size_t i = 0; i < r.fields.size(); ++i) {
        dump_mv_field(r.fields[i], dir / frame_file(i + 1, "mvf"));
      }
    }
    if (spec.dump_recon) {
      const auto dir = spec.out_dir / "recon" / name;
      make_dirs(dir);
      for (std::size_t i = 0; i < r.reconstructed.size(); ++i) {
        write_pgm(r.reconstructed[i], dir / frame_file(i + 1, "pgm"));
      }
    }
  }
  return report;
}

}  // namespace mebench
