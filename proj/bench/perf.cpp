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

// Wall-clock comparison of the OpenMP kernels against the serial reference on
// synthetic QCIF content. Usage: mebench_perf [frames] [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "mebench/compensation.hpp"
#include "mebench/estimators.hpp"
#include "mebench/metrics.hpp"
#include "mebench/reference.hpp"

using namespace mebench;

namespace {

Frame drift_frame(int w, int h, int t, std::uint64_t seed) {
  Frame f(w, h);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> n(-4, 4);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const double v = 128 + 60 * std::sin((x + t) * 0.21) * std::cos((y - t / 2) * 0.17);
      f.at(x, y) = std::uint8_t(std::clamp(int(v) + n(rng), 0, 255));
    }
  return f;
}

template <typename Fn>
double best_ms(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* what, double serial, double parallel) {
  std::printf("%-24s serial %9.2f ms   omp %9.2f ms   x%.2f\n", what, serial,
              parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  const int frames = argc > 1 ? std::atoi(argv[1]) : 30;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  if (frames < 2 || repeats < 1) {
    std::fprintf(stderr, "usage: mebench_perf [frames>=2] [repeats>=1]\n");
    return 1;
  }
  Sequence seq;
  for (int t = 0; t < frames; ++t) seq.push_back(drift_frame(176, 144, t, t));
  std::printf("QCIF x %d frames, %d threads, best of %d\n", frames,
              omp_get_max_threads(), repeats);

  EstimatorConfig cfg;
  cfg.zmp_threshold = 384;
  PsoConfig pso;

  report("ES one frame pair",
         best_ms(repeats, [&] { reference::estimate_es(seq[0], seq[1], cfg); }),
         best_ms(repeats, [&] { estimate(Algorithm::kES, seq[0], seq[1], cfg); }));

  const MotionField field = estimate(Algorithm::kES, seq[0], seq[1], cfg);
  report("compensate x100",
         best_ms(repeats, [&] { for (int i = 0; i < 100; ++i) reference::compensate(seq[0], field); }),
         best_ms(repeats, [&] { for (int i = 0; i < 100; ++i) compensate(seq[0], field); }));

  const std::size_t n = seq.frame_count();
  report("psnr sequence",
         best_ms(repeats, [&] { reference::psnr(seq, seq, 0, n); }),
         best_ms(repeats, [&] { psnr(seq, seq, 0, n); }));

  for (Algorithm a : {Algorithm::kES, Algorithm::kDS, Algorithm::kARPS, Algorithm::kPsoZmp}) {
    const std::string label = "sequence " + std::string(algorithm_name(a));
    report(label.c_str(),
           best_ms(repeats, [&] { reference::estimate_sequence(a, seq, cfg, pso); }),
           best_ms(repeats, [&] { estimate_sequence(a, seq, cfg, pso); }));
  }
  return 0;
}
