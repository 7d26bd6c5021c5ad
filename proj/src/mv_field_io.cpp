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

#include "mebench/mv_field_io.hpp"

#include <fstream>
#include <sstream>

#include "mebench/errors.hpp"

namespace mebench {

std::string format_mv_field(const MotionField& field) {
  std::ostringstream out;
  out << "MVF v1 " << field.grid.cols() << ' ' << field.grid.rows() << ' '
      << field.grid.block_size() << '\n';
  for (std::size_t m = 0; m < field.vectors.size(); ++m) {
    out << field.vectors[m].dx << ' ' << field.vectors[m].dy << ' '
        << field.evals[m] << ' ' << (field.static_flags[m] ? 1 : 0) << '\n';
  }
  return out.str();
}

MotionField parse_mv_field(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty motion field");

  std::istringstream header(line);
  std::string magic, version;
  int cols = 0, rows = 0, block_size = 0;
  if (!(header >> magic >> version >> cols >> rows >> block_size) ||
      magic != "MVF" || version != "v1" || cols < 1 || rows < 1 ||
      block_size < 2) {
    throw FormatError("line 1: bad motion field header '" + line + "'");
  }

  MotionField field(BlockGrid(cols * block_size, rows * block_size,
                              block_size));
  const auto count = static_cast<std::size_t>(cols) * rows;
  for (std::size_t m = 0; m < count; ++m) {
    const std::string where = "line " + std::to_string(m + 2);
    if (!std::getline(in, line)) {
      throw FormatError(where + ": expected " + std::to_string(count) +
                        " block records");
    }
    std::istringstream rec(line);
    long long dx, dy, evals;
    int flag;
    std::string extra;
    if (!(rec >> dx >> dy >> evals >> flag) || (rec >> extra) || evals < 0 ||
        (flag != 0 && flag != 1)) {
      throw FormatError(where + ": malformed record '" + line + "'");
    }
    field.vectors[m] = {static_cast<int>(dx), static_cast<int>(dy)};
    field.evals[m] = static_cast<std::uint32_t>(evals);
    field.static_flags[m] = static_cast<std::uint8_t>(flag);
  }
  while (std::getline(in, line)) {
    if (!line.empty()) throw FormatError("trailing data after block records");
  }
  return field;
}

void dump_mv_field(const MotionField& field,
                   const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create '" + path.string() + "'");
  out << format_mv_field(field);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

MotionField load_mv_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mv_field(buf.str());
}

bool same_blocks(const MotionField& a, const MotionField& b) {
  return a.grid.cols() == b.grid.cols() && a.grid.rows() == b.grid.rows() &&
         a.grid.block_size() == b.grid.block_size() &&
         a.vectors == b.vectors && a.evals == b.evals &&
         a.static_flags == b.static_flags;
}

}  // namespace mebench
