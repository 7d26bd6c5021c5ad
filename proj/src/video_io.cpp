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

#include "mebench/video_io.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mebench/errors.hpp"

namespace mebench {

namespace {

constexpr std::string_view kY4mSignature = "YUV4MPEG2";
constexpr std::string_view kFrameMarker = "FRAME";

std::string os_message() { return std::strerror(errno); }

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "': " + os_message());
  }
  return in;
}

// Reads one '\n'-terminated header line; FormatError if EOF hits first.
bool read_line(std::istream& in, std::string& line, std::size_t limit) {
  line.clear();
  char c;
  while (in.get(c)) {
    if (c == '\n') return true;
    line.push_back(c);
    if (line.size() > limit) {
      throw FormatError("header line exceeds " + std::to_string(limit) +
                        " bytes");
    }
  }
  return false;
}

int parse_positive(std::string_view token, std::string_view value) {
  int out = 0;
  if (value.empty()) {
    throw FormatError("empty value in header token '" + std::string(token) +
                      "'");
  }
  for (char c : value) {
    if (c < '0' || c > '9') {
      throw FormatError("non-numeric header token '" + std::string(token) +
                        "'");
    }
    out = out * 10 + (c - '0');
    if (out > (1 << 16)) {
      throw FormatError("header token '" + std::string(token) +
                        "' out of range");
    }
  }
  if (out <= 0) {
    throw FormatError("header token '" + std::string(token) +
                      "' must be positive");
  }
  return out;
}

struct Y4mHeader {
  int width = 0;
  int height = 0;
  // Chroma bytes per frame as a fraction of luma bytes: numerator / 4.
  int chroma_quarters = 2;
};

Y4mHeader parse_y4m_header(const std::string& line) {
  std::istringstream tokens(line);
  std::string token;
  if (!(tokens >> token) || token != kY4mSignature) {
    throw FormatError("missing YUV4MPEG2 signature, found '" + token + "'");
  }
  Y4mHeader h;
  bool have_w = false;
  bool have_h = false;
  while (tokens >> token) {
    const char tag = token[0];
    const std::string_view value = std::string_view(token).substr(1);
    switch (tag) {
      case 'W':
        h.width = parse_positive(token, value);
        have_w = true;
        break;
      case 'H':
        h.height = parse_positive(token, value);
        have_h = true;
        break;
      case 'C':
        if (value.starts_with("420")) {
          h.chroma_quarters = 2;
        } else if (value == "mono") {
          h.chroma_quarters = 0;
        } else {
          throw FormatError("unsupported chroma token '" + token + "'");
        }
        break;
      case 'F':
      case 'I':
      case 'A':
      case 'X':
        break;
      default:
        throw FormatError("unknown header token '" + token + "'");
    }
  }
  if (!have_w) throw FormatError("header lacks 'W' token");
  if (!have_h) throw FormatError("header lacks 'H' token");
  return h;
}

void skip_bytes(std::istream& in, std::size_t n) {
  in.ignore(static_cast<std::streamsize>(n));
}

}  // namespace

std::size_t raw_frame_bytes(int width, int height, RawChroma chroma) {
  const std::size_t luma = static_cast<std::size_t>(width) * height;
  if (chroma == RawChroma::k400) return luma;
  const std::size_t cw = (static_cast<std::size_t>(width) + 1) / 2;
  const std::size_t ch = (static_cast<std::size_t>(height) + 1) / 2;
  return luma + 2 * cw * ch;
}

Sequence load_y4m(const std::filesystem::path& path,
                  std::optional<std::size_t> max_frames) {
  auto in = open_for_read(path);
  std::string line;
  if (!read_line(in, line, 1024)) {
    throw FormatError("'" + path.string() + "': unterminated stream header");
  }
  const Y4mHeader header = parse_y4m_header(line);
  const std::size_t luma_bytes =
      static_cast<std::size_t>(header.width) * header.height;
  const std::size_t chroma_bytes =
      header.chroma_quarters == 0
          ? 0
          : 2 * ((static_cast<std::size_t>(header.width) + 1) / 2) *
                ((static_cast<std::size_t>(header.height) + 1) / 2);

  Sequence seq;
  while (!max_frames || seq.frame_count() < *max_frames) {
    const std::size_t index = seq.frame_count();
    if (!read_line(in, line, 1024)) {
      if (line.empty()) break;
      throw FormatError("frame " + std::to_string(index) +
                        ": truncated frame header");
    }
    if (!line.starts_with(kFrameMarker)) {
      throw FormatError("frame " + std::to_string(index) +
                        ": expected FRAME marker, found '" +
                        line.substr(0, 16) + "'");
    }
    std::vector<std::uint8_t> luma(luma_bytes);
    in.read(reinterpret_cast<char*>(luma.data()),
            static_cast<std::streamsize>(luma_bytes));
    if (static_cast<std::size_t>(in.gcount()) != luma_bytes) {
      throw FormatError("frame " + std::to_string(index) +
                        ": truncated luma payload");
    }
    skip_bytes(in, chroma_bytes);
    if (static_cast<std::size_t>(in.gcount()) != chroma_bytes) {
      throw FormatError("frame " + std::to_string(index) +
                        ": truncated chroma payload");
    }
    seq.push_back(Frame(header.width, header.height, std::move(luma)));
  }
  if (seq.empty()) {
    throw FormatError("'" + path.string() + "' contains no frames");
  }
  return seq;
}

Sequence load_raw_yuv(const std::filesystem::path& path, int width, int height,
                      std::optional<std::size_t> max_frames, RawChroma chroma) {
  if (width <= 0 || height <= 0) {
    throw UsageError("raw input needs positive --width and --height");
  }
  auto in = open_for_read(path);
  std::error_code ec;
  const auto file_size = std::filesystem::file_size(path, ec);
  if (ec) throw IoError("cannot stat '" + path.string() + "': " + ec.message());

  const std::size_t frame_bytes = raw_frame_bytes(width, height, chroma);
  const std::size_t luma_bytes = static_cast<std::size_t>(width) * height;
  const std::size_t whole = file_size / frame_bytes;
  const std::size_t remainder = file_size % frame_bytes;
  const std::size_t count = max_frames ? std::min(whole, *max_frames) : whole;

  if (count == 0) {
    throw FormatError("'" + path.string() + "' holds no complete " +
                      std::to_string(width) + "x" + std::to_string(height) +
                      " frame (" + std::to_string(file_size) + " bytes)");
  }
  if (remainder != 0 && (!max_frames || *max_frames > whole)) {
    throw FormatError("'" + path.string() + "' ends with a partial frame: " +
                      std::to_string(remainder) + " bytes remaining");
  }

  Sequence seq;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::uint8_t> luma(luma_bytes);
    in.read(reinterpret_cast<char*>(luma.data()),
            static_cast<std::streamsize>(luma_bytes));
    skip_bytes(in, frame_bytes - luma_bytes);
    if (!in) {
      throw IoError("short read in frame " + std::to_string(i) + " of '" +
                    path.string() + "'");
    }
    seq.push_back(Frame(width, height, std::move(luma)));
  }
  return seq;
}

void write_pgm(const Frame& frame, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot create '" + path.string() + "': " + os_message());
  }
  out << "P5\n" << frame.width() << ' ' << frame.height() << "\n255\n";
  const auto luma = frame.luma();
  out.write(reinterpret_cast<const char*>(luma.data()),
            static_cast<std::streamsize>(luma.size()));
  if (!out) {
    throw IoError("write failed for '" + path.string() + "': " + os_message());
  }
}

Frame read_pgm(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  // Header fields are whitespace separated and may carry '#' comments.
  auto next_field = [&](const char* what) {
    std::string field;
    char c;
    while (in.get(c)) {
      if (c == '#') {
        while (in.get(c) && c != '\n') {
        }
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        if (!field.empty()) return field;
        continue;
      }
      field.push_back(c);
    }
    if (field.empty()) {
      throw FormatError("'" + path.string() + "': missing PGM " + what);
    }
    return field;
  };
  const std::string magic = next_field("magic");
  if (magic != "P5") {
    throw FormatError("'" + path.string() + "': expected P5, found '" + magic +
                      "'");
  }
  const std::string w = next_field("width");
  const std::string h = next_field("height");
  const std::string maxval = next_field("maxval");
  if (maxval != "255") {
    throw FormatError("'" + path.string() + "': unsupported maxval " + maxval);
  }
  const int width = parse_positive("width", w);
  const int height = parse_positive("height", h);
  std::vector<std::uint8_t> luma(static_cast<std::size_t>(width) * height);
  in.read(reinterpret_cast<char*>(luma.data()),
          static_cast<std::streamsize>(luma.size()));
  if (static_cast<std::size_t>(in.gcount()) != luma.size()) {
    throw FormatError("'" + path.string() + "': truncated PGM payload");
  }
  return Frame(width, height, std::move(luma));
}

void write_y4m(const Sequence& sequence, const std::filesystem::path& path,
               int fps_num, int fps_den) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot create '" + path.string() + "': " + os_message());
  }
  out << kY4mSignature << " W" << sequence.width() << " H" << sequence.height()
      << " F" << fps_num << ':' << fps_den << " Ip A1:1 Cmono\n";
  for (const Frame& f : sequence) {
    out << kFrameMarker << '\n';
    const auto luma = f.luma();
    out.write(reinterpret_cast<const char*>(luma.data()),
              static_cast<std::streamsize>(luma.size()));
  }
  if (!out) {
    throw IoError("write failed for '" + path.string() + "': " + os_message());
  }
}

}  // namespace mebench
