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

#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mebench/errors.hpp"
#include "testing/synthetic.hpp"

namespace mebench {
namespace {

using testing::TempDir;

// Hand-rolled Y4M writer: header, then per frame "FRAME\n" + Y + U + V.
std::vector<std::uint8_t> y4m_bytes(int w, int h, const std::string& extra,
                                    const std::vector<std::uint8_t>& luma_values,
                                    bool with_chroma = true) {
  std::string header = "YUV4MPEG2 W" + std::to_string(w) + " H" +
                       std::to_string(h) + " F30:1 Ip A1:1" + extra + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (std::uint8_t v : luma_values) {
    const char* marker = "FRAME\n";
    out.insert(out.end(), marker, marker + 6);
    out.insert(out.end(), static_cast<std::size_t>(w) * h, v);
    if (with_chroma) {
      out.insert(out.end(), static_cast<std::size_t>(w / 2) * (h / 2) * 2, 128);
    }
  }
  return out;
}

TEST(LoadY4m, TwoFrameQcifHeaderEchoesDimensions) {
  TempDir dir("y4m");
  testing::write_bytes(dir / "a.y4m", y4m_bytes(176, 144, " C420jpeg", {7, 9}));
  const Sequence seq = load_y4m(dir / "a.y4m");
  EXPECT_EQ(seq.frame_count(), 2u);
  EXPECT_EQ(seq.width(), 176);
  EXPECT_EQ(seq.height(), 144);
}

TEST(LoadY4m, UniformFirstFrameReadsBackByteForByte) {
  TempDir dir("y4m");
  const auto bytes = y4m_bytes(176, 144, "", {128, 3});
  testing::write_bytes(dir / "a.y4m", bytes);
  const Sequence seq = load_y4m(dir / "a.y4m");
  // Locate frame 0's luma in the scripted bytes and compare directly.
  const std::string header = "YUV4MPEG2 W176 H144 F30:1 Ip A1:1\nFRAME\n";
  const auto luma = seq[0].luma();
  ASSERT_EQ(luma.size(), 176u * 144u);
  EXPECT_TRUE(std::equal(luma.begin(), luma.end(),
                         bytes.begin() + static_cast<long>(header.size())));
  for (auto v : luma) ASSERT_EQ(v, 128);
  for (auto v : seq[1].luma()) ASSERT_EQ(v, 3);
}

TEST(LoadY4m, MissingWidthTokenIsParseError) {
  TempDir dir("y4m");
  const std::string text = "YUV4MPEG2 H144 F30:1\nFRAME\n";
  testing::write_bytes(dir / "bad.y4m",
                       std::vector<std::uint8_t>(text.begin(), text.end()));
  try {
    load_y4m(dir / "bad.y4m");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("'W'"), std::string::npos) << e.what();
  }
}

TEST(LoadY4m, RejectsBadSignatureAndChroma) {
  TempDir dir("y4m");
  const std::string bad_sig = "YUV4MPEG W4 H4\n";
  testing::write_bytes(dir / "a.y4m",
                       std::vector<std::uint8_t>(bad_sig.begin(), bad_sig.end()));
  EXPECT_THROW(load_y4m(dir / "a.y4m"), FormatError);

  testing::write_bytes(dir / "b.y4m", y4m_bytes(4, 4, " C444", {1}));
  try {
    load_y4m(dir / "b.y4m");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("C444"), std::string::npos);
  }
}

TEST(LoadY4m, TruncatedPayloadNamesFrameIndex) {
  TempDir dir("y4m");
  auto bytes = y4m_bytes(16, 16, "", {1, 2});
  bytes.resize(bytes.size() - 10);
  testing::write_bytes(dir / "t.y4m", bytes);
  try {
    load_y4m(dir / "t.y4m");
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("frame 1"), std::string::npos)
        << e.what();
  }
}

TEST(LoadY4m, MonoStreamsAndFrameLimit) {
  TempDir dir("y4m");
  testing::write_bytes(dir / "m.y4m",
                       y4m_bytes(8, 6, " Cmono", {1, 2, 3}, false));
  EXPECT_EQ(load_y4m(dir / "m.y4m").frame_count(), 3u);
  EXPECT_EQ(load_y4m(dir / "m.y4m", 2).frame_count(), 2u);
}

TEST(LoadY4m, MissingFileIsIoError) {
  EXPECT_THROW(load_y4m("/nonexistent/clip.y4m"), IoError);
}

TEST(LoadRawYuv, FrameCountFollowsFileSize) {
  TempDir dir("yuv");
  ASSERT_EQ(raw_frame_bytes(176, 144, RawChroma::k420), 38016u);
  testing::write_bytes(dir / "c.yuv", std::vector<std::uint8_t>(38016 * 100, 0));
  EXPECT_EQ(load_raw_yuv(dir / "c.yuv", 176, 144).frame_count(), 100u);
  EXPECT_EQ(load_raw_yuv(dir / "c.yuv", 176, 144, 90).frame_count(), 90u);
}

TEST(LoadRawYuv, TrailingPartialFrameReportsRemainder) {
  TempDir dir("yuv");
  testing::write_bytes(dir / "p.yuv", std::vector<std::uint8_t>(38017, 0));
  try {
    load_raw_yuv(dir / "p.yuv", 176, 144);
    FAIL() << "expected FormatError";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("1 bytes remaining"),
              std::string::npos)
        << e.what();
  }
  // A frame limit that stops before the partial frame is fine.
  EXPECT_EQ(load_raw_yuv(dir / "p.yuv", 176, 144, 1).frame_count(), 1u);
}

TEST(LoadRawYuv, NoCompleteFrameIsError) {
  TempDir dir("yuv");
  testing::write_bytes(dir / "z.yuv", std::vector<std::uint8_t>(100, 0));
  EXPECT_THROW(load_raw_yuv(dir / "z.yuv", 176, 144), FormatError);
  EXPECT_THROW(load_raw_yuv(dir / "z.yuv", 0, 144), UsageError);
}

TEST(LoadRawYuv, LumaIsTheLeadingBytesOfEachFrame) {
  TempDir dir("yuv");
  const int w = 10, h = 6;
  const std::size_t fsz = raw_frame_bytes(w, h, RawChroma::k420);
  ASSERT_EQ(fsz, 90u);
  std::vector<std::uint8_t> bytes(fsz * 4);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>((i * 37 + 11) % 251);
  }
  testing::write_bytes(dir / "r.yuv", bytes);
  const Sequence seq = load_raw_yuv(dir / "r.yuv", w, h);
  ASSERT_EQ(seq.frame_count(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto luma = seq[k].luma();
    ASSERT_TRUE(std::equal(luma.begin(), luma.end(),
                           bytes.begin() + static_cast<long>(k * fsz)));
  }
}

TEST(LoadRawYuv, LumaOnlyLayout) {
  TempDir dir("yuv");
  testing::write_bytes(dir / "y.yuv", std::vector<std::uint8_t>(8 * 8 * 3, 5));
  EXPECT_EQ(
      load_raw_yuv(dir / "y.yuv", 8, 8, std::nullopt, RawChroma::k400)
          .frame_count(),
      3u);
}

TEST(WritePgm, TwoByTwoPayloadInOrder) {
  TempDir dir("pgm");
  write_pgm(Frame(2, 2, {0, 255, 128, 64}), dir / "a.pgm");
  const auto bytes = testing::read_bytes(dir / "a.pgm");
  const std::string header = "P5\n2 2\n255\n";
  ASSERT_EQ(bytes.size(), header.size() + 4);
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  EXPECT_EQ(bytes[header.size() + 0], 0);
  EXPECT_EQ(bytes[header.size() + 1], 255);
  EXPECT_EQ(bytes[header.size() + 2], 128);
  EXPECT_EQ(bytes[header.size() + 3], 64);
}

TEST(WritePgm, QcifMatchesIndependentWriter) {
  TempDir dir("pgm");
  const Frame f = testing::noise_frame(176, 144, 3);
  write_pgm(f, dir / "q.pgm");

  std::FILE* fp = std::fopen((dir / "ref.pgm").c_str(), "wb");
  ASSERT_NE(fp, nullptr);
  std::fprintf(fp, "P5\n%d %d\n%d\n", 176, 144, 255);
  std::fwrite(f.luma().data(), 1, f.luma().size(), fp);
  std::fclose(fp);

  EXPECT_EQ(testing::read_bytes(dir / "q.pgm"),
            testing::read_bytes(dir / "ref.pgm"));
  const std::string text = testing::read_text(dir / "q.pgm");
  EXPECT_EQ(text.substr(0, 15), "P5\n176 144\n255\n");
}

TEST(WritePgm, RoundTripIsIdentity) {
  TempDir dir("pgm");
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int w = 1 + static_cast<int>(seed * 7 % 40);
    const int h = 1 + static_cast<int>(seed * 13 % 30);
    const Frame f = testing::noise_frame(w, h, seed);
    write_pgm(f, dir / "rt.pgm");
    EXPECT_EQ(read_pgm(dir / "rt.pgm"), f) << "seed " << seed;
  }
}

TEST(WritePgm, UnwritablePathIsIoError) {
  EXPECT_THROW(write_pgm(Frame(2, 2), "/nonexistent-dir/x.pgm"), IoError);
}

TEST(WriteY4m, ReadsBackThroughLoader) {
  TempDir dir("y4m");
  Sequence seq;
  for (std::uint64_t s = 0; s < 3; ++s) seq.push_back(testing::noise_frame(20, 12, s));
  write_y4m(seq, dir / "o.y4m");
  const Sequence back = load_y4m(dir / "o.y4m");
  ASSERT_EQ(back.frame_count(), 3u);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back[k], seq[k]);
}

TEST(Frame, InvariantsAreEnforced) {
  EXPECT_THROW(Frame(0, 4), std::invalid_argument);
  EXPECT_THROW(Frame(2, 2, {1, 2, 3}), std::invalid_argument);
  Sequence seq;
  seq.push_back(Frame(4, 4));
  EXPECT_THROW(seq.push_back(Frame(4, 5)), std::invalid_argument);
}

}  // namespace
}  // namespace mebench
