// Copyright 2026 The AMT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amt/mesh_io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "amt/canonical.hpp"
#include "oracles.hpp"

namespace amt {
namespace {

TEST(ParseObj, MinimalTriangle) {
  const auto r = parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n");
  ASSERT_EQ(r.mesh.vertex_count(), 3);
  ASSERT_EQ(r.mesh.face_count(), 1);
  EXPECT_EQ(r.mesh.faces.row(0), Eigen::RowVector3i(0, 1, 2));
  EXPECT_EQ(r.mesh.vertices.row(1), Eigen::RowVector3d(1, 0, 0));
}

TEST(ParseObj, QuadIsFanTriangulated) {
  const auto r = parse_obj("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n");
  ASSERT_EQ(r.mesh.face_count(), 2);
  EXPECT_EQ(r.mesh.faces.row(0), Eigen::RowVector3i(0, 1, 2));
  EXPECT_EQ(r.mesh.faces.row(1), Eigen::RowVector3i(0, 2, 3));
  EXPECT_EQ(r.report.triangulated_polygons, 1u);
}

TEST(ParseObj, IndexOutOfRangeReportsLine) {
  try {
    parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(ParseObj, SlotsAndRelativeIndices) {
  const auto r = parse_obj(
      "# comment\n"
      "v 0 0 0\nv 1 0 0\nv 0 1 0\nv 1 1 0\n"
      "vt 0 0\nvn 0 0 1\nvn 0 0 1\n"
      "f 1/1/1 2//2 3/1\n"
      "f -3 -2 -1\n"
      "usemtl foo\ng part\n");
  ASSERT_EQ(r.mesh.face_count(), 2);
  EXPECT_EQ(r.mesh.faces.row(0), Eigen::RowVector3i(0, 1, 2));
  EXPECT_EQ(r.mesh.faces.row(1), Eigen::RowVector3i(1, 2, 3));
  EXPECT_EQ(r.report.ignored_records.at("vt"), 1u);
  EXPECT_EQ(r.report.ignored_records.at("vn"), 2u);
  EXPECT_EQ(r.report.ignored_records.at("usemtl"), 1u);
  EXPECT_EQ(r.report.ignored_records.at("g"), 1u);
}

TEST(ParseObj, CrlfAndExtraWhitespace) {
  const auto r = parse_obj("v  0 0 0 \r\n\tv 1 0 0\r\nv 0 1 0 1.0\r\nf 1 2 3\r\n");
  EXPECT_EQ(r.mesh.vertex_count(), 3);
  EXPECT_EQ(r.mesh.face_count(), 1);
}

TEST(ParseObj, MalformedRecordsReportLine) {
  EXPECT_THROW(parse_obj("v 0 0\n"), ParseError);
  try {
    parse_obj("v 0 0 0\nv 1 0 0\nv 0 x 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2\n"), ParseError);
  EXPECT_THROW(parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n"), ParseError);
  EXPECT_THROW(parse_obj("v 0 0 0\nf -2 -1 1\n"), ParseError);
  EXPECT_THROW(parse_obj("v nan 0 0\n"), ParseError);
}

TEST(ParseObj, EmptyMeshIsAnError) {
  EXPECT_THROW(parse_obj(""), ParseError);
  EXPECT_THROW(parse_obj("# nothing\nvn 0 0 1\n"), ParseError);
}

TEST(ParseObj, DegenerateFacesFollowPolicy) {
  const std::string text = "v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\nf 1 1 2\n";
  const auto dropped = parse_obj(text);
  EXPECT_EQ(dropped.mesh.face_count(), 1);
  EXPECT_EQ(dropped.report.dropped_degenerate, 1u);
  EXPECT_THROW(parse_obj(text, {DegeneratePolicy::reject}), ParseError);
}

TEST(WriteObj, VerticesWithoutFaces) {
  RawMesh m;
  m.vertices.resize(3, 3);
  m.vertices << 0, 0, 0, 1, 0, 0, 0, 1, 0;
  EXPECT_EQ(write_obj(m), "v 0 0 0\nv 1 0 0\nv 0 1 0\n");
}

TEST(WriteObj, DeterministicOutput) {
  const auto square = parse_obj("v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3\nf 1 3 4\n").mesh;
  const std::string first = write_obj(square);
  EXPECT_EQ(first, write_obj(square));
  EXPECT_EQ(first, "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3\nf 1 3 4\n");
}

TEST(WriteObj, ParseWriteRoundTripOnRandomMeshes) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-1e3, 1e3);
  for (int trial = 0; trial < 50; ++trial) {
    RawMesh m;
    const int n = 3 + int(rng() % 40);
    m.vertices.resize(n, 3);
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < 3; ++c) m.vertices(v, c) = coord(rng) / double(1 + rng() % 7);
    }
    const int f = int(rng() % 30);
    m.faces.resize(f, 3);
    for (int i = 0; i < f; ++i) {
      const int a = int(rng() % n);
      m.faces.row(i) << a, (a + 1) % n, (a + 2) % n;
    }
    const RawMesh back = parse_obj(write_obj(m)).mesh;
    ASSERT_EQ(back, m) << "trial " << trial;
  }
}

TEST(WriteObj, CanonicalMeshRoundTripsExactly) {
  std::mt19937_64 rng(5);
  for (const UpAxis up : {UpAxis::y, UpAxis::z}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto canon = canonicalize(testing::random_grid_mesh(rng, 30, 40, 8), up);
      const RawMesh parsed = parse_obj(write_obj(canon)).mesh;
      const GridMesh grid{parsed.vertices.cast<std::int32_t>(), parsed.faces};
      ASSERT_EQ(parsed.vertices, grid.vertices.cast<double>());
      ASSERT_EQ(canonicalize(grid, up), canon);
    }
  }
}

TEST(Quantize, BoxCornersMapToEndBins) {
  RawMesh m;
  m.vertices.resize(2, 3);
  m.vertices << -0.5, -0.5, -0.5, 0.5, 0.5, 0.5;
  const QuantizationSpec spec{128, BBoxMode::unit_cube_centered, std::nullopt};
  const GridMesh q = quantize(m, spec);
  EXPECT_EQ(q.vertices.row(0), Eigen::RowVector3i(0, 0, 0));
  EXPECT_EQ(q.vertices.row(1), Eigen::RowVector3i(127, 127, 127));
}

TEST(Quantize, RoundHalfUpOnBinScale) {
  RawMesh m;
  m.vertices.resize(1, 3);
  m.vertices << 0.49, 0.51, 1.0;
  const Box box{Eigen::Vector3d::Zero(), Eigen::Vector3d::Ones()};
  const GridMesh q = quantize(m, QuantizationSpec{4, BBoxMode::per_mesh_tight, box});
  const Eigen::RowVector3i expected(testing::reference_bin(0.49, 0, 1, 4),
                                    testing::reference_bin(0.51, 0, 1, 4),
                                    testing::reference_bin(1.0, 0, 1, 4));
  EXPECT_EQ(expected, Eigen::RowVector3i(2, 2, 3));
  EXPECT_EQ(q.vertices.row(0), expected);
}

TEST(Quantize, MatchesScalarReferenceAndStaysInRange) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    RawMesh m;
    m.vertices.resize(64, 3);
    for (int v = 0; v < 64; ++v) {
      for (int c = 0; c < 3; ++c) m.vertices(v, c) = coord(rng);
    }
    const int bins = 2 + int(rng() % 300);
    // Half the trials use the fixed unit box, so many points fall outside it.
    const QuantizationSpec spec{bins, trial % 2 ? BBoxMode::unit_cube_centered
                                                : BBoxMode::per_mesh_tight,
                                std::nullopt};
    const Box box = resolve_box(m, spec);
    const GridMesh q = quantize(m, spec);
    for (int v = 0; v < 64; ++v) {
      for (int c = 0; c < 3; ++c) {
        ASSERT_GE(q.vertices(v, c), 0);
        ASSERT_LT(q.vertices(v, c), bins);
        ASSERT_EQ(q.vertices(v, c),
                  testing::reference_bin(m.vertices(v, c), box.min[c], box.max[c], bins));
      }
    }
  }
}

TEST(Quantize, IdempotentOnBinPositions) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> coord(-3.0, 7.0);
  for (const int bins : {2, 7, 128, 1000}) {
    RawMesh m;
    m.vertices.resize(200, 3);
    for (int v = 0; v < 200; ++v) {
      for (int c = 0; c < 3; ++c) m.vertices(v, c) = coord(rng);
    }
    QuantizationSpec spec{bins, BBoxMode::per_mesh_tight, std::nullopt};
    spec.box = resolve_box(m, spec);
    const GridMesh once = quantize(m, spec);
    const GridMesh twice = quantize(dequantize(once, *spec.box, bins), spec);
    EXPECT_EQ(once, twice) << "bins " << bins;
  }
}

TEST(Quantize, ZeroExtentAxisMapsToBinZero) {
  RawMesh m;
  m.vertices.resize(2, 3);
  m.vertices << 0.1, 3, 0.2, 0.9, 3, 0.8;
  const Box box{Eigen::Vector3d(0, 3, 0), Eigen::Vector3d(1, 3, 1)};
  const GridMesh q = quantize(m, QuantizationSpec{16, BBoxMode::per_mesh_tight, box});
  EXPECT_EQ(q.vertices(0, 1), 0);
  EXPECT_EQ(q.vertices(1, 1), 0);

  RawMesh point;
  point.vertices.resize(1, 3);
  point.vertices << 5, 5, 5;
  EXPECT_EQ(quantize(point, QuantizationSpec{}).vertices.row(0), Eigen::RowVector3i(0, 0, 0));
}

TEST(Quantize, TightBoxScalesUniformly) {
  RawMesh m;
  m.vertices.resize(2, 3);
  m.vertices << 0, 0, 0, 4, 2, 0;
  const Box box = resolve_box(m, QuantizationSpec{});
  EXPECT_EQ(box.min, Eigen::Vector3d(0, -1, -2));
  EXPECT_EQ(box.max, Eigen::Vector3d(4, 3, 2));
  const GridMesh q = quantize(m, QuantizationSpec{8, BBoxMode::per_mesh_tight, std::nullopt});
  EXPECT_EQ(q.vertices.row(0), Eigen::RowVector3i(0, 2, 4));
  EXPECT_EQ(q.vertices.row(1), Eigen::RowVector3i(7, 6, 4));
}

TEST(Quantize, RejectsTooFewBins) {
  RawMesh m;
  m.vertices.resize(1, 3);
  m.vertices << 0, 0, 0;
  EXPECT_THROW(quantize(m, QuantizationSpec{1, BBoxMode::per_mesh_tight, std::nullopt}), Error);
}

}  // namespace
}  // namespace amt
