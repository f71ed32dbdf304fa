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

#include "amt/amt_codec.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "amt/synthetic.hpp"
#include "oracles.hpp"

namespace amt {
namespace {

// Mesh over `n` collinear grid points, whose canonical order is their index.
CanonicalMesh indexed_mesh(std::size_t n, std::vector<std::array<VertexId, 3>> faces) {
  std::vector<GridPoint> points;
  for (std::size_t i = 0; i < n; ++i) points.push_back({0, 0, std::int32_t(i)});
  return CanonicalMesh::build(points, faces);
}

std::vector<std::int64_t> items(std::initializer_list<std::int64_t> v) { return v; }

AmtSequence seq_of(std::initializer_list<std::int64_t> v, std::size_t faces) {
  AmtSequence s;
  for (const auto x : v) s.items.push_back(x < 0 ? AmtItem::restart() : AmtItem::vertex(VertexId(x)));
  s.source_face_count = faces;
  return s;
}

constexpr std::int64_t kAmp = -1;

TEST(Tokenize, SquareUsesOneVertexForSecondFace) {
  const auto m = indexed_mesh(4, {{0, 1, 2}, {1, 2, 3}});
  const auto expected = items({0, 1, 2, 3});
  EXPECT_EQ(testing::reference_tokenize(m.faces()), expected);
  EXPECT_EQ(testing::flatten(tokenize(m)), expected);
}

TEST(Tokenize, DisconnectedTrianglesRestart) {
  const auto m = indexed_mesh(6, {{0, 1, 2}, {3, 4, 5}});
  const auto expected = items({0, 1, 2, kAmp, 3, 4, 5});
  EXPECT_EQ(testing::reference_tokenize(m.faces()), expected);
  EXPECT_EQ(testing::flatten(tokenize(m)), expected);
}

TEST(Tokenize, FanDoesNotTurnAroundApex) {
  const auto m = indexed_mesh(4, {{0, 1, 2}, {0, 2, 3}});
  const auto expected = items({0, 1, 2, kAmp, 0, 2, 3});
  EXPECT_EQ(testing::reference_tokenize(m.faces()), expected);
  EXPECT_EQ(testing::flatten(tokenize(m)), expected);
}

TEST(Tokenize, StripFollowsLastEdge) {
  const auto m = indexed_mesh(5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
  const auto expected = items({0, 1, 2, 3, 4});
  EXPECT_EQ(testing::reference_tokenize(m.faces()), expected);
  EXPECT_EQ(testing::flatten(tokenize(m)), expected);
}

TEST(Tokenize, NonManifoldEdgePicksLowestCandidate) {
  const auto m = indexed_mesh(5, {{0, 1, 2}, {1, 2, 4}, {1, 2, 3}});
  EXPECT_EQ(testing::flatten(tokenize(m)), items({0, 1, 2, 3, kAmp, 1, 2, 4}));
  EXPECT_EQ(testing::reference_tokenize(m.faces()), items({0, 1, 2, 3, kAmp, 1, 2, 4}));
}

TEST(Tokenize, EmptyMeshIsAnError) {
  EXPECT_THROW(tokenize(indexed_mesh(3, {})), Error);
}

TEST(Detokenize, InvertsHandTraces) {
  const auto square = indexed_mesh(4, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(detokenize(seq_of({0, 1, 2, 3}, 2), square.vertices()), square);
  const auto soup = indexed_mesh(6, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(detokenize(seq_of({0, 1, 2, kAmp, 3, 4, 5}, 2), soup.vertices()), soup);
}

TEST(Detokenize, RejectsMalformedSequences) {
  const auto m = indexed_mesh(6, {});
  const auto error_at = [&](std::initializer_list<std::int64_t> v, std::size_t faces) -> std::size_t {
    try {
      detokenize(seq_of(v, faces), m.vertices());
    } catch (const SequenceError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(error_at({0, 1, kAmp, kAmp, 2}, 0), 2u);       // restart after two vertices
  EXPECT_EQ(error_at({kAmp, 0, 1, 2}, 1), 0u);             // leading restart
  EXPECT_EQ(error_at({0, 1, 2, kAmp}, 1), 3u);             // trailing restart
  EXPECT_EQ(error_at({0, 1, 2, kAmp, kAmp, 3, 4, 5}, 2), 4u);
  EXPECT_EQ(error_at({0, 1, 2, kAmp, 3, 4}, 1), 5u);       // short final run
  EXPECT_EQ(error_at({0, 1, 9}, 1), 2u);                   // out of range
  EXPECT_EQ(error_at({0, 1, 0}, 1), 2u);                   // degenerate start
  EXPECT_EQ(error_at({0, 1, 2, 1}, 2), 3u);                // degenerate continuation
  EXPECT_EQ(error_at({0, 1, 2, kAmp, 2, 0, 1}, 2), 6u);    // repeated face
  EXPECT_EQ(error_at({0, 1, 2, 3}, 3), 3u);                // wrong face count
  EXPECT_EQ(error_at({}, 0), 0u);
}

TEST(SequenceStats, CountsItems) {
  EXPECT_EQ(sequence_stats(seq_of({0, 1, 2, 3}, 2)), (SequenceStats{4, 0, 2}));
  EXPECT_EQ(sequence_stats(seq_of({0, 1, 2, kAmp, 3, 4, 5}, 2)), (SequenceStats{6, 1, 2}));
  EXPECT_EQ(sequence_stats(seq_of({0, 1, 2}, 1)), (SequenceStats{3, 0, 1}));
}

TEST(AmtText, RoundTrip) {
  const auto s = seq_of({0, 1, 2, kAmp, 3, 14, 5}, 2);
  EXPECT_EQ(to_string(s), "v0 v1 v2 & v3 v14 v5");
  EXPECT_EQ(parse_amt_text(to_string(s)), s);
  EXPECT_THROW(parse_amt_text("v0 x1"), SequenceError);
  EXPECT_THROW(parse_amt_text("v"), SequenceError);
}

TEST(Tokenize, ClosedFormsForStripsAndSoups) {
  for (const std::size_t n : {1u, 2u, 7u, 100u, 1000u}) {
    std::vector<std::array<VertexId, 3>> strip;
    std::vector<std::array<VertexId, 3>> soup;
    for (VertexId i = 0; i < n; ++i) {
      strip.push_back({i, i + 1, i + 2});
      soup.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    }
    EXPECT_EQ(tokenize(indexed_mesh(n + 2, strip)).items.size(), n + 2);
    const auto s = tokenize(indexed_mesh(3 * n, soup));
    EXPECT_EQ(s.items.size(), 3 * n + (n - 1));
    EXPECT_EQ(sequence_stats(s).restart_items, n - 1);
  }
}

void check_properties(const CanonicalMesh& m) {
  const TokenizeTrace trace = tokenize_traced(m);
  const AmtSequence& s = trace.sequence;

  ASSERT_EQ(testing::flatten(s), testing::reference_tokenize(m.faces()));
  ASSERT_EQ(detokenize(s, m.vertices(), m.up_axis()), m);

  std::vector<FaceId> order = trace.visit_order;
  std::sort(order.begin(), order.end());
  ASSERT_EQ(order.size(), m.face_count());
  for (FaceId f = 0; f < order.size(); ++f) ASSERT_EQ(order[f], f);

  const SequenceStats stats = sequence_stats(s);
  ASSERT_EQ(stats.faces_encoded, m.face_count());
  ASSERT_EQ(stats.vertex_items, m.face_count() + 2 * (stats.restart_items + 1));
  ASSERT_EQ(s.items.size(), stats.vertex_items + stats.restart_items);

  ASSERT_FALSE(s.items.front().is_restart());
  ASSERT_FALSE(s.items.back().is_restart());
  std::size_t run = 0;
  for (const AmtItem item : s.items) {
    if (item.is_restart()) {
      ASSERT_GE(run, 3u);
      run = 0;
    } else {
      ++run;
    }
  }
  ASSERT_GE(run, 3u);
}

TEST(Tokenize, PropertiesOnRandomMeshes) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = canonicalize(
        testing::random_grid_mesh(rng, 4 + int(rng() % 30), 1 + int(rng() % 60), 5));
    if (m.face_count() == 0) continue;
    check_properties(m);
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

TEST(Tokenize, PropertiesOnSyntheticMeshes) {
  const QuantizationSpec q{};
  for (int seed = 0; seed < 60; ++seed) {
    const auto raw = generate_synthetic(SyntheticKind::random_triangulation, {}, seed);
    check_properties(canonicalize(quantize(raw, q)));
  }
  for (int s = 0; s <= 3; ++s) {
    check_properties(canonicalize(quantize(generate_synthetic(SyntheticKind::icosphere, {1, 0, 0, s}), q)));
  }
  check_properties(canonicalize(quantize(generate_synthetic(SyntheticKind::grid, {1, 12, 7, 0}), q)));
  check_properties(canonicalize(quantize(generate_synthetic(SyntheticKind::fan, {30, 0, 0, 0}), q)));
}

TEST(Tokenize, UniqueUnderInputPermutation) {
  std::mt19937_64 rng(8);
  for (int seed = 0; seed < 10; ++seed) {
    const RawMesh raw = generate_synthetic(SyntheticKind::random_triangulation, {}, seed);
    const auto reference = tokenize(canonicalize(quantize(raw, QuantizationSpec{})));
    for (int k = 0; k < 10; ++k) {
      const RawMesh shuffled = testing::permute(raw, rng);
      ASSERT_EQ(tokenize(canonicalize(quantize(shuffled, QuantizationSpec{}))), reference);
    }
  }
}

}  // namespace
}  // namespace amt
