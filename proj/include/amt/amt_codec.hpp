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

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amt/canonical.hpp"

namespace amt {

// One element of an adjacent-mesh sequence: a vertex index or the restart
// marker `&`.
class AmtItem {
 public:
  static constexpr AmtItem vertex(VertexId v) { return AmtItem(v); }
  static constexpr AmtItem restart() { return AmtItem(kRestart); }

  constexpr bool is_restart() const { return value_ == kRestart; }
  constexpr bool is_vertex() const { return value_ != kRestart; }
  // Requires is_vertex().
  constexpr VertexId index() const { return value_; }

  friend constexpr bool operator==(AmtItem, AmtItem) = default;

 private:
  static constexpr VertexId kRestart = std::numeric_limits<VertexId>::max();
  constexpr explicit AmtItem(VertexId v) : value_(v) {}

  VertexId value_;
};

struct AmtSequence {
  std::vector<AmtItem> items;
  std::size_t source_face_count = 0;

  friend bool operator==(const AmtSequence&, const AmtSequence&) = default;
};

// Walks the canonical face list, emitting a full triangle (ascending indices)
// at the start and after every restart, and a single vertex for each face
// that continues across the edge formed by the last two emitted vertices.
// Throws amt::Error for a mesh without faces.
AmtSequence tokenize(const CanonicalMesh& mesh);

struct TokenizeTrace {
  AmtSequence sequence;
  // Face ids in the order they were consumed.
  std::vector<FaceId> visit_order;
};
TokenizeTrace tokenize_traced(const CanonicalMesh& mesh);

// Rebuilds the mesh described by `seq` over `vertices`. The result is
// re-canonicalized, so `vertices` need not be sorted. Throws SequenceError on
// misplaced restarts, short runs, out-of-range or degenerate faces, repeated
// faces and a face count that disagrees with seq.source_face_count.
CanonicalMesh detokenize(const AmtSequence& seq, std::span<const GridPoint> vertices,
                         UpAxis up = UpAxis::y);

struct SequenceStats {
  std::size_t vertex_items = 0;
  std::size_t restart_items = 0;
  std::size_t faces_encoded = 0;

  friend bool operator==(const SequenceStats&, const SequenceStats&) = default;
};

SequenceStats sequence_stats(const AmtSequence& seq);

// Debug text form: "v0 v1 v2 & v3 v4 v5".
std::string to_string(const AmtSequence& seq);
// Parses the debug form; source_face_count is derived from the items.
AmtSequence parse_amt_text(std::string_view text);

}  // namespace amt
