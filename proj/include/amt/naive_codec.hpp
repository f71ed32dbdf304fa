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

#include <span>
#include <string>
#include <vector>

#include "amt/canonical.hpp"

namespace amt {

// Baseline representation: every face written out as its three sorted vertex
// indices, in canonical face order.
struct NaiveSequence {
  std::vector<VertexId> items;

  std::size_t face_count() const { return items.size() / 3; }
  friend bool operator==(const NaiveSequence&, const NaiveSequence&) = default;
};

NaiveSequence tokenize_naive(const CanonicalMesh& mesh);

// Throws SequenceError for a length not divisible by three, an out-of-range
// index, a degenerate triple or a repeated face.
CanonicalMesh detokenize_naive(const NaiveSequence& seq,
                               std::span<const GridPoint> vertices,
                               UpAxis up = UpAxis::y);

std::string to_string(const NaiveSequence& seq);

}  // namespace amt
