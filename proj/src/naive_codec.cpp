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

#include "amt/naive_codec.hpp"

#include <algorithm>

namespace amt {

NaiveSequence tokenize_naive(const CanonicalMesh& mesh) {
  NaiveSequence seq;
  seq.items.reserve(3 * mesh.face_count());
  for (const Face& f : mesh.faces()) seq.items.insert(seq.items.end(), f.begin(), f.end());
  return seq;
}

CanonicalMesh detokenize_naive(const NaiveSequence& seq, std::span<const GridPoint> vertices,
                               UpAxis up) {
  if (seq.items.size() % 3 != 0) {
    throw SequenceError(seq.items.size(), "length " + std::to_string(seq.items.size()) +
                                              " is not a multiple of 3");
  }
  std::vector<std::array<VertexId, 3>> faces;
  faces.reserve(seq.face_count());
  for (std::size_t i = 0; i < seq.items.size(); i += 3) {
    Face f{seq.items[i], seq.items[i + 1], seq.items[i + 2]};
    for (std::size_t c = 0; c < 3; ++c) {
      if (f[c] >= vertices.size()) {
        throw SequenceError(i + c, "vertex " + std::to_string(f[c]) + " out of range");
      }
    }
    std::sort(f.begin(), f.end());
    if (f[0] == f[1] || f[1] == f[2]) throw SequenceError(i, "degenerate face");
    faces.push_back(f);
  }
  std::vector<std::size_t> order(faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return faces[a] < faces[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (faces[order[i]] == faces[order[i - 1]]) {
      throw SequenceError(3 * std::max(order[i], order[i - 1]), "face emitted twice");
    }
  }
  return CanonicalMesh::build({vertices.begin(), vertices.end()}, faces, up);
}

std::string to_string(const NaiveSequence& seq) {
  std::string out;
  for (const VertexId v : seq.items) {
    if (!out.empty()) out += ' ';
    out += 'v';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace amt
