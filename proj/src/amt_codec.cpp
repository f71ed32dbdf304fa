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
#include <charconv>

namespace amt {

TokenizeTrace tokenize_traced(const CanonicalMesh& mesh) {
  if (mesh.face_count() == 0) throw Error("cannot tokenize a mesh without faces");

  TokenizeTrace trace;
  auto& items = trace.sequence.items;
  trace.sequence.source_face_count = mesh.face_count();
  trace.visit_order.reserve(mesh.face_count());
  items.reserve(mesh.face_count() + 2);

  UnvisitedFaces unvisited(mesh.face_count());
  const auto emit_face = [&](FaceId f) {
    for (const VertexId v : mesh.faces()[f]) items.push_back(AmtItem::vertex(v));
    trace.visit_order.push_back(f);
  };

  emit_face(unvisited.pop_first());
  while (!unvisited.empty()) {
    if (items.back().is_restart()) {
      emit_face(unvisited.pop_first());
      continue;
    }
    // A run always holds at least three vertices, so both are vertex items.
    const VertexId p = items[items.size() - 2].index();
    const VertexId q = items.back().index();
    const auto candidates = unvisited_third_vertices(mesh, Edge(p, q), unvisited);
    if (candidates.empty()) {
      items.push_back(AmtItem::restart());
      continue;
    }
    const ThirdVertex& next = candidates.front();
    items.push_back(AmtItem::vertex(next.vertex));
    unvisited.erase(next.face);
    trace.visit_order.push_back(next.face);
  }
  return trace;
}

AmtSequence tokenize(const CanonicalMesh& mesh) { return tokenize_traced(mesh).sequence; }

CanonicalMesh detokenize(const AmtSequence& seq, std::span<const GridPoint> vertices,
                         UpAxis up) {
  const auto& items = seq.items;
  if (items.empty()) throw SequenceError(0, "empty sequence");

  struct Emitted {
    Face face;
    std::size_t position;
  };
  std::vector<Emitted> emitted;
  emitted.reserve(items.size());

  std::size_t run = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const AmtItem item = items[i];
    if (item.is_restart()) {
      if (i == 0) throw SequenceError(i, "sequence begins with a restart");
      if (items[i - 1].is_restart()) throw SequenceError(i, "consecutive restarts");
      if (run < 3) {
        throw SequenceError(i, "restart after only " + std::to_string(run) + " vertices");
      }
      run = 0;
      continue;
    }
    if (item.index() >= vertices.size()) {
      throw SequenceError(i, "vertex " + std::to_string(item.index()) + " out of range (" +
                                 std::to_string(vertices.size()) + " vertices)");
    }
    if (++run < 3) continue;
    const VertexId p = items[i - 2].index();
    const VertexId q = items[i - 1].index();
    const VertexId v = item.index();
    if (v == p || v == q || p == q) throw SequenceError(i, "degenerate face");
    Face face{p, q, v};
    std::sort(face.begin(), face.end());
    emitted.push_back({face, i});
  }
  if (run < 3) {
    throw SequenceError(items.size() - 1,
                        items.back().is_restart()
                            ? std::string("sequence ends with a restart")
                            : "sequence ends after only " + std::to_string(run) + " vertices");
  }

  std::vector<Emitted> sorted = emitted;
  std::sort(sorted.begin(), sorted.end(), [](const Emitted& a, const Emitted& b) {
    return a.face != b.face ? a.face < b.face : a.position < b.position;
  });
  std::size_t repeat_at = items.size();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].face == sorted[i - 1].face) {
      repeat_at = std::min(repeat_at, sorted[i].position);
    }
  }
  if (repeat_at != items.size()) throw SequenceError(repeat_at, "face emitted twice");

  if (emitted.size() != seq.source_face_count) {
    throw SequenceError(items.size() - 1,
                        "sequence encodes " + std::to_string(emitted.size()) +
                            " faces, header says " + std::to_string(seq.source_face_count));
  }

  std::vector<std::array<VertexId, 3>> faces;
  faces.reserve(emitted.size());
  for (const auto& e : emitted) faces.push_back(e.face);
  return CanonicalMesh::build({vertices.begin(), vertices.end()}, faces, up);
}

SequenceStats sequence_stats(const AmtSequence& seq) {
  SequenceStats stats;
  for (const AmtItem item : seq.items) {
    if (item.is_restart()) {
      ++stats.restart_items;
    } else {
      ++stats.vertex_items;
    }
  }
  const std::size_t opened = 2 * (stats.restart_items + 1);
  stats.faces_encoded = stats.vertex_items >= opened ? stats.vertex_items - opened : 0;
  return stats;
}

std::string to_string(const AmtSequence& seq) {
  std::string out;
  for (const AmtItem item : seq.items) {
    if (!out.empty()) out += ' ';
    if (item.is_restart()) {
      out += '&';
    } else {
      out += 'v';
      out += std::to_string(item.index());
    }
  }
  return out;
}

AmtSequence parse_amt_text(std::string_view text) {
  AmtSequence seq;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(pos, end - pos);
    pos = end;
    if (tok == "&") {
      seq.items.push_back(AmtItem::restart());
      continue;
    }
    VertexId v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
    if (tok.size() < 2 || tok[0] != 'v' || ec != std::errc() ||
        ptr != tok.data() + tok.size() || AmtItem::vertex(v).is_restart()) {
      throw SequenceError(seq.items.size(), "bad item '" + std::string(tok) + "'");
    }
    seq.items.push_back(AmtItem::vertex(v));
  }
  seq.source_face_count = sequence_stats(seq).faces_encoded;
  return seq;
}

}  // namespace amt
