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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "amt/mesh_io.hpp"

namespace amt {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

// Integer grid point stored as (z, y, x), z being the vertical axis, so that
// the natural lexicographic order of the array is the canonical vertex order.
using GridPoint = std::array<std::int32_t, 3>;

// Vertex indices of a triangle, strictly increasing.
using Face = std::array<VertexId, 3>;

// Which OBJ axis is treated as vertical when building the (z, y, x) key.
// With `y`, OBJ (x, y, z) becomes key (y, z, x); with `z` the key is (z, y, x).
enum class UpAxis { y, z };

GridPoint to_sort_key(std::int32_t x, std::int32_t y, std::int32_t z, UpAxis up);
// Inverse of to_sort_key(), returning OBJ-frame (x, y, z).
std::array<std::int32_t, 3> from_sort_key(const GridPoint& key, UpAxis up);

// Unordered vertex pair.
struct Edge {
  VertexId lo;
  VertexId hi;

  Edge(VertexId a, VertexId b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
  std::uint64_t key() const { return (std::uint64_t{lo} << 32) | hi; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CanonicalizeStats {
  std::size_t merged_vertices = 0;
  std::size_t dropped_degenerate = 0;
  std::size_t dropped_duplicate = 0;
};

// Unique form of a mesh: vertices deduplicated and strictly increasing in
// (z, y, x); faces as sorted triples in a strictly increasing list; an edge
// index from every unordered edge to its incident faces. Immutable.
class CanonicalMesh {
 public:
  CanonicalMesh() = default;

  // Merges equal points, sorts, reindexes `faces`, sorts each triple, drops
  // degenerate and repeated faces, then sorts the face list. Face indices must
  // be valid for `points`.
  static CanonicalMesh build(std::vector<GridPoint> points,
                             std::span<const std::array<VertexId, 3>> faces,
                             UpAxis up = UpAxis::y);

  const std::vector<GridPoint>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  UpAxis up_axis() const { return up_; }
  const CanonicalizeStats& stats() const { return stats_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }

  // Faces containing both endpoints of `edge`, ascending.
  std::span<const FaceId> incident_faces(Edge edge) const;
  std::size_t edge_count() const;

  // Equality of vertex tables, face lists and up axis. Stats are ignored.
  friend bool operator==(const CanonicalMesh& a, const CanonicalMesh& b) {
    return a.up_ == b.up_ && a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
  }

 private:
  void build_edge_index();

  std::vector<GridPoint> vertices_;
  std::vector<Face> faces_;
  UpAxis up_ = UpAxis::y;
  CanonicalizeStats stats_;
  // Sorted edge keys, one entry per (edge, incident face), with the face ids
  // in a parallel array.
  std::vector<std::uint64_t> edge_keys_;
  std::vector<FaceId> edge_faces_;
};

CanonicalMesh canonicalize(const GridMesh& mesh, UpAxis up = UpAxis::y);

// OBJ-frame integer mesh with the canonical vertex and face order.
GridMesh to_grid_mesh(const CanonicalMesh& mesh);
std::string write_obj(const CanonicalMesh& mesh);

// Same mesh with vertices no face references removed.
CanonicalMesh drop_unreferenced_vertices(const CanonicalMesh& mesh);

// Set of face ids that have not been consumed yet. Popping the lowest id is
// amortized O(1) because ids only ever leave the set.
class UnvisitedFaces {
 public:
  explicit UnvisitedFaces(std::size_t face_count)
      : visited_(face_count, 0), remaining_(face_count) {}

  bool contains(FaceId f) const { return f < visited_.size() && !visited_[f]; }
  bool empty() const { return remaining_ == 0; }
  std::size_t size() const { return remaining_; }

  void erase(FaceId f) {
    if (contains(f)) {
      visited_[f] = 1;
      --remaining_;
    }
  }

  // Removes and returns the lowest unvisited id. Requires !empty().
  FaceId pop_first() {
    while (visited_[cursor_]) ++cursor_;
    const auto f = static_cast<FaceId>(cursor_);
    erase(f);
    return f;
  }

 private:
  std::vector<std::uint8_t> visited_;
  std::size_t remaining_;
  std::size_t cursor_ = 0;
};

struct ThirdVertex {
  VertexId vertex;
  FaceId face;
};

// Unvisited faces on `edge` paired with their third vertex, ascending by
// vertex index.
std::vector<ThirdVertex> unvisited_third_vertices(const CanonicalMesh& mesh,
                                                  Edge edge,
                                                  const UnvisitedFaces& unvisited);

// Third vertices of the unvisited faces incident to `edge`, ascending. Since
// vertices are stored in coordinate order, index order is coordinate order.
std::vector<VertexId> adjacent_third_vertices(const CanonicalMesh& mesh, Edge edge,
                                              const UnvisitedFaces& unvisited);

}  // namespace amt
