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

#include "amt/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace amt {

GridPoint to_sort_key(std::int32_t x, std::int32_t y, std::int32_t z, UpAxis up) {
  if (up == UpAxis::y) return {y, z, x};
  return {z, y, x};
}

std::array<std::int32_t, 3> from_sort_key(const GridPoint& key, UpAxis up) {
  if (up == UpAxis::y) return {key[2], key[0], key[1]};
  return {key[2], key[1], key[0]};
}

CanonicalMesh CanonicalMesh::build(std::vector<GridPoint> points,
                                   std::span<const std::array<VertexId, 3>> faces,
                                   UpAxis up) {
  CanonicalMesh mesh;
  mesh.up_ = up;

  const std::size_t n = points.size();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return points[a] < points[b]; });

  std::vector<VertexId> remap(n);
  mesh.vertices_.reserve(n);
  for (const VertexId old : order) {
    if (mesh.vertices_.empty() || mesh.vertices_.back() != points[old]) {
      mesh.vertices_.push_back(points[old]);
    }
    remap[old] = static_cast<VertexId>(mesh.vertices_.size() - 1);
  }
  mesh.stats_.merged_vertices = n - mesh.vertices_.size();

  mesh.faces_.reserve(faces.size());
  for (const auto& f : faces) {
    for (const VertexId v : f) {
      if (v >= n) {
        throw Error("face references vertex " + std::to_string(v) + " of " +
                    std::to_string(n));
      }
    }
    Face t{remap[f[0]], remap[f[1]], remap[f[2]]};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      ++mesh.stats_.dropped_degenerate;
      continue;
    }
    mesh.faces_.push_back(t);
  }
  std::sort(mesh.faces_.begin(), mesh.faces_.end());
  const auto last = std::unique(mesh.faces_.begin(), mesh.faces_.end());
  mesh.stats_.dropped_duplicate = static_cast<std::size_t>(mesh.faces_.end() - last);
  mesh.faces_.erase(last, mesh.faces_.end());

  mesh.build_edge_index();
  return mesh;
}

void CanonicalMesh::build_edge_index() {
  std::vector<std::pair<std::uint64_t, FaceId>> entries;
  entries.reserve(faces_.size() * 3);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    const auto id = static_cast<FaceId>(i);
    entries.emplace_back(Edge(f[0], f[1]).key(), id);
    entries.emplace_back(Edge(f[0], f[2]).key(), id);
    entries.emplace_back(Edge(f[1], f[2]).key(), id);
  }
  std::sort(entries.begin(), entries.end());
  edge_keys_.resize(entries.size());
  edge_faces_.resize(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    edge_keys_[i] = entries[i].first;
    edge_faces_[i] = entries[i].second;
  }
}

std::span<const FaceId> CanonicalMesh::incident_faces(Edge edge) const {
  const auto [lo, hi] = std::equal_range(edge_keys_.begin(), edge_keys_.end(), edge.key());
  const auto first = static_cast<std::size_t>(lo - edge_keys_.begin());
  const auto count = static_cast<std::size_t>(hi - lo);
  return std::span<const FaceId>(edge_faces_).subspan(first, count);
}

std::size_t CanonicalMesh::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < edge_keys_.size(); ++i) {
    if (i == 0 || edge_keys_[i] != edge_keys_[i - 1]) ++count;
  }
  return count;
}

CanonicalMesh canonicalize(const GridMesh& mesh, UpAxis up) {
  std::vector<GridPoint> points(static_cast<std::size_t>(mesh.vertex_count()));
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
    points[v] = to_sort_key(mesh.vertices(v, 0), mesh.vertices(v, 1), mesh.vertices(v, 2), up);
  }
  std::vector<std::array<VertexId, 3>> faces(static_cast<std::size_t>(mesh.face_count()));
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const std::int32_t idx = mesh.faces(f, c);
      if (idx < 0) throw Error("negative vertex index in face " + std::to_string(f));
      faces[f][c] = static_cast<VertexId>(idx);
    }
  }
  return CanonicalMesh::build(std::move(points), faces, up);
}

GridMesh to_grid_mesh(const CanonicalMesh& mesh) {
  GridMesh out;
  out.vertices.resize(static_cast<Eigen::Index>(mesh.vertex_count()), 3);
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    const auto xyz = from_sort_key(mesh.vertices()[v], mesh.up_axis());
    for (int c = 0; c < 3; ++c) out.vertices(static_cast<Eigen::Index>(v), c) = xyz[c];
  }
  out.faces.resize(static_cast<Eigen::Index>(mesh.face_count()), 3);
  for (std::size_t f = 0; f < mesh.face_count(); ++f) {
    for (int c = 0; c < 3; ++c) {
      out.faces(static_cast<Eigen::Index>(f), c) = static_cast<std::int32_t>(mesh.faces()[f][c]);
    }
  }
  return out;
}

std::string write_obj(const CanonicalMesh& mesh) { return write_obj(to_grid_mesh(mesh)); }

CanonicalMesh drop_unreferenced_vertices(const CanonicalMesh& mesh) {
  std::vector<std::uint8_t> used(mesh.vertex_count(), 0);
  for (const Face& f : mesh.faces()) {
    for (const VertexId v : f) used[v] = 1;
  }
  std::vector<VertexId> remap(mesh.vertex_count());
  std::vector<GridPoint> points;
  for (std::size_t v = 0; v < mesh.vertex_count(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<VertexId>(points.size());
    points.push_back(mesh.vertices()[v]);
  }
  std::vector<std::array<VertexId, 3>> faces;
  faces.reserve(mesh.face_count());
  for (const Face& f : mesh.faces()) faces.push_back({remap[f[0]], remap[f[1]], remap[f[2]]});
  return CanonicalMesh::build(std::move(points), faces, mesh.up_axis());
}

std::vector<ThirdVertex> unvisited_third_vertices(const CanonicalMesh& mesh, Edge edge,
                                                  const UnvisitedFaces& unvisited) {
  std::vector<ThirdVertex> out;
  for (const FaceId f : mesh.incident_faces(edge)) {
    if (!unvisited.contains(f)) continue;
    const Face& t = mesh.faces()[f];
    // Exactly one corner of an incident face lies off the edge.
    const VertexId third = t[0] != edge.lo && t[0] != edge.hi   ? t[0]
                           : t[1] != edge.lo && t[1] != edge.hi ? t[1]
                                                                : t[2];
    out.push_back({third, f});
  }
  std::sort(out.begin(), out.end(),
            [](const ThirdVertex& a, const ThirdVertex& b) { return a.vertex < b.vertex; });
  return out;
}

std::vector<VertexId> adjacent_third_vertices(const CanonicalMesh& mesh, Edge edge,
                                              const UnvisitedFaces& unvisited) {
  const auto candidates = unvisited_third_vertices(mesh, edge, unvisited);
  std::vector<VertexId> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(c.vertex);
  return out;
}

}  // namespace amt
