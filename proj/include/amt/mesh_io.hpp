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
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "amt/error.hpp"

namespace amt {

// Triangle mesh with one vertex per row and one triangle per row. Faces hold
// zero-based row indices into `vertices`.
template <typename Scalar>
struct Mesh {
  using VertexMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor>;
  using FaceMatrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, 3, Eigen::RowMajor>;

  VertexMatrix vertices;
  FaceMatrix faces;

  Eigen::Index vertex_count() const { return vertices.rows(); }
  Eigen::Index face_count() const { return faces.rows(); }

  friend bool operator==(const Mesh& a, const Mesh& b) {
    return a.vertices.rows() == b.vertices.rows() &&
           a.faces.rows() == b.faces.rows() && a.vertices == b.vertices &&
           a.faces == b.faces;
  }
};

// Mesh in model units as read from disk.
using RawMesh = Mesh<double>;
// Mesh whose coordinates are quantization bins in [0, bins - 1].
using GridMesh = Mesh<std::int32_t>;

// Throws amt::Error if a face index is out of range or a face repeats an index.
template <typename Scalar>
void validate(const Mesh<Scalar>& mesh) {
  const auto n = mesh.vertex_count();
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    for (int c = 0; c < 3; ++c) {
      const auto i = mesh.faces(f, c);
      if (i < 0 || i >= n) {
        throw Error("face " + std::to_string(f) + " references vertex " +
                    std::to_string(i) + " of " + std::to_string(n));
      }
    }
    if (mesh.faces(f, 0) == mesh.faces(f, 1) ||
        mesh.faces(f, 1) == mesh.faces(f, 2) ||
        mesh.faces(f, 0) == mesh.faces(f, 2)) {
      throw Error("face " + std::to_string(f) + " is degenerate");
    }
  }
}

// ---------------------------------------------------------------------------
// OBJ
// ---------------------------------------------------------------------------

enum class DegeneratePolicy { drop, reject };

struct ParseOptions {
  DegeneratePolicy degenerate = DegeneratePolicy::drop;
};

struct ParseReport {
  // Record keyword -> occurrences, for every keyword other than `v` and `f`.
  std::map<std::string, std::size_t> ignored_records;
  std::size_t dropped_degenerate = 0;
  // Faces with more than three corners that were fan-triangulated.
  std::size_t triangulated_polygons = 0;
};

struct ParseResult {
  RawMesh mesh;
  ParseReport report;
};

// Parses the `v`/`f` subset of ASCII Wavefront OBJ. Polygons are
// fan-triangulated around their first corner; only the position slot of a
// `v/vt/vn` reference is read. Negative references are resolved against the
// vertices defined so far.
ParseResult parse_obj(std::string_view text, const ParseOptions& options = {});
ParseResult load_obj(const std::filesystem::path& path,
                     const ParseOptions& options = {});

// Coordinates are printed in shortest round-trip form, so integer grids are
// written as plain integers and doubles re-parse bit-exactly.
std::string write_obj(const RawMesh& mesh);
std::string write_obj(const GridMesh& mesh);
void save_text(const std::filesystem::path& path, std::string_view text);

// ---------------------------------------------------------------------------
// Quantization
// ---------------------------------------------------------------------------

enum class BBoxMode {
  // Fixed box [-0.5, 0.5]^3; the mesh is assumed to be normalized already.
  unit_cube_centered,
  // Cube centred on the mesh's bounding box with side equal to its largest
  // extent, so the mesh is scaled uniformly into the grid.
  per_mesh_tight,
};

struct Box {
  Eigen::Vector3d min = Eigen::Vector3d::Constant(-0.5);
  Eigen::Vector3d max = Eigen::Vector3d::Constant(0.5);
};

struct QuantizationSpec {
  int bins = 128;
  BBoxMode bbox_mode = BBoxMode::per_mesh_tight;
  // When set, used verbatim instead of deriving a box from `bbox_mode`.
  std::optional<Box> box;
};

template <typename Scalar>
Box resolve_box(const Mesh<Scalar>& mesh, const QuantizationSpec& spec) {
  if (spec.box) return *spec.box;
  if (spec.bbox_mode == BBoxMode::unit_cube_centered || mesh.vertex_count() == 0) {
    return Box{};
  }
  const Eigen::Vector3d lo =
      mesh.vertices.colwise().minCoeff().template cast<double>().transpose();
  const Eigen::Vector3d hi =
      mesh.vertices.colwise().maxCoeff().template cast<double>().transpose();
  const Eigen::Vector3d center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo).maxCoeff();
  return Box{center.array() - half, center.array() + half};
}

// Maps every coordinate to bin floor((v - min) / extent * bins + 0.5), clamped
// to [0, bins - 1]. Axes with zero extent map to bin 0. Vertices are not
// merged here; see canonicalize().
template <typename Scalar>
GridMesh quantize(const Mesh<Scalar>& mesh, const QuantizationSpec& spec) {
  if (spec.bins < 2) throw Error("quantization needs at least 2 bins");
  const Box box = resolve_box(mesh, spec);
  const Eigen::Array3d extent = box.max - box.min;
  const double bins = spec.bins;
  const Eigen::Array3d scale =
      (extent > 0.0).select(bins / extent, Eigen::Array3d::Zero());

  GridMesh out;
  out.vertices =
      (((mesh.vertices.template cast<double>().rowwise() - box.min.transpose())
            .array()
            .rowwise() *
        scale.transpose()) +
       0.5)
          .floor()
          .max(0.0)
          .min(bins - 1.0)
          .template cast<std::int32_t>()
          .matrix();
  out.faces = mesh.faces;
  return out;
}

// Position of each bin centre in model units. quantize(dequantize(g)) == g
// for any grid produced with the same box and bin count.
RawMesh dequantize(const GridMesh& mesh, const Box& box, int bins);

}  // namespace amt
