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

#include <cstdint>
#include <string>
#include <string_view>

#include "amt/mesh_io.hpp"

namespace amt {

enum class SyntheticKind { strip, fan, grid, icosphere, soup, random_triangulation };

std::string_view to_string(SyntheticKind kind);
SyntheticKind parse_synthetic_kind(std::string_view name);

struct SyntheticParams {
  int n = 1;             // strip, fan, soup: face count
  int width = 0;         // grid, random_triangulation: cells along x (0 = pick from seed)
  int height = 0;        // grid, random_triangulation: cells along y (0 = pick from seed)
  int subdivisions = 0;  // icosphere
};

// Generators write OBJ-frame meshes (y up). Lattice-based kinds keep every
// coordinate within 64 steps, so the default 128-bin tight quantization
// never merges two of their vertices.
//
//   strip                 n faces (i, i+1, i+2), n + 2 vertices
//   fan                   n faces around one apex, n + 2 vertices
//   grid                  2 * width * height faces
//   icosphere             20 * 4^subdivisions faces on the unit sphere
//   soup                  n pairwise vertex-disjoint triangles
//   random_triangulation  lattice triangulation with random diagonals,
//                         deleted faces, non-manifold fins and shuffled order
//
// Deterministic for a given seed. Throws std::invalid_argument on bad params.
RawMesh generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                           std::uint64_t seed = 0);

// A generator invocation, used as a corpus source.
struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::strip;
  SyntheticParams params;
  std::uint64_t seed = 0;

  RawMesh generate() const { return generate_synthetic(kind, params, seed); }
  // e.g. "gen/grid/w=10/h=4"
  std::string label() const;
};

// Parses "<kind> [key=value ...]" with keys n, w, h, s, seed, e.g.
// "strip n=100" or "soup n=10 seed=7".
SyntheticSpec parse_synthetic_spec(std::string_view text);

}  // namespace amt
