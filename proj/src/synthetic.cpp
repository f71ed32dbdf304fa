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

#include "amt/synthetic.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace amt {
namespace {

using Point = std::array<double, 3>;
using Tri = std::array<std::int32_t, 3>;

// Lattice extent kept by every lattice generator; see header.
constexpr int kLattice = 64;

// Generators think in (x, y, z) with z vertical and emit OBJ's y-up frame.
RawMesh assemble(const std::vector<Point>& points, const std::vector<Tri>& tris) {
  RawMesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(points.size()), 3);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    mesh.vertices(r, 0) = points[i][0];
    mesh.vertices(r, 1) = points[i][2];
    mesh.vertices(r, 2) = points[i][1];
  }
  mesh.faces.resize(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (int c = 0; c < 3; ++c) mesh.faces(static_cast<Eigen::Index>(i), c) = tris[i][c];
  }
  return mesh;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Uniform draw in [0, n). Modulo bias is irrelevant here; what matters is
// that the stream is identical on every standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

RawMesh strip(int n) {
  require(n >= 1, "strip needs n >= 1");
  std::vector<Point> points;
  for (int i = 0; i < n + 2; ++i) {
    points.push_back({double(i % 2), double(i % kLattice), double(i / kLattice)});
  }
  std::vector<Tri> tris;
  for (int i = 0; i < n; ++i) tris.push_back({i, i + 1, i + 2});
  return assemble(points, tris);
}

RawMesh fan(int n) {
  require(n >= 1, "fan needs n >= 1");
  std::vector<Point> points{{0, 0, 1}};
  for (int i = 0; i < n + 1; ++i) {
    points.push_back({double(i % kLattice), double(2 * (i / kLattice) + 1), 0});
  }
  std::vector<Tri> tris;
  for (int i = 0; i < n; ++i) tris.push_back({0, i + 1, i + 2});
  return assemble(points, tris);
}

RawMesh grid(int width, int height) {
  require(width >= 1 && height >= 1, "grid needs width, height >= 1");
  const auto id = [&](int i, int j) { return j * (width + 1) + i; };
  std::vector<Point> points;
  for (int j = 0; j <= height; ++j) {
    for (int i = 0; i <= width; ++i) points.push_back({double(i), double(j), 0});
  }
  std::vector<Tri> tris;
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      tris.push_back({a, b, c});
      tris.push_back({a, c, d});
    }
  }
  return assemble(points, tris);
}

RawMesh icosphere(int subdivisions) {
  require(subdivisions >= 0 && subdivisions <= 7, "icosphere needs 0 <= s <= 7");
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Point> points{{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                            {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                            {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  const auto normalize = [](Point p) {
    const double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return Point{p[0] / len, p[1] / len, p[2] / len};
  };
  for (auto& p : points) p = normalize(p);
  std::vector<Tri> tris{{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                        {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                        {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                        {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<int, int>, int> midpoints;
    const auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      const auto [it, inserted] = midpoints.try_emplace(key, int(points.size()));
      if (inserted) {
        const Point& p = points[a];
        const Point& q = points[b];
        points.push_back(normalize({p[0] + q[0], p[1] + q[1], p[2] + q[2]}));
      }
      return it->second;
    };
    std::vector<Tri> next;
    next.reserve(tris.size() * 4);
    for (const Tri& f : tris) {
      const int ab = midpoint(f[0], f[1]);
      const int bc = midpoint(f[1], f[2]);
      const int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }
  return assemble(points, tris);
}

RawMesh soup(int n, std::uint64_t seed) {
  require(n >= 1 && n <= 50000, "soup needs 1 <= n <= 50000");
  std::mt19937_64 rng(seed);
  std::set<std::array<int, 3>> taken;
  std::vector<Point> points;
  while (points.size() < 3 * static_cast<std::size_t>(n)) {
    const std::array<int, 3> p{int(draw(rng, kLattice)), int(draw(rng, kLattice)),
                               int(draw(rng, kLattice))};
    if (taken.insert(p).second) points.push_back({double(p[0]), double(p[1]), double(p[2])});
  }
  std::vector<Tri> tris;
  for (int i = 0; i < n; ++i) tris.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  return assemble(points, tris);
}

RawMesh random_triangulation(int width, int height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (width == 0) width = 1 + int(draw(rng, 9));
  if (height == 0) height = 1 + int(draw(rng, 9));
  require(width >= 1 && height >= 1 && width < kLattice && height < kLattice,
          "random_triangulation needs 1 <= width, height < 64");

  std::vector<Point> points;
  for (int j = 0; j <= height; ++j) {
    for (int i = 0; i <= width; ++i) points.push_back({double(i), double(j), double(draw(rng, 16))});
  }
  const auto id = [&](int i, int j) { return j * (width + 1) + i; };
  std::vector<Tri> tris;
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) {
      const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
      if (draw(rng, 2)) {
        tris.push_back({a, b, c});
        tris.push_back({a, c, d});
      } else {
        tris.push_back({a, b, d});
        tris.push_back({b, c, d});
      }
    }
  }
  std::erase_if(tris, [&](const Tri&) { return draw(rng, 5) == 0; });
  if (tris.empty()) tris.push_back({id(0, 0), id(1, 0), id(1, 1)});

  // Fins on existing edges make some edges non-manifold; a few arbitrary
  // triangles over existing vertices add long-range connectivity.
  const std::size_t extras = 1 + tris.size() / 8;
  for (std::size_t k = 0; k < extras; ++k) {
    if (draw(rng, 3) == 0) {
      const auto n = static_cast<std::uint64_t>(points.size());
      const int a = int(draw(rng, n)), b = int(draw(rng, n)), c = int(draw(rng, n));
      if (a != b && b != c && a != c) tris.push_back({a, b, c});
      continue;
    }
    const Tri host = tris[draw(rng, tris.size())];
    const int corner = int(draw(rng, 3));
    points.push_back({double(draw(rng, width + 1)), double(draw(rng, height + 1)),
                      double(20 + draw(rng, 20))});
    tris.push_back({host[corner], host[(corner + 1) % 3], int(points.size()) - 1});
  }

  std::vector<int> perm(points.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);
  std::vector<Point> shuffled(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) shuffled[perm[i]] = points[i];
  for (Tri& t : tris) {
    for (int& v : t) v = perm[v];
    std::rotate(t.begin(), t.begin() + draw(rng, 3), t.end());
  }
  for (std::size_t i = tris.size(); i > 1; --i) std::swap(tris[i - 1], tris[draw(rng, i)]);
  return assemble(shuffled, tris);
}

int parse_int(std::string_view s, std::string_view key) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < 0 || v > 1'000'000'000) {
    throw std::invalid_argument("bad value for " + std::string(key) + ": '" + std::string(s) + "'");
  }
  return int(v);
}

}  // namespace

std::string_view to_string(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::strip:
      return "strip";
    case SyntheticKind::fan:
      return "fan";
    case SyntheticKind::grid:
      return "grid";
    case SyntheticKind::icosphere:
      return "icosphere";
    case SyntheticKind::soup:
      return "soup";
    case SyntheticKind::random_triangulation:
      return "random_triangulation";
  }
  return "unknown";
}

SyntheticKind parse_synthetic_kind(std::string_view name) {
  for (const auto kind : {SyntheticKind::strip, SyntheticKind::fan, SyntheticKind::grid,
                          SyntheticKind::icosphere, SyntheticKind::soup,
                          SyntheticKind::random_triangulation}) {
    if (name == to_string(kind)) return kind;
  }
  if (name == "random") return SyntheticKind::random_triangulation;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

RawMesh generate_synthetic(SyntheticKind kind, const SyntheticParams& params,
                           std::uint64_t seed) {
  switch (kind) {
    case SyntheticKind::strip:
      return strip(params.n);
    case SyntheticKind::fan:
      return fan(params.n);
    case SyntheticKind::grid:
      return grid(params.width, params.height);
    case SyntheticKind::icosphere:
      return icosphere(params.subdivisions);
    case SyntheticKind::soup:
      return soup(params.n, seed);
    case SyntheticKind::random_triangulation:
      return random_triangulation(params.width, params.height, seed);
  }
  throw std::invalid_argument("unknown generator");
}

std::string SyntheticSpec::label() const {
  std::string out = "gen/" + std::string(to_string(kind));
  switch (kind) {
    case SyntheticKind::strip:
    case SyntheticKind::fan:
      out += "/n=" + std::to_string(params.n);
      break;
    case SyntheticKind::grid:
      out += "/w=" + std::to_string(params.width) + "/h=" + std::to_string(params.height);
      break;
    case SyntheticKind::icosphere:
      out += "/s=" + std::to_string(params.subdivisions);
      break;
    case SyntheticKind::soup:
      out += "/n=" + std::to_string(params.n) + "/seed=" + std::to_string(seed);
      break;
    case SyntheticKind::random_triangulation:
      out += "/w=" + std::to_string(params.width) + "/h=" + std::to_string(params.height) +
             "/seed=" + std::to_string(seed);
      break;
  }
  return out;
}

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t') ++pos;
    if (pos > start) words.push_back(text.substr(start, pos - start));
  }
  if (words.empty()) throw std::invalid_argument("empty generator spec");

  SyntheticSpec spec;
  spec.kind = parse_synthetic_kind(words[0]);
  for (std::size_t i = 1; i < words.size(); ++i) {
    const auto eq = words[i].find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value, got '" + std::string(words[i]) + "'");
    }
    const auto key = words[i].substr(0, eq);
    const auto value = words[i].substr(eq + 1);
    if (key == "n") {
      spec.params.n = parse_int(value, key);
    } else if (key == "w") {
      spec.params.width = parse_int(value, key);
    } else if (key == "h") {
      spec.params.height = parse_int(value, key);
    } else if (key == "s") {
      spec.params.subdivisions = parse_int(value, key);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else {
      throw std::invalid_argument("unknown generator key '" + std::string(key) + "'");
    }
  }
  return spec;
}

}  // namespace amt
