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

#include "amt/mesh_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace amt {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

// Splits a line into whitespace-separated fields.
std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_coordinate(std::string_view s, std::size_t line) {
  double value = 0;
  // from_chars rejects a leading '+', which some exporters write.
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw ParseError(line, "invalid coordinate '" + std::string(s) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, "non-finite coordinate '" + std::string(s) + "'");
  }
  return value;
}

// Resolves the position slot of a `v`, `v/vt`, `v//vn` or `v/vt/vn` reference
// to a zero-based index. Range checking against the final vertex count happens
// after the whole file is read.
std::int64_t parse_reference(std::string_view s, std::size_t vertices_so_far,
                             std::size_t line) {
  const std::string_view slot = s.substr(0, s.find('/'));
  std::int64_t value = 0;
  const auto [end, ec] =
      std::from_chars(slot.data(), slot.data() + slot.size(), value);
  if (ec != std::errc() || end != slot.data() + slot.size() || slot.empty()) {
    throw ParseError(line, "invalid face reference '" + std::string(s) + "'");
  }
  if (value == 0) throw ParseError(line, "face reference 0 is not valid in OBJ");
  if (value > 0) return value - 1;
  const std::int64_t resolved = static_cast<std::int64_t>(vertices_so_far) + value;
  if (resolved < 0) {
    throw ParseError(line, "relative face reference " + std::to_string(value) +
                               " before vertex 1");
  }
  return resolved;
}

template <typename Scalar>
void append_number(std::string& out, Scalar value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, end);
}

template <typename Scalar>
std::string write_obj_impl(const Mesh<Scalar>& mesh) {
  std::string out;
  out.reserve(static_cast<std::size_t>(mesh.vertex_count() * 24 + mesh.face_count() * 16));
  for (Eigen::Index v = 0; v < mesh.vertex_count(); ++v) {
    out += 'v';
    for (int c = 0; c < 3; ++c) {
      out += ' ';
      append_number(out, mesh.vertices(v, c));
    }
    out += '\n';
  }
  for (Eigen::Index f = 0; f < mesh.face_count(); ++f) {
    out += 'f';
    for (int c = 0; c < 3; ++c) {
      out += ' ';
      append_number(out, mesh.faces(f, c) + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

ParseResult parse_obj(std::string_view text, const ParseOptions& options) {
  ParseResult result;
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::int64_t, 3>> faces;
  std::vector<std::size_t> face_lines;
  std::vector<std::int64_t> corners;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto f = fields(line);
    if (f.empty() || f[0].front() == '#') continue;

    if (f[0] == "v") {
      if (f.size() < 4) throw ParseError(line_no, "vertex needs 3 coordinates");
      vertices.push_back({parse_coordinate(f[1], line_no),
                          parse_coordinate(f[2], line_no),
                          parse_coordinate(f[3], line_no)});
    } else if (f[0] == "f") {
      if (f.size() < 4) throw ParseError(line_no, "face needs at least 3 vertices");
      corners.clear();
      for (std::size_t i = 1; i < f.size(); ++i) {
        corners.push_back(parse_reference(f[i], vertices.size(), line_no));
      }
      if (corners.size() > 3) ++result.report.triangulated_polygons;
      for (std::size_t i = 1; i + 1 < corners.size(); ++i) {
        const std::array<std::int64_t, 3> tri{corners[0], corners[i], corners[i + 1]};
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
          if (options.degenerate == DegeneratePolicy::reject) {
            throw ParseError(line_no, "degenerate face");
          }
          ++result.report.dropped_degenerate;
          continue;
        }
        faces.push_back(tri);
        face_lines.push_back(line_no);
      }
    } else {
      ++result.report.ignored_records[std::string(f[0])];
    }
  }

  if (vertices.empty()) throw ParseError(0, "empty mesh: no vertices");
  const auto n = static_cast<std::int64_t>(vertices.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto idx : faces[i]) {
      if (idx >= n) {
        throw ParseError(face_lines[i], "face index " + std::to_string(idx + 1) +
                                            " out of range (" + std::to_string(n) +
                                            " vertices)");
      }
    }
  }

  RawMesh& mesh = result.mesh;
  mesh.vertices.resize(n, 3);
  for (Eigen::Index v = 0; v < n; ++v) {
    for (int c = 0; c < 3; ++c) mesh.vertices(v, c) = vertices[v][c];
  }
  mesh.faces.resize(static_cast<Eigen::Index>(faces.size()), 3);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      mesh.faces(static_cast<Eigen::Index>(i), c) = static_cast<std::int32_t>(faces[i][c]);
    }
  }
  return result;
}

ParseResult load_obj(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  try {
    return parse_obj(buf.str(), options);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.detail());
  }
}

std::string write_obj(const RawMesh& mesh) { return write_obj_impl(mesh); }
std::string write_obj(const GridMesh& mesh) { return write_obj_impl(mesh); }

void save_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

RawMesh dequantize(const GridMesh& mesh, const Box& box, int bins) {
  if (bins < 2) throw Error("quantization needs at least 2 bins");
  const Eigen::Array3d step = (box.max - box.min).array() / bins;
  RawMesh out;
  out.vertices = ((mesh.vertices.cast<double>().array().rowwise() * step.transpose())
                      .rowwise() +
                  box.min.array().transpose())
                     .matrix();
  out.faces = mesh.faces;
  return out;
}

}  // namespace amt
