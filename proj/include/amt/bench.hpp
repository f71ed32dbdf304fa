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
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "amt/canonical.hpp"
#include "amt/encoding.hpp"
#include "amt/synthetic.hpp"

namespace amt {

// An OBJ file on disk or a generator invocation.
using MeshSource = std::variant<std::filesystem::path, SyntheticSpec>;

std::string label(const MeshSource& source);

// A directory yields every *.obj below it (sorted); an .obj file yields
// itself; any other file is read as a manifest with one source per line:
// a path relative to the manifest, or "gen <kind> key=value ...". Lines
// starting with '#' are comments.
std::vector<MeshSource> collect_sources(const std::filesystem::path& path);

struct CorpusConfig {
  QuantizationSpec quantization;
  UpAxis up_axis = UpAxis::y;
  // Meshes with more canonical faces than this are skipped.
  std::size_t max_faces = 1600;
  unsigned jobs = 1;
};

// Loads, quantizes and canonicalizes one source.
CanonicalMesh prepare(const MeshSource& source, const CorpusConfig& config);

struct MeshRecord {
  std::string source;
  std::size_t vertices = 0;
  std::size_t faces = 0;
  std::size_t amt_length = 0;    // payload tokens
  std::size_t naive_length = 0;  // payload tokens, 9 per face
  std::size_t restarts = 0;
  double ratio = 0;  // amt_length / naive_length
  double tokenize_seconds = 0;
};

// Measures one canonical mesh. Requires at least one face.
MeshRecord measure(const CanonicalMesh& mesh, std::string source, const Vocabulary& vocab);

struct MeshFailure {
  std::string source;
  std::string message;
};

struct Histogram {
  double lo = 0;
  double hi = 1;
  std::vector<std::size_t> counts;

  double bin_width() const { return (hi - lo) / static_cast<double>(counts.size()); }
};

// Equal-width bins over [lo, hi); values outside land in the end bins.
Histogram make_histogram(std::span<const double> values, double lo, double hi,
                         std::size_t bins);

struct CorpusReport {
  CorpusConfig config;
  std::vector<MeshRecord> records;  // sorted by source
  std::vector<MeshFailure> failures;
  std::size_t skipped_over_cap = 0;
  // Mean of the per-mesh ratios: the headline figure.
  double macro_avg_ratio = 0;
  // Total AMT length over total naive length.
  double micro_ratio = 0;
  std::size_t total_faces = 0;
  std::size_t total_amt_length = 0;
  std::size_t total_naive_length = 0;
  Histogram ratio_histogram;
  Histogram face_histogram;
  double wall_seconds = 0;
};

double macro_average(std::span<const MeshRecord> records);

// Runs every source through quantize -> canonicalize -> both tokenizers ->
// encode. Per-mesh failures are recorded and the run continues. With
// config.jobs > 1 meshes are processed concurrently; output order does not
// depend on scheduling.
CorpusReport run_corpus(std::span<const MeshSource> sources, const CorpusConfig& config);

// Hand-built sequence checked by the round-trip suite: it must detokenize and
// then re-tokenize to itself.
struct InjectedSequence {
  std::string name;
  AmtSequence sequence;
  std::vector<GridPoint> vertices;
};

using RoundTripCase = std::variant<std::filesystem::path, SyntheticSpec, InjectedSequence>;

struct RoundTripResult {
  std::string source;
  bool passed = false;
  std::string stage;    // step that failed, empty on success
  std::string message;
  std::string sequence;  // debug text of the AMT sequence, if one was produced
};

struct RoundTripReport {
  std::vector<RoundTripResult> results;

  std::size_t passed() const;
  std::size_t failed() const { return results.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

// For every case checks detokenize(tokenize(m)) == m for both codecs,
// decode(encode(s)) reproduces the token ids, and the binary form round
// trips. The face cap in `config` is not applied.
RoundTripReport run_roundtrip_suite(std::span<const RoundTripCase> cases,
                                    const CorpusConfig& config);
RoundTripReport run_roundtrip_suite(std::span<const MeshSource> sources,
                                    const CorpusConfig& config);

}  // namespace amt
