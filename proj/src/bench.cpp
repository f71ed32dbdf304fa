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

#include "amt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <chrono>
#include <fstream>
#include <thread>

#include "amt/mesh_io.hpp"

namespace amt {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
}

Vocabulary vocabulary_for(const CorpusConfig& config) {
  return Vocabulary{static_cast<std::uint32_t>(config.quantization.bins)};
}

struct Outcome {
  enum class Kind { record, failure, skipped } kind = Kind::failure;
  MeshRecord record;
  MeshFailure failure;
};

RoundTripResult check_mesh(const CanonicalMesh& mesh, RoundTripResult r, const Vocabulary& vocab) {
  const auto fail = [&](std::string stage, std::string message) {
    r.stage = std::move(stage);
    r.message = std::move(message);
    return r;
  };
  if (mesh.face_count() == 0) return fail("load", "mesh has no faces");

  std::string stage = "amt";
  try {
    const AmtSequence seq = tokenize(mesh);
    if (detokenize(seq, mesh.vertices(), mesh.up_axis()) != mesh) {
      r.sequence = to_string(seq);
      return fail(stage, "detokenize(tokenize(m)) differs from m");
    }

    stage = "naive";
    const NaiveSequence naive = tokenize_naive(mesh);
    if (detokenize_naive(naive, mesh.vertices(), mesh.up_axis()) != mesh) {
      return fail(stage, "detokenize_naive(tokenize_naive(m)) differs from m");
    }

    stage = "encode";
    const TokenSequence tokens = encode(seq, mesh.vertices(), vocab);
    const TokenSequence naive_tokens = encode(naive, mesh.vertices(), vocab);

    stage = "decode";
    const DecodedAmt decoded = decode_amt(tokens, vocab);
    if (encode(decoded.sequence, decoded.vertices, vocab) != tokens) {
      r.sequence = to_string(seq);
      return fail(stage, "encode(decode(t)) differs from t");
    }
    if (detokenize(decoded.sequence, decoded.vertices, mesh.up_axis()) !=
        drop_unreferenced_vertices(mesh)) {
      r.sequence = to_string(seq);
      return fail(stage, "mesh rebuilt from tokens differs from m");
    }
    const DecodedNaive decoded_naive = decode_naive(naive_tokens, vocab);
    if (encode(decoded_naive.sequence, decoded_naive.vertices, vocab) != naive_tokens) {
      return fail(stage, "naive encode(decode(t)) differs from t");
    }

    stage = "serialize";
    if (deserialize(serialize(tokens)) != tokens) {
      return fail(stage, "binary token round trip differs");
    }
  } catch (const std::exception& e) {
    return fail(stage, e.what());
  }
  r.passed = true;
  return r;
}

RoundTripResult check_injected(const InjectedSequence& injected, const CorpusConfig& config) {
  RoundTripResult r;
  r.source = injected.name;
  r.sequence = to_string(injected.sequence);
  try {
    const CanonicalMesh mesh =
        detokenize(injected.sequence, injected.vertices, config.up_axis);
    // Tokenizing the rebuilt mesh renumbers vertices canonically, so compare
    // through the tokens, which carry coordinates.
    const Vocabulary vocab = vocabulary_for(config);
    const TokenSequence original = encode(injected.sequence, injected.vertices, vocab);
    const TokenSequence again = encode(tokenize(mesh), mesh.vertices(), vocab);
    if (original.ids != again.ids) {
      r.stage = "retokenize";
      r.message = "sequence is not the canonical tokenization of its mesh";
      return r;
    }
  } catch (const std::exception& e) {
    r.stage = "decode";
    r.message = e.what();
    return r;
  }
  r.sequence.clear();
  r.passed = true;
  return r;
}

}  // namespace

std::string label(const MeshSource& source) {
  if (const auto* path = std::get_if<std::filesystem::path>(&source)) return path->string();
  return std::get<SyntheticSpec>(source).label();
}

std::vector<MeshSource> collect_sources(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<MeshSource> out;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(path)) {
      if (entry.is_regular_file() && lowercase(entry.path().extension().string()) == ".obj") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    out.assign(files.begin(), files.end());
    return out;
  }
  if (!fs::is_regular_file(path)) throw IoError("no such file or directory: " + path.string());
  if (lowercase(path.extension().string()) == ".obj") return {path};

  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view entry = trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    if (entry.starts_with("gen ")) {
      out.emplace_back(parse_synthetic_spec(entry.substr(4)));
    } else {
      const fs::path p(entry);
      out.emplace_back(p.is_absolute() ? p : path.parent_path() / p);
    }
  }
  return out;
}

CanonicalMesh prepare(const MeshSource& source, const CorpusConfig& config) {
  const RawMesh raw = std::holds_alternative<SyntheticSpec>(source)
                          ? std::get<SyntheticSpec>(source).generate()
                          : load_obj(std::get<std::filesystem::path>(source)).mesh;
  return canonicalize(quantize(raw, config.quantization), config.up_axis);
}

MeshRecord measure(const CanonicalMesh& mesh, std::string source, const Vocabulary& vocab) {
  MeshRecord record;
  record.source = std::move(source);
  record.vertices = mesh.vertex_count();
  record.faces = mesh.face_count();

  const auto start = Clock::now();
  const AmtSequence seq = tokenize(mesh);
  const TokenSequence tokens = encode(seq, mesh.vertices(), vocab);
  record.tokenize_seconds = seconds_since(start);

  const TokenSequence naive = encode(tokenize_naive(mesh), mesh.vertices(), vocab);
  record.amt_length = tokens.payload_length();
  record.naive_length = naive.payload_length();
  record.restarts = sequence_stats(seq).restart_items;
  record.ratio = static_cast<double>(record.amt_length) / static_cast<double>(record.naive_length);
  return record;
}

Histogram make_histogram(std::span<const double> values, double lo, double hi,
                         std::size_t bins) {
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(std::max<std::size_t>(bins, 1), 0);
  for (const double v : values) {
    const double t = (v - lo) / h.bin_width();
    const auto last = static_cast<double>(h.counts.size() - 1);
    h.counts[static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, last))]++;
  }
  return h;
}

double macro_average(std::span<const MeshRecord> records) {
  if (records.empty()) return 0;
  double sum = 0;
  for (const auto& r : records) sum += r.ratio;
  return sum / static_cast<double>(records.size());
}

CorpusReport run_corpus(std::span<const MeshSource> sources, const CorpusConfig& config) {
  const auto start = Clock::now();
  const Vocabulary vocab = vocabulary_for(config);
  std::vector<Outcome> outcomes(sources.size());

  parallel_for(sources.size(), config.jobs, [&](std::size_t i) {
    Outcome& out = outcomes[i];
    std::string name = label(sources[i]);
    try {
      const CanonicalMesh mesh = prepare(sources[i], config);
      if (mesh.face_count() == 0) {
        out.failure = {std::move(name), "mesh has no faces"};
        return;
      }
      if (mesh.face_count() > config.max_faces) {
        out.kind = Outcome::Kind::skipped;
        return;
      }
      out.record = measure(mesh, std::move(name), vocab);
      out.kind = Outcome::Kind::record;
    } catch (const std::exception& e) {
      out.failure = {std::move(name), e.what()};
    }
  });

  CorpusReport report;
  report.config = config;
  for (auto& out : outcomes) {
    switch (out.kind) {
      case Outcome::Kind::record:
        report.records.push_back(std::move(out.record));
        break;
      case Outcome::Kind::failure:
        report.failures.push_back(std::move(out.failure));
        break;
      case Outcome::Kind::skipped:
        ++report.skipped_over_cap;
        break;
    }
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const MeshRecord& a, const MeshRecord& b) { return a.source < b.source; });
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const MeshFailure& a, const MeshFailure& b) { return a.source < b.source; });

  std::vector<double> ratios;
  std::vector<double> faces;
  for (const auto& r : report.records) {
    report.total_faces += r.faces;
    report.total_amt_length += r.amt_length;
    report.total_naive_length += r.naive_length;
    ratios.push_back(r.ratio);
    faces.push_back(static_cast<double>(r.faces));
  }
  report.macro_avg_ratio = macro_average(report.records);
  report.micro_ratio = report.total_naive_length
                           ? static_cast<double>(report.total_amt_length) /
                                 static_cast<double>(report.total_naive_length)
                           : 0.0;
  report.ratio_histogram = make_histogram(ratios, 0.0, 1.25, 25);
  const double face_hi = config.max_faces
                             ? static_cast<double>(config.max_faces) + 1
                             : std::max(1.0, faces.empty() ? 1.0 : *std::max_element(faces.begin(), faces.end()) + 1);
  report.face_histogram = make_histogram(faces, 0.0, face_hi, 16);
  report.wall_seconds = seconds_since(start);
  return report;
}

std::size_t RoundTripReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; }));
}

RoundTripReport run_roundtrip_suite(std::span<const RoundTripCase> cases,
                                    const CorpusConfig& config) {
  const Vocabulary vocab = vocabulary_for(config);
  RoundTripReport report;
  report.results.resize(cases.size());
  parallel_for(cases.size(), config.jobs, [&](std::size_t i) {
    const RoundTripCase& c = cases[i];
    if (const auto* injected = std::get_if<InjectedSequence>(&c)) {
      report.results[i] = check_injected(*injected, config);
      return;
    }
    const MeshSource source = std::holds_alternative<SyntheticSpec>(c)
                                  ? MeshSource(std::get<SyntheticSpec>(c))
                                  : MeshSource(std::get<std::filesystem::path>(c));
    RoundTripResult r;
    r.source = label(source);
    CanonicalMesh mesh;
    try {
      mesh = prepare(source, config);
    } catch (const std::exception& e) {
      r.stage = "load";
      r.message = e.what();
      report.results[i] = std::move(r);
      return;
    }
    report.results[i] = check_mesh(mesh, std::move(r), vocab);
  });
  return report;
}

RoundTripReport run_roundtrip_suite(std::span<const MeshSource> sources,
                                    const CorpusConfig& config) {
  std::vector<RoundTripCase> cases;
  cases.reserve(sources.size());
  for (const auto& s : sources) {
    if (const auto* spec = std::get_if<SyntheticSpec>(&s)) {
      cases.emplace_back(*spec);
    } else {
      cases.emplace_back(std::get<std::filesystem::path>(s));
    }
  }
  return run_roundtrip_suite(cases, config);
}

}  // namespace amt
