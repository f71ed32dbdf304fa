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

// amt: command-line front end for the mesh tokenizers and the corpus bench.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "amt/amt_codec.hpp"
#include "amt/bench.hpp"
#include "amt/encoding.hpp"
#include "amt/mesh_io.hpp"
#include "amt/naive_codec.hpp"
#include "amt/report.hpp"
#include "amt/synthetic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitVerify = 2;

const std::map<std::string, amt::UpAxis> kUpAxes{{"y", amt::UpAxis::y}, {"z", amt::UpAxis::z}};
const std::map<std::string, amt::BBoxMode> kBoxModes{
    {"tight", amt::BBoxMode::per_mesh_tight}, {"unit", amt::BBoxMode::unit_cube_centered}};

struct PipelineOptions {
  int bins = 128;
  amt::UpAxis up = amt::UpAxis::y;
  amt::BBoxMode box = amt::BBoxMode::per_mesh_tight;
  unsigned jobs = 1;

  amt::CorpusConfig config() const {
    amt::CorpusConfig c;
    c.quantization.bins = bins;
    c.quantization.bbox_mode = box;
    c.up_axis = up;
    c.jobs = jobs;
    return c;
  }
};

void add_pipeline_options(CLI::App* cmd, PipelineOptions& opts) {
  cmd->add_option("--bins", opts.bins, "Quantization bins per axis")->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--up-axis", opts.up, "OBJ axis treated as vertical")
      ->transform(CLI::CheckedTransformer(kUpAxes, CLI::ignore_case));
  cmd->add_option("--bbox", opts.box, "Quantization box: tight (per mesh) or unit")
      ->transform(CLI::CheckedTransformer(kBoxModes, CLI::ignore_case));
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw amt::IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  amt::save_text(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string read_text(const std::string& path) {
  const auto bytes = read_bytes(path);
  return std::string(bytes.begin(), bytes.end());
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_tokenize(const std::string& input, const PipelineOptions& opts, const std::string& codec,
                 const std::string& out, const std::string& json_out) {
  const auto config = opts.config();
  const amt::CanonicalMesh mesh = amt::prepare(std::filesystem::path(input), config);
  if (mesh.face_count() == 0) throw amt::Error(input + ": mesh has no faces");
  const amt::Vocabulary vocab{static_cast<std::uint32_t>(opts.bins)};

  amt::TokenSequence tokens;
  std::string text;
  if (codec == "naive") {
    const auto seq = amt::tokenize_naive(mesh);
    tokens = amt::encode(seq, mesh.vertices(), vocab);
    text = amt::to_string(seq);
  } else {
    const auto seq = amt::tokenize(mesh);
    tokens = amt::encode(seq, mesh.vertices(), vocab);
    text = amt::to_string(seq);
  }
  if (!out.empty()) write_bytes(out, amt::serialize(tokens));
  if (!json_out.empty()) amt::save_text(json_out, amt::to_json(tokens));
  if (out.empty() && json_out.empty()) std::cout << text << '\n';
  std::cerr << codec << ": " << mesh.face_count() << " faces, " << mesh.vertex_count()
            << " vertices, " << tokens.payload_length() << " payload tokens ("
            << mesh.stats().merged_vertices << " vertices merged, "
            << mesh.stats().dropped_degenerate << " degenerate faces dropped)\n";
  return kExitOk;
}

int run_detokenize(const std::string& input, const std::string& out, amt::UpAxis up) {
  const amt::TokenSequence tokens = ends_with(input, ".json")
                                        ? amt::from_json(read_text(input))
                                        : amt::deserialize(read_bytes(input));
  const amt::Vocabulary vocab{tokens.bins};
  const auto decoded = amt::decode(tokens, vocab);
  const amt::CanonicalMesh mesh =
      std::holds_alternative<amt::DecodedAmt>(decoded)
          ? amt::detokenize(std::get<amt::DecodedAmt>(decoded).sequence,
                            std::get<amt::DecodedAmt>(decoded).vertices, up)
          : amt::detokenize_naive(std::get<amt::DecodedNaive>(decoded).sequence,
                                  std::get<amt::DecodedNaive>(decoded).vertices, up);
  amt::save_text(out, amt::write_obj(mesh));
  std::cerr << "wrote " << mesh.face_count() << " faces, " << mesh.vertex_count()
            << " vertices to " << out << '\n';
  return kExitOk;
}

int run_bench(const std::string& input, const PipelineOptions& opts, std::size_t max_faces,
              const std::string& csv, const std::string& json, const std::string& svg) {
  auto config = opts.config();
  config.max_faces = max_faces;
  const auto sources = amt::collect_sources(input);
  const amt::CorpusReport report = amt::run_corpus(sources, config);

  if (!csv.empty()) amt::save_text(csv, amt::to_csv(report));
  if (!json.empty()) amt::save_text(json, amt::to_json(report));
  if (!svg.empty()) {
    amt::save_text(svg, amt::render_svg(report.ratio_histogram, "AMT / naive length ratio",
                                        "ratio"));
  }
  std::printf("meshes %zu  failures %zu  skipped(>%zu faces) %zu\n", report.records.size(),
              report.failures.size(), max_faces, report.skipped_over_cap);
  std::printf("macro-average ratio %.6f  micro ratio %.6f  wall %.3f s\n",
              report.macro_avg_ratio, report.micro_ratio, report.wall_seconds);
  for (const auto& f : report.failures) std::fprintf(stderr, "%s: %s\n", f.source.c_str(), f.message.c_str());
  return report.records.empty() && !report.failures.empty() ? kExitIo : kExitOk;
}

int run_verify(const std::string& input, const PipelineOptions& opts, const std::string& json) {
  const auto sources = amt::collect_sources(input);
  const amt::RoundTripReport report = amt::run_roundtrip_suite(sources, opts.config());
  if (!json.empty()) amt::save_text(json, amt::to_json(report));

  bool load_failure = false;
  bool verify_failure = false;
  for (const auto& r : report.results) {
    if (r.passed) continue;
    (r.stage == "load" ? load_failure : verify_failure) = true;
    std::fprintf(stderr, "FAIL %s [%s]: %s\n", r.source.c_str(), r.stage.c_str(), r.message.c_str());
    if (!r.sequence.empty()) std::fprintf(stderr, "  sequence: %s\n", r.sequence.c_str());
  }
  std::printf("round trip: %zu passed, %zu failed\n", report.passed(), report.failed());
  if (verify_failure) return kExitVerify;
  return load_failure ? kExitIo : kExitOk;
}

int run_plot(const std::string& input, const std::string& out, bool faces) {
  const amt::CorpusReport report = amt::corpus_report_from_json(read_text(input));
  amt::save_text(out, faces ? amt::render_svg(report.face_histogram, "Face counts", "faces")
                            : amt::render_svg(report.ratio_histogram,
                                              "AMT / naive length ratio", "ratio"));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjacent mesh tokenization: mesh <-> token sequence codec and corpus bench"};
  app.require_subcommand(1);

  std::string input, out, json, csv, svg, codec = "amt";
  PipelineOptions opts;

  auto* tokenize = app.add_subcommand("tokenize", "Tokenize an OBJ mesh");
  tokenize->add_option("input", input, "Input .obj")->required();
  add_pipeline_options(tokenize, opts);
  tokenize->add_option("--codec", codec, "amt or naive")->check(CLI::IsMember({"amt", "naive"}));
  tokenize->add_option("--out", out, "Binary token file");
  tokenize->add_option("--json", json, "JSON token file");

  auto* detokenize = app.add_subcommand("detokenize", "Rebuild an OBJ mesh from a token file");
  detokenize->add_option("input", input, "Binary (or .json) token file")->required();
  detokenize->add_option("--out", out, "Output .obj")->required();
  detokenize->add_option("--up-axis", opts.up, "OBJ axis treated as vertical")
      ->transform(CLI::CheckedTransformer(kUpAxes, CLI::ignore_case));

  std::size_t max_faces = 1600;
  auto* bench = app.add_subcommand("bench", "Measure AMT vs naive sequence lengths over a corpus");
  bench->add_option("input", input, "Directory of .obj files or manifest")->required();
  add_pipeline_options(bench, opts);
  bench->add_option("--max-faces", max_faces, "Skip meshes with more faces");
  bench->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--csv", csv, "Per-mesh CSV report");
  bench->add_option("--json", json, "Full JSON report");
  bench->add_option("--svg", svg, "Ratio histogram");

  std::string kind;
  amt::SyntheticParams params;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Write a synthetic mesh");
  gen->add_option("kind", kind, "strip|fan|grid|icosphere|soup|random_triangulation")->required();
  gen->add_option("--n", params.n, "Face count (strip, fan, soup)");
  gen->add_option("--width", params.width, "Cells along x (grid, random_triangulation)");
  gen->add_option("--height", params.height, "Cells along y (grid, random_triangulation)");
  gen->add_option("--subdivisions", params.subdivisions, "Icosphere subdivisions");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out, "Output .obj")->required();

  auto* verify = app.add_subcommand("verify", "Round-trip every mesh through both codecs");
  verify->add_option("input", input, "Directory of .obj files or manifest")->required();
  add_pipeline_options(verify, opts);
  verify->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--json", json, "Failure report");

  bool faces = false;
  auto* plot = app.add_subcommand("plot", "Render a histogram from a bench JSON report");
  plot->add_option("input", input, "Report from `amt bench --json`")->required();
  plot->add_option("--out", out, "Output .svg")->required();
  plot->add_flag("--faces", faces, "Plot face counts instead of ratios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tokenize) return run_tokenize(input, opts, codec, out, json);
    if (*detokenize) return run_detokenize(input, out, opts.up);
    if (*bench) return run_bench(input, opts, max_faces, csv, json, svg);
    if (*gen) {
      const auto mesh = amt::generate_synthetic(amt::parse_synthetic_kind(kind), params, seed);
      amt::save_text(out, amt::write_obj(mesh));
      return kExitOk;
    }
    if (*verify) return run_verify(input, opts, json);
    if (*plot) return run_plot(input, out, faces);
  } catch (const std::exception& e) {
    std::cerr << "amt: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
