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

#include "amt/report.hpp"

#include <algorithm>
#include <charconv>

#include <json.hpp>

namespace amt {
namespace {

using nlohmann::json;

std::string number(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string_view to_string(BBoxMode mode) {
  return mode == BBoxMode::unit_cube_centered ? "unit_cube_centered" : "per_mesh_tight";
}

json histogram_json(const Histogram& h) {
  return {{"lo", h.lo}, {"hi", h.hi}, {"counts", h.counts}};
}

Histogram histogram_from(const json& j) {
  Histogram h;
  h.lo = j.at("lo").get<double>();
  h.hi = j.at("hi").get<double>();
  h.counts = j.at("counts").get<std::vector<std::size_t>>();
  return h;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_csv(const CorpusReport& report) {
  std::string out =
      "source,vertices,faces,amt_length,naive_length,ratio,restarts,tokenize_seconds\n";
  for (const auto& r : report.records) {
    out += csv_field(r.source) + ',' + std::to_string(r.vertices) + ',' +
           std::to_string(r.faces) + ',' + std::to_string(r.amt_length) + ',' +
           std::to_string(r.naive_length) + ',' + number(r.ratio) + ',' +
           std::to_string(r.restarts) + ',' + number(r.tokenize_seconds) + '\n';
  }
  return out;
}

std::string to_json(const CorpusReport& report) {
  json j;
  const auto& q = report.config.quantization;
  j["config"] = {{"bins", q.bins},
                 {"bbox_mode", to_string(q.bbox_mode)},
                 {"up_axis", report.config.up_axis == UpAxis::y ? "y" : "z"},
                 {"max_faces", report.config.max_faces},
                 {"jobs", report.config.jobs}};
  j["summary"] = {{"meshes", report.records.size()},
                  {"failures", report.failures.size()},
                  {"skipped_over_cap", report.skipped_over_cap},
                  {"macro_avg_ratio", report.macro_avg_ratio},
                  {"micro_ratio", report.micro_ratio},
                  {"total_faces", report.total_faces},
                  {"total_amt_length", report.total_amt_length},
                  {"total_naive_length", report.total_naive_length},
                  {"wall_seconds", report.wall_seconds}};
  j["histograms"] = {{"ratio", histogram_json(report.ratio_histogram)},
                     {"faces", histogram_json(report.face_histogram)}};
  auto& records = j["records"] = json::array();
  for (const auto& r : report.records) {
    records.push_back({{"source", r.source},
                       {"vertices", r.vertices},
                       {"faces", r.faces},
                       {"amt_length", r.amt_length},
                       {"naive_length", r.naive_length},
                       {"ratio", r.ratio},
                       {"restarts", r.restarts},
                       {"tokenize_seconds", r.tokenize_seconds}});
  }
  auto& failures = j["failures"] = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"source", f.source}, {"message", f.message}});
  }
  return j.dump(2);
}

CorpusReport corpus_report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    CorpusReport report;
    const auto& c = j.at("config");
    report.config.quantization.bins = c.at("bins").get<int>();
    report.config.quantization.bbox_mode = c.at("bbox_mode").get<std::string>() ==
                                                   "unit_cube_centered"
                                               ? BBoxMode::unit_cube_centered
                                               : BBoxMode::per_mesh_tight;
    report.config.up_axis = c.at("up_axis").get<std::string>() == "z" ? UpAxis::z : UpAxis::y;
    report.config.max_faces = c.at("max_faces").get<std::size_t>();
    report.config.jobs = c.at("jobs").get<unsigned>();
    const auto& s = j.at("summary");
    report.skipped_over_cap = s.at("skipped_over_cap").get<std::size_t>();
    report.macro_avg_ratio = s.at("macro_avg_ratio").get<double>();
    report.micro_ratio = s.at("micro_ratio").get<double>();
    report.total_faces = s.at("total_faces").get<std::size_t>();
    report.total_amt_length = s.at("total_amt_length").get<std::size_t>();
    report.total_naive_length = s.at("total_naive_length").get<std::size_t>();
    report.wall_seconds = s.at("wall_seconds").get<double>();
    report.ratio_histogram = histogram_from(j.at("histograms").at("ratio"));
    report.face_histogram = histogram_from(j.at("histograms").at("faces"));
    for (const auto& r : j.at("records")) {
      MeshRecord m;
      m.source = r.at("source").get<std::string>();
      m.vertices = r.at("vertices").get<std::size_t>();
      m.faces = r.at("faces").get<std::size_t>();
      m.amt_length = r.at("amt_length").get<std::size_t>();
      m.naive_length = r.at("naive_length").get<std::size_t>();
      m.ratio = r.at("ratio").get<double>();
      m.restarts = r.at("restarts").get<std::size_t>();
      m.tokenize_seconds = r.at("tokenize_seconds").get<double>();
      report.records.push_back(std::move(m));
    }
    for (const auto& f : j.at("failures")) {
      report.failures.push_back(
          {f.at("source").get<std::string>(), f.at("message").get<std::string>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad report JSON: ") + e.what());
  }
}

std::string to_json(const RoundTripReport& report) {
  json j;
  j["passed"] = report.passed();
  j["failed"] = report.failed();
  auto& failures = j["failures"] = json::array();
  for (const auto& r : report.results) {
    if (r.passed) continue;
    failures.push_back(
        {{"source", r.source}, {"stage", r.stage}, {"message", r.message}, {"sequence", r.sequence}});
  }
  return j.dump(2);
}

std::string render_svg(const Histogram& histogram, std::string_view title,
                       std::string_view x_label) {
  constexpr double kWidth = 640, kHeight = 360, kLeft = 56, kRight = 16, kTop = 36, kBottom = 48;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t peak =
      histogram.counts.empty() ? 0 : *std::max_element(histogram.counts.begin(), histogram.counts.end());
  const double scale = peak ? plot_h / static_cast<double>(peak) : 0.0;
  const double bar_w = histogram.counts.empty() ? 0 : plot_w / static_cast<double>(histogram.counts.size());

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + number(kWidth) +
                    "\" height=\"" + number(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + number(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape_xml(title) + "</text>\n";
  for (std::size_t i = 0; i < histogram.counts.size(); ++i) {
    const double h = scale * static_cast<double>(histogram.counts[i]);
    svg += "<rect x=\"" + number(kLeft + bar_w * static_cast<double>(i)) + "\" y=\"" +
           number(kTop + plot_h - h) + "\" width=\"" + number(std::max(bar_w - 1, 1.0)) +
           "\" height=\"" + number(h) + "\" fill=\"#4a7ab5\"><title>" +
           number(histogram.lo + histogram.bin_width() * static_cast<double>(i)) + ": " +
           std::to_string(histogram.counts[i]) + "</title></rect>\n";
  }
  const double axis_y = kTop + plot_h;
  svg += "<line x1=\"" + number(kLeft) + "\" y1=\"" + number(axis_y) + "\" x2=\"" +
         number(kLeft + plot_w) + "\" y2=\"" + number(axis_y) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + number(kLeft) + "\" y1=\"" + number(kTop) + "\" x2=\"" + number(kLeft) +
         "\" y2=\"" + number(axis_y) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + number(kLeft) + "\" y=\"" + number(axis_y + 16) +
         "\" text-anchor=\"middle\">" + number(histogram.lo) + "</text>\n";
  svg += "<text x=\"" + number(kLeft + plot_w) + "\" y=\"" + number(axis_y + 16) +
         "\" text-anchor=\"middle\">" + number(histogram.hi) + "</text>\n";
  svg += "<text x=\"" + number(kLeft - 6) + "\" y=\"" + number(kTop + 4) +
         "\" text-anchor=\"end\">" + std::to_string(peak) + "</text>\n";
  svg += "<text x=\"" + number(kLeft + plot_w / 2) + "\" y=\"" + number(kHeight - 10) +
         "\" text-anchor=\"middle\">" + escape_xml(x_label) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace amt
