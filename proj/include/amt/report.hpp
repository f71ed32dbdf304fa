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

#include <string>
#include <string_view>

#include "amt/bench.hpp"

namespace amt {

// One row per record.
std::string to_csv(const CorpusReport& report);
std::string to_json(const CorpusReport& report);
CorpusReport corpus_report_from_json(std::string_view json);
std::string to_json(const RoundTripReport& report);

// Bar chart of a histogram as a standalone SVG document.
std::string render_svg(const Histogram& histogram, std::string_view title,
                       std::string_view x_label);

}  // namespace amt
