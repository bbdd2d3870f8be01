// Copyright 2026 The FDF Authors
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

#ifndef FDF_REPORT_H_
#define FDF_REPORT_H_

#include <string>
#include <string_view>

#include "fdf/classifier.h"

namespace fdf {

// "63.2% (139/220)"
std::string format_cell(const AccuracyCell& cell);

// Splits as rows, alphas as columns:
//
//   | Data       | alpha=1         | alpha=2         |
//   |------------|-----------------|-----------------|
//   | Train Data | 63.2% (139/220) | 87.7% (193/220) |
std::string render_accuracy_table(const AccuracyTable& table);

std::string accuracy_table_to_json(const AccuracyTable& table);
// Throws ParseError on malformed input.
AccuracyTable accuracy_table_from_json(std::string_view text);

}  // namespace fdf

#endif  // FDF_REPORT_H_
