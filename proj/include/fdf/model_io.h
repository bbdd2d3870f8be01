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

#ifndef FDF_MODEL_IO_H_
#define FDF_MODEL_IO_H_

#include <string>
#include <string_view>

#include "fdf/classifier.h"

namespace fdf {

inline constexpr int kModelFormatVersion = 1;

// {"format_version": 1, "meta": {...}, "templates": {"<label>": [f1..f8]}}
std::string model_to_json(const Model& model);

// Throws ParseError on malformed JSON, a missing field or an unsupported
// format_version, and ValidationError when a template breaks the feature
// vector invariants.
Model model_from_json(std::string_view text);

void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace fdf

#endif  // FDF_MODEL_IO_H_
