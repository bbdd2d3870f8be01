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

#include "fdf/model_io.h"

#include "fdf/corpus_io.h"
#include "fdf/errors.h"
#include "json.hpp"

namespace fdf {
namespace {

using Json = nlohmann::ordered_json;

Json counts_to_json(const std::map<std::string, std::size_t>& counts) {
  Json out = Json::object();
  for (const auto& [label, n] : counts) out[label] = n;
  return out;
}

std::map<std::string, std::size_t> counts_from_json(const Json& j) {
  std::map<std::string, std::size_t> out;
  for (const auto& [label, n] : j.items()) out[label] = n.get<std::size_t>();
  return out;
}

}  // namespace

std::string model_to_json(const Model& model) {
  const ModelMeta& meta = model.meta;
  Json smoothing;
  smoothing["levels"] = meta.smoothing.levels;
  smoothing["mode"] = to_string(meta.smoothing.mode);
  smoothing["threshold"] = meta.smoothing.threshold;

  Json meta_json;
  meta_json["created_at"] = meta.created_at;
  meta_json["training_strokes"] = meta.training_strokes;
  meta_json["excluded_strokes"] = meta.excluded_strokes;
  meta_json["exemplars_per_label"] = counts_to_json(meta.exemplars_per_label);
  meta_json["excluded_per_label"] = counts_to_json(meta.excluded_per_label);
  meta_json["smoothing"] = std::move(smoothing);

  Json templates = Json::object();
  for (const auto& [label, f] : model.templates) templates[label] = f;

  Json out;
  out["format_version"] = kModelFormatVersion;
  out["meta"] = std::move(meta_json);
  out["templates"] = std::move(templates);
  return out.dump(2) + "\n";
}

Model model_from_json(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw ParseError("model file is not a JSON object", 0);
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw ParseError("unsupported model format_version " +
                           std::to_string(version),
                       0);
    }
    Model model;
    const Json& meta = j.at("meta");
    model.meta.created_at = meta.value("created_at", std::string());
    model.meta.training_strokes = meta.value("training_strokes", std::size_t{0});
    model.meta.excluded_strokes = meta.value("excluded_strokes", std::size_t{0});
    if (meta.contains("exemplars_per_label")) {
      model.meta.exemplars_per_label = counts_from_json(meta["exemplars_per_label"]);
    }
    if (meta.contains("excluded_per_label")) {
      model.meta.excluded_per_label = counts_from_json(meta["excluded_per_label"]);
    }
    const Json& smoothing = meta.at("smoothing");
    model.meta.smoothing.levels = smoothing.at("levels").get<int>();
    model.meta.smoothing.mode =
        parse_smoothing_mode(smoothing.at("mode").get<std::string>());
    model.meta.smoothing.threshold = smoothing.at("threshold").get<double>();
    model.meta.smoothing.validate();

    for (const auto& [label, values] : j.at("templates").items()) {
      FdfVector f = values.get<FdfVector>();
      for (double v : f) {
        if (!(v >= 0.0 && v <= 1.0)) {
          throw ValidationError("template '" + label +
                                "' has a component outside [0, 1]");
        }
      }
      model.templates.emplace(label, f);
    }
    if (model.templates.empty()) {
      throw ValidationError("model has no templates");
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad model file: ") + e.what(), 0);
  }
}

void save_model(const Model& model, const std::string& path) {
  write_text_file(path, model_to_json(model));
}

Model load_model(const std::string& path) {
  return model_from_json(read_text_file(path));
}

}  // namespace fdf
