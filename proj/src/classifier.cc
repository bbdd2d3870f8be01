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

#include "fdf/classifier.h"

#include <algorithm>
#include <utility>

#include "fdf/errors.h"

namespace fdf {

std::vector<std::string> Model::labels() const {
  std::vector<std::string> out;
  out.reserve(templates.size());
  for (const auto& [label, _] : templates) out.push_back(label);
  return out;
}

Model train(const Corpus& corpus, const SmoothingConfig& config,
            std::string created_at) {
  config.validate();
  if (corpus.empty()) throw ValidationError("cannot train on an empty corpus");

  std::map<std::string, FdfVector> sums;
  Model model;
  model.meta.smoothing = config;
  model.meta.created_at = std::move(created_at);
  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    const LabeledStroke& item = corpus.items[i];
    if (!item.label) {
      throw ValidationError("training stroke " + std::to_string(i) +
                            " has no label");
    }
    const std::string& label = *item.label;
    model.meta.exemplars_per_label.try_emplace(label, 0);
    model.meta.excluded_per_label.try_emplace(label, 0);
    FdfVector fdf;
    try {
      fdf = extract_fdf(item.stroke, config);
    } catch (const FeatureExtractionError&) {
      ++model.meta.excluded_strokes;
      ++model.meta.excluded_per_label[label];
      continue;
    }
    FdfVector& sum = sums.try_emplace(label, FdfVector{}).first->second;
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += fdf[d];
    ++model.meta.exemplars_per_label[label];
    ++model.meta.training_strokes;
  }

  for (const auto& [label, count] : model.meta.exemplars_per_label) {
    if (count == 0) {
      throw TrainingError("no usable training stroke for label '" + label + "'");
    }
    FdfVector mean = sums.at(label);
    for (double& v : mean) v /= static_cast<double>(count);
    model.templates.emplace(label, mean);
  }
  return model;
}

double squared_distance(const FdfVector& a, const FdfVector& b) {
  double sum = 0.0;
  for (std::size_t d = 0; d < a.size(); ++d) {
    const double diff = a[d] - b[d];
    sum += diff * diff;
  }
  return sum;
}

RankedResult rank(const Model& model, const FdfVector& fdf) {
  RankedResult ranked;
  ranked.reserve(model.templates.size());
  for (const auto& [label, tmpl] : model.templates) {
    ranked.push_back({label, squared_distance(fdf, tmpl)});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.squared_distance != b.squared_distance) {
                       return a.squared_distance < b.squared_distance;
                     }
                     return a.label < b.label;
                   });
  return ranked;
}

std::vector<std::string> classify_nbest(const Model& model, const Stroke& stroke,
                                        int alpha) {
  if (alpha < 1) throw ValidationError("alpha must be >= 1");
  const RankedResult ranked =
      rank(model, extract_fdf(stroke, model.meta.smoothing));
  const std::size_t n =
      std::min(ranked.size(), static_cast<std::size_t>(alpha));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(ranked[i].label);
  return labels;
}

AccuracyTable evaluate(const Model& model, const Corpus& corpus,
                       std::vector<int> alphas) {
  if (alphas.empty()) throw ValidationError("need at least one alpha");
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  if (alphas.front() < 1) throw ValidationError("alpha must be >= 1");

  AccuracyTable table;
  table.alphas = alphas;
  const std::vector<std::string> split_names = {"train", "test", "all"};
  std::vector<AccuracyRow> rows(split_names.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].split = split_names[r];
    rows[r].cells.resize(alphas.size());
  }

  for (std::size_t i = 0; i < corpus.items.size(); ++i) {
    const LabeledStroke& item = corpus.items[i];
    if (!item.label) {
      throw ValidationError("evaluation stroke " + std::to_string(i) +
                            " has no label");
    }
    AccuracyRow& row =
        rows[item.split ? static_cast<std::size_t>(*item.split) : 2];
    for (AccuracyCell& cell : row.cells) ++cell.total;

    if (!model.templates.contains(*item.label)) {
      ++table.unknown_label_strokes;
      continue;
    }
    RankedResult ranked;
    try {
      const FeatureTrace trace =
          trace_features(item.stroke, model.meta.smoothing);
      table.curvature_points += trace.critical.size();
      table.sample_points += item.stroke.size();
      ranked = rank(model, trace.fdf);
    } catch (const FeatureExtractionError&) {
      ++table.extraction_failures;
      continue;
    }
    const auto hit = std::find_if(
        ranked.begin(), ranked.end(),
        [&](const RankedEntry& e) { return e.label == *item.label; });
    const auto position = static_cast<std::size_t>(hit - ranked.begin());
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      if (position < static_cast<std::size_t>(alphas[a])) ++row.cells[a].correct;
    }
  }

  for (AccuracyRow& row : rows) {
    if (row.cells.front().total > 0) table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace fdf
