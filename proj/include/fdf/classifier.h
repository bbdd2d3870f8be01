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

#ifndef FDF_CLASSIFIER_H_
#define FDF_CLASSIFIER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdf/features.h"
#include "fdf/preprocess.h"
#include "fdf/stroke.h"

namespace fdf {

struct ModelMeta {
  std::size_t training_strokes = 0;
  // Strokes whose features could not be extracted and were left out.
  std::size_t excluded_strokes = 0;
  std::map<std::string, std::size_t> exemplars_per_label;
  std::map<std::string, std::size_t> excluded_per_label;
  SmoothingConfig smoothing;
  // ISO-8601 UTC, supplied by the caller.
  std::string created_at;

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

// Per-label mean feature vectors. Immutable once trained.
struct Model {
  std::map<std::string, FdfVector> templates;
  ModelMeta meta;

  std::vector<std::string> labels() const;

  friend bool operator==(const Model&, const Model&) = default;
};

struct RankedEntry {
  std::string label;
  double squared_distance;
};

// Ascending by squared distance, ties by label.
using RankedResult = std::vector<RankedEntry>;

// Averages the feature vectors of every labeled stroke per label. Strokes
// whose extraction fails are excluded and counted in meta. Throws
// ValidationError on an empty corpus or an unlabeled stroke, and
// TrainingError naming the first label left without a usable stroke.
Model train(const Corpus& corpus, const SmoothingConfig& config,
            std::string created_at = {});

double squared_distance(const FdfVector& a, const FdfVector& b);

RankedResult rank(const Model& model, const FdfVector& fdf);

// The first min(alpha, |labels|) labels for `stroke`, extracted with the
// model's own smoothing. Throws ValidationError when alpha < 1.
std::vector<std::string> classify_nbest(const Model& model, const Stroke& stroke,
                                        int alpha);

struct AccuracyCell {
  std::size_t correct = 0;
  std::size_t total = 0;

  double percentage() const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) /
                                  static_cast<double>(total);
  }

  friend bool operator==(const AccuracyCell&, const AccuracyCell&) = default;
};

struct AccuracyRow {
  // "train", "test" or "all" (records without a split tag).
  std::string split;
  // Parallel to AccuracyTable::alphas.
  std::vector<AccuracyCell> cells;

  friend bool operator==(const AccuracyRow&, const AccuracyRow&) = default;
};

struct AccuracyTable {
  std::vector<int> alphas;
  std::vector<AccuracyRow> rows;
  // Strokes whose true label is not in the model (always counted wrong).
  std::size_t unknown_label_strokes = 0;
  // Strokes whose features could not be extracted (always counted wrong).
  std::size_t extraction_failures = 0;
  // Trimmed curvature points and raw samples summed over extracted strokes.
  std::size_t curvature_points = 0;
  std::size_t sample_points = 0;

  // k / n over the whole evaluation set, 0 when nothing was extracted.
  double curvature_ratio() const {
    return sample_points == 0 ? 0.0
                              : static_cast<double>(curvature_points) /
                                    static_cast<double>(sample_points);
  }

  friend bool operator==(const AccuracyTable&, const AccuracyTable&) = default;
};

// A stroke is correct at alpha when its label is among the first alpha
// ranked entries. Rows appear in the order train, test, all, and only when
// the corpus has strokes for them. Alphas are sorted and deduplicated.
// Throws ValidationError on an unlabeled stroke, an empty alpha list or an
// alpha < 1.
AccuracyTable evaluate(const Model& model, const Corpus& corpus,
                       std::vector<int> alphas);

}  // namespace fdf

#endif  // FDF_CLASSIFIER_H_
