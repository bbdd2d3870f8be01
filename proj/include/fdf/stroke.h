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

#ifndef FDF_STROKE_H_
#define FDF_STROKE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fdf {

// A pen sample in device units. y grows upward.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

// Pen trajectory from pen-down to pen-up, sampled uniformly in time.
// Always holds at least two finite points.
class Stroke {
 public:
  // Throws ValidationError when fewer than two points are given, when a
  // coordinate is not finite, or when the sample rate is not positive.
  explicit Stroke(std::vector<Point2D> points,
                  std::optional<double> sample_rate_hz = std::nullopt);

  std::span<const Point2D> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Point2D& operator[](std::size_t i) const { return points_[i]; }
  std::optional<double> sample_rate_hz() const { return sample_rate_hz_; }

  std::vector<double> xs() const;
  std::vector<double> ys() const;

  // Rebuilds a stroke from separate coordinate sequences of equal length.
  static Stroke FromCoordinates(std::span<const double> xs,
                                std::span<const double> ys,
                                std::optional<double> sample_rate_hz =
                                    std::nullopt);

  friend bool operator==(const Stroke&, const Stroke&) = default;

 private:
  std::vector<Point2D> points_;
  std::optional<double> sample_rate_hz_;
};

enum class Split { kTrain, kTest };

const char* to_string(Split split);
// Throws ValidationError for anything other than "train" or "test".
Split parse_split(const std::string& text);

// One corpus record. The label is optional so that unlabeled query strokes
// share the file format; when present it is non-empty.
struct LabeledStroke {
  Stroke stroke;
  std::optional<std::string> label;
  std::optional<std::string> writer_id;
  std::optional<Split> split;

  friend bool operator==(const LabeledStroke&, const LabeledStroke&) = default;
};

struct Corpus {
  std::vector<LabeledStroke> items;

  // Distinct labels over all labeled items.
  std::set<std::string> label_set() const;

  // Items whose split tag equals `split`.
  Corpus filter(Split split) const;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

// Translates so that the first point sits at the origin. Integer and dyadic
// device coordinates stay exact under this shift.
Stroke anchor_at_origin(const Stroke& stroke);

}  // namespace fdf

#endif  // FDF_STROKE_H_
