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

#include "fdf/stroke.h"

#include <cmath>
#include <utility>

#include "fdf/errors.h"

namespace fdf {

Stroke::Stroke(std::vector<Point2D> points, std::optional<double> sample_rate_hz)
    : points_(std::move(points)), sample_rate_hz_(sample_rate_hz) {
  if (points_.size() < 2) {
    throw ValidationError("a stroke needs at least 2 points, got " +
                          std::to_string(points_.size()));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw ValidationError("non-finite coordinate at point " +
                            std::to_string(i));
    }
  }
  if (sample_rate_hz_ &&
      (!std::isfinite(*sample_rate_hz_) || *sample_rate_hz_ <= 0.0)) {
    throw ValidationError("sample_rate_hz must be positive");
  }
}

std::vector<double> Stroke::xs() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const Point2D& p : points_) out.push_back(p.x);
  return out;
}

std::vector<double> Stroke::ys() const {
  std::vector<double> out;
  out.reserve(points_.size());
  for (const Point2D& p : points_) out.push_back(p.y);
  return out;
}

Stroke Stroke::FromCoordinates(std::span<const double> xs,
                               std::span<const double> ys,
                               std::optional<double> sample_rate_hz) {
  if (xs.size() != ys.size()) {
    throw ValidationError("coordinate sequences differ in length");
  }
  std::vector<Point2D> points;
  points.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) points.push_back({xs[i], ys[i]});
  return Stroke(std::move(points), sample_rate_hz);
}

const char* to_string(Split split) {
  return split == Split::kTrain ? "train" : "test";
}

Split parse_split(const std::string& text) {
  if (text == "train") return Split::kTrain;
  if (text == "test") return Split::kTest;
  throw ValidationError("unknown split '" + text + "'");
}

std::set<std::string> Corpus::label_set() const {
  std::set<std::string> labels;
  for (const LabeledStroke& item : items) {
    if (item.label) labels.insert(*item.label);
  }
  return labels;
}

Corpus Corpus::filter(Split split) const {
  Corpus out;
  for (const LabeledStroke& item : items) {
    if (item.split == split) out.items.push_back(item);
  }
  return out;
}

Stroke anchor_at_origin(const Stroke& stroke) {
  const Point2D origin = stroke[0];
  std::vector<Point2D> points;
  points.reserve(stroke.size());
  for (const Point2D& p : stroke.points()) {
    points.push_back({p.x - origin.x, p.y - origin.y});
  }
  return Stroke(std::move(points), stroke.sample_rate_hz());
}

}  // namespace fdf
