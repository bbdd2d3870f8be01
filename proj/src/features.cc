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

#include "fdf/features.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "fdf/errors.h"

namespace fdf {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSectorWidth = kPi / 4.0;
// Sector coordinates this close to an integer are treated as centre hits.
constexpr double kCenterSnap = 1e-12;

}  // namespace

Direction::Direction(int value) : value_(value) {
  if (value < 1 || value > kDirectionCount) {
    throw ValidationError("direction must be in [1, 8], got " +
                          std::to_string(value));
  }
}

double Direction::center() const {
  return wrap_angle((value_ - 1) * kSectorWidth);
}

Direction Direction::next() const {
  return Direction(value_ % kDirectionCount + 1);
}

double wrap_angle(double angle) {
  double wrapped = std::remainder(angle, 2.0 * kPi);
  if (wrapped <= -kPi) wrapped += 2.0 * kPi;
  return wrapped;
}

double angle_between(const Point2D& to, const Point2D& from) {
  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  if (dx == 0.0 && dy == 0.0) {
    throw DegenerateSegmentError("coincident points have no direction");
  }
  double angle = std::atan2(dy, dx);
  if (angle <= -kPi) angle = kPi;
  return angle;
}

double fuzzy_membership(double center, double angle) {
  const double distance = std::abs(std::remainder(center - angle, 2.0 * kPi));
  return std::clamp(1.0 - distance / kSectorWidth, 0.0, 1.0);
}

FuzzyDirPair fuzzy_direction_pair(double angle) {
  angle = wrap_angle(angle);
  double sector = angle / kSectorWidth;
  const double nearest = std::round(sector);
  if (std::abs(sector - nearest) < kCenterSnap) sector = nearest;

  const int lower = static_cast<int>(std::floor(sector));
  const Direction first(((lower % kDirectionCount) + kDirectionCount) %
                            kDirectionCount +
                        1);
  const Direction second = first.next();
  DirectionMembership a{first, fuzzy_membership(first.center(), angle)};
  DirectionMembership b{second, fuzzy_membership(second.center(), angle)};
  if (sector == nearest) {
    a.membership = 1.0;
    b.membership = 0.0;
  } else if (std::abs(sector - lower - 0.5) < kCenterSnap) {
    a.membership = 0.5;
    b.membership = 0.5;
  }

  if (b.membership > a.membership ||
      (b.membership == a.membership && b.direction < a.direction)) {
    std::swap(a, b);
  }
  return {a, b};
}

Direction dominant_direction(const Point2D& from, const Point2D& to) {
  return fuzzy_direction_pair(angle_between(to, from)).primary.direction;
}

FdfMatrix fdf_matrix(const CriticalPointList& points) {
  if (points.size() < 2) {
    throw FeatureExtractionError("need at least 2 curvature points");
  }
  FdfMatrix matrix;
  for (std::size_t l = 0; l + 1 < points.size(); ++l) {
    const Point2D& from = points.points[l];
    const Point2D& to = points.points[l + 1];
    if (from == to) {
      ++matrix.skipped_degenerate;
      continue;
    }
    matrix.rows.push_back(fuzzy_direction_pair(angle_between(to, from)));
  }
  if (matrix.rows.empty()) {
    throw FeatureExtractionError("every segment between curvature points is "
                                 "degenerate");
  }
  return matrix;
}

FdfVector mean_fdf(const FdfMatrix& matrix) {
  if (matrix.rows.empty()) {
    throw FeatureExtractionError("cannot average an empty feature matrix");
  }
  FdfVector sums{};
  std::array<int, kDirectionCount> counts{};
  for (const FuzzyDirPair& row : matrix.rows) {
    for (const DirectionMembership& dm : {row.primary, row.secondary}) {
      sums[dm.direction.slot()] += dm.membership;
      ++counts[dm.direction.slot()];
    }
  }
  FdfVector f{};
  for (std::size_t d = 0; d < f.size(); ++d) {
    if (counts[d] > 0) f[d] = sums[d] / counts[d];
  }
  return f;
}

FeatureTrace trace_features(const Stroke& stroke,
                            const SmoothingConfig& config) {
  Stroke smoothed = smooth_stroke(anchor_at_origin(stroke), config);
  CriticalPointList candidates = extract_critical_points(smoothed);
  CriticalPointList critical = trim_spurious(candidates);
  FdfMatrix matrix = fdf_matrix(critical);
  FdfVector fdf = mean_fdf(matrix);
  return FeatureTrace{std::move(smoothed), std::move(candidates),
                      std::move(critical), std::move(matrix), fdf};
}

FdfVector extract_fdf(const Stroke& stroke, const SmoothingConfig& config) {
  return trace_features(stroke, config).fdf;
}

}  // namespace fdf
