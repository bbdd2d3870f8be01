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

#ifndef FDF_FEATURES_H_
#define FDF_FEATURES_H_

#include <array>
#include <compare>
#include <cstddef>
#include <vector>

#include "fdf/critical_points.h"
#include "fdf/preprocess.h"
#include "fdf/stroke.h"

namespace fdf {

inline constexpr int kDirectionCount = 8;

// One of the eight direction sectors, numbered 1..8 counterclockwise from the
// +x axis. Direction d is centred at (d - 1) * pi/4, wrapped to (-pi, pi].
class Direction {
 public:
  // Throws ValidationError outside [1, 8].
  explicit Direction(int value);

  int value() const { return value_; }
  // 0-based position in an FdfVector.
  std::size_t slot() const { return static_cast<std::size_t>(value_ - 1); }
  double center() const;
  // Counterclockwise neighbour (8 -> 1).
  Direction next() const;

  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  int value_;
};

struct DirectionMembership {
  Direction direction;
  double membership;
};

// The two adjacent sectors an angle falls in. `primary` holds the larger
// membership; on an exact tie the lower direction number is primary.
struct FuzzyDirPair {
  DirectionMembership primary;
  DirectionMembership secondary;
};

// One row per consecutive pair of curvature points.
struct FdfMatrix {
  std::vector<FuzzyDirPair> rows;
  // Consecutive pairs skipped because both points coincided.
  std::size_t skipped_degenerate = 0;
};

// Mean fuzzy membership per direction, indexed by Direction::slot().
using FdfVector = std::array<double, kDirectionCount>;

// Wraps any finite angle into (-pi, pi].
double wrap_angle(double angle);

// Angle of the vector from `from` to `to`, in (-pi, pi]. Throws
// DegenerateSegmentError when the points coincide.
double angle_between(const Point2D& to, const Point2D& from);

// Triangular membership 1 - |center - angle| / (pi/4), where the distance is
// taken around the circle. Clamped to [0, 1].
double fuzzy_membership(double center, double angle);

// Splits an angle between the two sectors whose pi/2-wide supports contain
// it. Memberships sum to 1.
FuzzyDirPair fuzzy_direction_pair(double angle);

// Primary direction of the segment from `from` to `to`.
Direction dominant_direction(const Point2D& from, const Point2D& to);

// Throws FeatureExtractionError when fewer than two points are given or
// every consecutive pair is degenerate.
FdfMatrix fdf_matrix(const CriticalPointList& points);

// Per direction: sum of recorded memberships over the number of rows that
// recorded it. Zero memberships recorded at exact sector centres count as
// occurrences; untouched directions are 0. Throws FeatureExtractionError on
// an empty matrix.
FdfVector mean_fdf(const FdfMatrix& matrix);

// Every intermediate of the feature pipeline, for inspection and overlays.
struct FeatureTrace {
  Stroke smoothed;
  CriticalPointList candidates;
  CriticalPointList critical;
  FdfMatrix matrix;
  FdfVector fdf;
};

// anchor -> smooth -> critical points -> trim -> matrix -> mean.
// Indices in the trace refer to points of the input stroke.
FeatureTrace trace_features(const Stroke& stroke, const SmoothingConfig& config);

FdfVector extract_fdf(const Stroke& stroke, const SmoothingConfig& config);

}  // namespace fdf

#endif  // FDF_FEATURES_H_
