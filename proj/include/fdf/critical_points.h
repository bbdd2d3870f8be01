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

#ifndef FDF_CRITICAL_POINTS_H_
#define FDF_CRITICAL_POINTS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "fdf/stroke.h"

namespace fdf {

// sgn(seq[i] - seq[i + 1]) for every i; values are -1, 0 or +1.
// Throws ValidationError when seq has fewer than 2 elements.
std::vector<int> sign_diff(std::span<const double> seq);

// Critical points of a coordinate sequence, 0-based and ascending.
//
// Index i + 1 is critical whenever sign_diff changes between positions i and
// i + 1, so the sample where motion reverses, stops or starts is kept. A flat
// run entered and left with opposite signs is one extremum and is reported
// only at its first sample.
std::vector<std::size_t> critical_indices(std::span<const double> seq);

// Ordered curvature points of a stroke. indices[0] == 0 and
// indices.back() == n - 1, strictly increasing.
struct CriticalPointList {
  std::vector<std::size_t> indices;
  std::vector<Point2D> points;

  std::size_t size() const { return indices.size(); }

  friend bool operator==(const CriticalPointList&, const CriticalPointList&) =
      default;
};

// Endpoints plus the union of the x and y turning points.
CriticalPointList extract_critical_points(const Stroke& stroke);

// Drops interior points whose incoming and outgoing segments share a dominant
// fuzzy direction, scanning left to right until nothing changes. An interior
// point coinciding with a neighbour has no direction and is dropped too.
// Endpoints are kept.
CriticalPointList trim_spurious(CriticalPointList points);

}  // namespace fdf

#endif  // FDF_CRITICAL_POINTS_H_
