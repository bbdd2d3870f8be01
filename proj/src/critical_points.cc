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

#include "fdf/critical_points.h"

#include <algorithm>
#include <utility>

#include "fdf/errors.h"
#include "fdf/features.h"

namespace fdf {

std::vector<int> sign_diff(std::span<const double> seq) {
  if (seq.size() < 2) {
    throw ValidationError("sign_diff needs at least 2 values");
  }
  std::vector<int> signs(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const double k = seq[i] - seq[i + 1];
    signs[i] = (k > 0.0) - (k < 0.0);
  }
  return signs;
}

std::vector<std::size_t> critical_indices(std::span<const double> seq) {
  std::vector<std::size_t> out;
  if (seq.size() < 2) return out;
  const std::vector<int> signs = sign_diff(seq);

  for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
    if (signs[i] == signs[i + 1]) continue;
    if (signs[i] == 0) {
      // Leaving a flat run. If it was entered with the opposite sign the run
      // is an extremum already marked at its first point.
      std::size_t start = i;
      while (start > 0 && signs[start - 1] == 0) --start;
      if (start > 0 && signs[start - 1] == -signs[i + 1]) continue;
    }
    out.push_back(i + 1);
  }
  return out;
}

CriticalPointList extract_critical_points(const Stroke& stroke) {
  const std::size_t n = stroke.size();
  std::vector<std::size_t> indices = {0, n - 1};
  for (std::size_t i : critical_indices(stroke.xs())) indices.push_back(i);
  for (std::size_t i : critical_indices(stroke.ys())) indices.push_back(i);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  CriticalPointList out;
  out.points.reserve(indices.size());
  for (std::size_t i : indices) out.points.push_back(stroke[i]);
  out.indices = std::move(indices);
  return out;
}

namespace {

bool is_spurious(const CriticalPointList& cpl, std::size_t l) {
  const Point2D& prev = cpl.points[l - 1];
  const Point2D& here = cpl.points[l];
  const Point2D& next = cpl.points[l + 1];
  if (here == prev || here == next) return true;
  return dominant_direction(prev, here) == dominant_direction(here, next);
}

}  // namespace

CriticalPointList trim_spurious(CriticalPointList cpl) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t l = 1;
    while (l + 1 < cpl.size()) {
      if (is_spurious(cpl, l)) {
        cpl.indices.erase(cpl.indices.begin() + static_cast<std::ptrdiff_t>(l));
        cpl.points.erase(cpl.points.begin() + static_cast<std::ptrdiff_t>(l));
        changed = true;
      } else {
        ++l;
      }
    }
  }
  return cpl;
}

}  // namespace fdf
