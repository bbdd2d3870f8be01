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

#ifndef FDF_TESTS_TEST_UTIL_H_
#define FDF_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "fdf/stroke.h"
#include "fdf/synth.h"

namespace fdf::testing {

// Moderately perturbed built-in strokes, one per (template, instance).
inline std::vector<Stroke> random_synthetic_strokes(std::size_t count,
                                                    std::uint64_t seed) {
  const std::vector<TemplateSpec> templates = builtin_templates();
  VariabilitySpec var{0.06, 0.05, 0.005, 0.5, seed};
  std::vector<Stroke> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(gen_stroke(templates[i % templates.size()], var, i));
  }
  return out;
}

// Rounds to integer device units, as digitizers report them.
inline Stroke quantize(const Stroke& stroke) {
  std::vector<Point2D> points;
  for (const Point2D& p : stroke.points()) {
    points.push_back({std::round(p.x), std::round(p.y)});
  }
  return Stroke(std::move(points), stroke.sample_rate_hz());
}

inline Stroke transform(const Stroke& stroke, double scale, double dx,
                        double dy) {
  std::vector<Point2D> points;
  for (const Point2D& p : stroke.points()) {
    points.push_back({scale * p.x + dx, scale * p.y + dy});
  }
  return Stroke(std::move(points), stroke.sample_rate_hz());
}

// (x, y) -> (-y, x): exact in floating point.
inline Stroke rotate_quarter_turn(const Stroke& stroke) {
  std::vector<Point2D> points;
  for (const Point2D& p : stroke.points()) points.push_back({-p.y, p.x});
  return Stroke(std::move(points), stroke.sample_rate_hz());
}

// Works on maximal runs of equal values instead of sign sequences. A run
// whose neighbouring runs are both higher or both lower is an extremum and
// is marked at its first sample. Any other run longer than one sample is a
// stop/start of motion, marked at each end that borders a moving stretch.
inline std::vector<std::size_t> turning_point_oracle(const std::vector<double>& v) {
  struct Run {
    std::size_t start, end;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && v[i] == v[i - 1]) {
      runs.back().end = i;
    } else {
      runs.push_back({i, i});
    }
  }
  std::set<std::size_t> marked;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const bool has_left = r > 0;
    const bool has_right = r + 1 < runs.size();
    const double here = v[runs[r].start];
    if (has_left && has_right) {
      const double left = v[runs[r - 1].start];
      const double right = v[runs[r + 1].start];
      if ((left < here) == (right < here)) {
        marked.insert(runs[r].start);
        continue;
      }
    }
    if (runs[r].end > runs[r].start) {
      if (has_left) marked.insert(runs[r].start);
      if (has_right) marked.insert(runs[r].end);
    }
  }
  return {marked.begin(), marked.end()};
}

}  // namespace fdf::testing

#endif  // FDF_TESTS_TEST_UTIL_H_
