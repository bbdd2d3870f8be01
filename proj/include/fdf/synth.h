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

#ifndef FDF_SYNTH_H_
#define FDF_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdf/stroke.h"

namespace fdf {

// Template coordinates live in the unit box; generated strokes are scaled to
// device units by this factor.
inline constexpr double kDeviceUnitsPerTemplateUnit = 1000.0;
inline constexpr std::size_t kMinSyntheticSamples = 30;
inline constexpr double kSyntheticSampleRateHz = 100.0;

// A primitive shape: a polyline in [0,1]^2 whose segments may bow into
// arcs. curvature[i] is the sagitta of segment i as a fraction of its chord,
// positive to the left of the direction of travel. Missing entries are 0.
struct TemplateSpec {
  std::string id;
  std::vector<Point2D> polyline;
  std::vector<double> curvature;

  // Throws ValidationError on an empty id, fewer than 2 control points, a
  // control point outside the unit box or too many curvature entries.
  void validate() const;
};

// Writer-style perturbations. Noise is a per-coordinate standard deviation
// expressed as a fraction of the template's bounding-box extent.
struct VariabilitySpec {
  double rotation_jitter = 0.0;  // radians
  double scale_jitter = 0.0;     // relative
  double point_noise = 0.0;
  // In [0, 1): how much the simulated pen slows down at control points.
  // 0 samples uniformly in arc length.
  double speed_profile = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Densely flattened template path in template units.
std::vector<Point2D> flatten_template(const TemplateSpec& spec);

// Samples the template uniformly in time under the speed profile (so samples
// crowd at bends), then rotates and scales about the bounding-box centre and
// adds Gaussian noise per sample. Deterministic in (var.seed, instance_seed).
Stroke gen_stroke(const TemplateSpec& spec, const VariabilitySpec& var,
                  std::uint64_t instance_seed);

// per_class instances of every template, class by class. Within a class the
// first round(per_class * split_ratio) instances are tagged train, the rest
// test. Throws ValidationError when per_class < 1 or split_ratio is outside
// [0, 1].
Corpus gen_corpus(std::span<const TemplateSpec> templates,
                  const VariabilitySpec& var, int per_class, double split_ratio);

// 8 straight lines (one per direction sector), 4 L-hooks and 2 arcs.
std::vector<TemplateSpec> builtin_templates();

// JSON array of {"id": str, "polyline": [[x,y],...], "curvature": [..]}.
std::vector<TemplateSpec> parse_templates(std::string_view json_text);

}  // namespace fdf

#endif  // FDF_SYNTH_H_
