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

#include "fdf/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "fdf/errors.h"
#include "json.hpp"

namespace fdf {
namespace {

constexpr int kArcPieces = 32;
constexpr int kTimeGrid = 4096;
// Width (template units) of the slow-down bump around each control point.
constexpr double kSlowdownWidth = 0.06;
constexpr double kSamplesPerTemplateUnit = 40.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Platform-independent normal deviates; std::normal_distribution output is
// implementation defined.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : state_(seed) {}

  double operator()() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  double uniform() {
    state_ = splitmix64(state_);
    return static_cast<double>(state_ >> 11) * 0x1.0p-53;
  }

  std::uint64_t state_;
};

double distance(const Point2D& a, const Point2D& b) {
  return std::hypot(b.x - a.x, b.y - a.y);
}

Point2D lerp(const Point2D& a, const Point2D& b, double t) {
  return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}

struct Path {
  std::vector<Point2D> points;
  std::vector<double> arclength;
  // Arc-length positions of the control points.
  std::vector<double> control_positions;
};

Path build_path(const TemplateSpec& spec) {
  Path path;
  std::vector<std::size_t> control_nodes = {0};
  path.points.push_back(spec.polyline.front());
  for (std::size_t i = 0; i + 1 < spec.polyline.size(); ++i) {
    const Point2D& p = spec.polyline[i];
    const Point2D& q = spec.polyline[i + 1];
    const double bow = i < spec.curvature.size() ? spec.curvature[i] : 0.0;
    if (bow != 0.0) {
      // Quadratic Bezier whose apex sits bow * |pq| off the chord.
      const double dx = q.x - p.x;
      const double dy = q.y - p.y;
      const Point2D control{(p.x + q.x) / 2.0 - 2.0 * bow * dy,
                            (p.y + q.y) / 2.0 + 2.0 * bow * dx};
      for (int k = 1; k < kArcPieces; ++k) {
        const double t = static_cast<double>(k) / kArcPieces;
        path.points.push_back(lerp(lerp(p, control, t), lerp(control, q, t), t));
      }
    }
    path.points.push_back(q);
    control_nodes.push_back(path.points.size() - 1);
  }
  path.arclength.push_back(0.0);
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    path.arclength.push_back(path.arclength.back() +
                             distance(path.points[i - 1], path.points[i]));
  }
  for (std::size_t node : control_nodes) {
    path.control_positions.push_back(path.arclength[node]);
  }
  return path;
}

Point2D point_at(const Path& path, double s) {
  auto it = std::upper_bound(path.arclength.begin(), path.arclength.end(), s);
  if (it == path.arclength.begin()) return path.points.front();
  if (it == path.arclength.end()) return path.points.back();
  const std::size_t hi = static_cast<std::size_t>(it - path.arclength.begin());
  const std::size_t lo = hi - 1;
  const double span = path.arclength[hi] - path.arclength[lo];
  const double t = span > 0.0 ? (s - path.arclength[lo]) / span : 0.0;
  return lerp(path.points[lo], path.points[hi], t);
}

double pen_speed(const Path& path, double s, double profile) {
  double bump = 0.0;
  for (double c : path.control_positions) {
    const double z = (s - c) / kSlowdownWidth;
    bump = std::max(bump, std::exp(-z * z));
  }
  return 1.0 - profile * bump;
}

std::vector<Point2D> sample_in_time(const Path& path, double profile) {
  const double total = path.arclength.back();
  const std::size_t n = std::max(
      kMinSyntheticSamples,
      static_cast<std::size_t>(std::ceil(total * kSamplesPerTemplateUnit)));

  // Elapsed time at each arc-length grid node.
  std::vector<double> time(kTimeGrid + 1, 0.0);
  const double ds = total / kTimeGrid;
  for (int k = 1; k <= kTimeGrid; ++k) {
    const double a = 1.0 / pen_speed(path, (k - 1) * ds, profile);
    const double b = 1.0 / pen_speed(path, k * ds, profile);
    time[k] = time[k - 1] + 0.5 * (a + b) * ds;
  }

  std::vector<Point2D> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = time.back() * static_cast<double>(j) /
                     static_cast<double>(n - 1);
    auto it = std::lower_bound(time.begin(), time.end(), t);
    double s = total;
    if (it != time.end()) {
      const auto hi = static_cast<std::size_t>(it - time.begin());
      if (hi == 0) {
        s = 0.0;
      } else {
        const double frac = (t - time[hi - 1]) / (time[hi] - time[hi - 1]);
        s = (static_cast<double>(hi - 1) + frac) * ds;
      }
    }
    out.push_back(point_at(path, j + 1 == n ? total : s));
  }
  return out;
}

}  // namespace

void TemplateSpec::validate() const {
  if (id.empty()) throw ValidationError("template id must be non-empty");
  if (polyline.size() < 2) {
    throw ValidationError("template '" + id + "' needs at least 2 points");
  }
  for (const Point2D& p : polyline) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
      throw ValidationError("template '" + id +
                            "' has a control point outside the unit box");
    }
  }
  if (curvature.size() > polyline.size() - 1) {
    throw ValidationError("template '" + id + "' has more curvature entries "
                          "than segments");
  }
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    if (polyline[i] == polyline[i + 1]) {
      throw ValidationError("template '" + id + "' repeats a control point");
    }
  }
}

void VariabilitySpec::validate() const {
  if (!(rotation_jitter >= 0.0) || !(scale_jitter >= 0.0) ||
      !(point_noise >= 0.0)) {
    throw ValidationError("variability standard deviations must be >= 0");
  }
  if (!(speed_profile >= 0.0 && speed_profile < 1.0)) {
    throw ValidationError("speed_profile must be in [0, 1)");
  }
}

std::vector<Point2D> flatten_template(const TemplateSpec& spec) {
  spec.validate();
  return build_path(spec).points;
}

Stroke gen_stroke(const TemplateSpec& spec, const VariabilitySpec& var,
                  std::uint64_t instance_seed) {
  spec.validate();
  var.validate();
  const Path path = build_path(spec);
  std::vector<Point2D> points = sample_in_time(path, var.speed_profile);

  double min_x = path.points[0].x, max_x = min_x;
  double min_y = path.points[0].y, max_y = min_y;
  for (const Point2D& p : path.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Point2D center{(min_x + max_x) / 2.0, (min_y + max_y) / 2.0};
  const double extent = std::max(max_x - min_x, max_y - min_y);

  Gaussian normal(splitmix64(var.seed) ^ splitmix64(~instance_seed));
  const double angle = var.rotation_jitter * normal();
  const double scale = std::max(0.2, 1.0 + var.scale_jitter * normal());
  const double noise = var.point_noise * extent;
  const double c = std::cos(angle);
  const double s = std::sin(angle);

  for (Point2D& p : points) {
    const double dx = p.x - center.x;
    const double dy = p.y - center.y;
    const double nx = noise * normal();
    const double ny = noise * normal();
    p.x = (center.x + scale * (c * dx - s * dy) + nx) *
          kDeviceUnitsPerTemplateUnit;
    p.y = (center.y + scale * (s * dx + c * dy) + ny) *
          kDeviceUnitsPerTemplateUnit;
  }
  return Stroke(std::move(points), kSyntheticSampleRateHz);
}

Corpus gen_corpus(std::span<const TemplateSpec> templates,
                  const VariabilitySpec& var, int per_class,
                  double split_ratio) {
  if (per_class < 1) throw ValidationError("per_class must be >= 1");
  if (!(split_ratio >= 0.0 && split_ratio <= 1.0)) {
    throw ValidationError("split_ratio must be in [0, 1]");
  }
  const int train_count =
      static_cast<int>(std::lround(per_class * split_ratio));
  Corpus corpus;
  corpus.items.reserve(templates.size() * static_cast<std::size_t>(per_class));
  for (std::size_t t = 0; t < templates.size(); ++t) {
    for (int i = 0; i < per_class; ++i) {
      const std::uint64_t instance_seed =
          (static_cast<std::uint64_t>(t) << 32) | static_cast<std::uint32_t>(i);
      corpus.items.push_back(LabeledStroke{
          gen_stroke(templates[t], var, instance_seed), templates[t].id,
          std::nullopt, i < train_count ? Split::kTrain : Split::kTest});
    }
  }
  return corpus;
}

std::vector<TemplateSpec> builtin_templates() {
  static constexpr const char* kLineNames[] = {"line_e", "line_ne", "line_n",
                                                "line_nw", "line_w", "line_sw",
                                                "line_s", "line_se"};
  std::vector<TemplateSpec> out;
  for (int d = 0; d < 8; ++d) {
    // Axis-aligned lines use exact coordinates so their angle is exactly a
    // sector centre.
    const double angle = d * std::numbers::pi / 4.0;
    const double dx = d % 2 == 0 ? 0.4 * std::round(std::cos(angle))
                                 : 0.4 * std::cos(angle);
    const double dy = d % 2 == 0 ? 0.4 * std::round(std::sin(angle))
                                 : 0.4 * std::sin(angle);
    out.push_back({kLineNames[d], {{0.5 - dx, 0.5 - dy}, {0.5 + dx, 0.5 + dy}},
                   {}});
  }
  out.push_back({"hook_right_up", {{0.1, 0.2}, {0.8, 0.2}, {0.8, 0.9}}, {}});
  out.push_back({"hook_up_left", {{0.8, 0.1}, {0.8, 0.8}, {0.1, 0.8}}, {}});
  out.push_back({"hook_left_down", {{0.9, 0.8}, {0.2, 0.8}, {0.2, 0.1}}, {}});
  out.push_back({"hook_down_right", {{0.2, 0.9}, {0.2, 0.2}, {0.9, 0.2}}, {}});
  out.push_back({"arc_over", {{0.1, 0.3}, {0.9, 0.3}}, {0.35}});
  out.push_back({"arc_under", {{0.1, 0.7}, {0.9, 0.7}}, {-0.35}});
  return out;
}

std::vector<TemplateSpec> parse_templates(std::string_view json_text) {
  using Json = nlohmann::json;
  Json j = Json::parse(json_text.begin(), json_text.end(), nullptr, false);
  if (j.is_discarded() || !j.is_array()) {
    throw ParseError("template file must be a JSON array", 0);
  }
  std::vector<TemplateSpec> out;
  try {
    for (const Json& item : j) {
      TemplateSpec spec;
      spec.id = item.at("id").get<std::string>();
      for (const Json& p : item.at("polyline")) {
        spec.polyline.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      }
      if (auto it = item.find("curvature"); it != item.end() && !it->is_null()) {
        spec.curvature = it->get<std::vector<double>>();
      }
      spec.validate();
      out.push_back(std::move(spec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad template file: ") + e.what(), 0);
  }
  return out;
}

}  // namespace fdf
