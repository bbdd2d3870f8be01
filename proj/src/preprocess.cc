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

#include "fdf/preprocess.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

#include "fdf/errors.h"

namespace fdf {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// Half-sample symmetric extension: ..., x[n-2], x[n-1] | x[n-1], x[n-2], ...
std::vector<double> mirror_pad(std::span<const double> seq) {
  const std::size_t n = seq.size();
  const std::size_t padded = std::bit_ceil(n);
  std::vector<double> out(seq.begin(), seq.end());
  out.reserve(padded);
  for (std::size_t i = n; i < padded; ++i) out.push_back(seq[2 * n - 1 - i]);
  return out;
}

double soft_threshold(double value, double threshold) {
  const double magnitude = std::abs(value) - threshold;
  if (magnitude <= 0.0) return 0.0;
  return std::copysign(magnitude, value);
}

}  // namespace

const char* to_string(SmoothingMode mode) {
  return mode == SmoothingMode::kZeroDetail ? "zero_detail" : "soft_threshold";
}

SmoothingMode parse_smoothing_mode(const std::string& text) {
  if (text == "zero" || text == "zero_detail") return SmoothingMode::kZeroDetail;
  if (text == "soft" || text == "soft_threshold") {
    return SmoothingMode::kSoftThreshold;
  }
  throw ValidationError("unknown smoothing mode '" + text + "'");
}

void SmoothingConfig::validate() const {
  if (levels < 0) throw ValidationError("smoothing levels must be >= 0");
  if (!(threshold >= 0.0)) {
    throw ValidationError("smoothing threshold must be >= 0");
  }
}

HaarPyramid haar_forward(std::span<const double> seq, int levels) {
  if (seq.empty()) throw ValidationError("cannot transform an empty sequence");
  if (levels < 0) throw ValidationError("levels must be >= 0");

  HaarPyramid pyramid;
  pyramid.original_length = seq.size();
  pyramid.approximation = mirror_pad(seq);

  const int max_levels = std::countr_zero(pyramid.approximation.size());
  const int depth = std::min(levels, max_levels);
  for (int level = 0; level < depth; ++level) {
    const std::vector<double>& current = pyramid.approximation;
    const std::size_t half = current.size() / 2;
    std::vector<double> approx(half);
    std::vector<double> detail(half);
    for (std::size_t i = 0; i < half; ++i) {
      const double a = current[2 * i];
      const double b = current[2 * i + 1];
      approx[i] = (a + b) * kInvSqrt2;
      detail[i] = (a - b) * kInvSqrt2;
    }
    pyramid.approximation = std::move(approx);
    pyramid.details.push_back(std::move(detail));
  }
  return pyramid;
}

std::vector<double> haar_inverse(const HaarPyramid& pyramid) {
  std::vector<double> current = pyramid.approximation;
  for (auto band = pyramid.details.rbegin(); band != pyramid.details.rend();
       ++band) {
    if (band->size() != current.size()) {
      throw StructuralError("detail band of length " +
                            std::to_string(band->size()) +
                            " does not match approximation of length " +
                            std::to_string(current.size()));
    }
    std::vector<double> next(2 * current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      next[2 * i] = (current[i] + (*band)[i]) * kInvSqrt2;
      next[2 * i + 1] = (current[i] - (*band)[i]) * kInvSqrt2;
    }
    current = std::move(next);
  }
  if (pyramid.original_length > current.size()) {
    throw StructuralError("original length " +
                          std::to_string(pyramid.original_length) +
                          " exceeds reconstructed length " +
                          std::to_string(current.size()));
  }
  current.resize(pyramid.original_length);
  return current;
}

std::vector<double> smooth_sequence(std::span<const double> seq,
                                    const SmoothingConfig& config) {
  config.validate();
  if (config.levels == 0 || seq.empty()) {
    return std::vector<double>(seq.begin(), seq.end());
  }
  HaarPyramid pyramid = haar_forward(seq, config.levels);
  for (std::vector<double>& band : pyramid.details) {
    for (double& d : band) {
      d = config.mode == SmoothingMode::kZeroDetail
              ? 0.0
              : soft_threshold(d, config.threshold);
    }
  }
  return haar_inverse(pyramid);
}

Stroke smooth_stroke(const Stroke& stroke, const SmoothingConfig& config) {
  const std::vector<double> xs = stroke.xs();
  const std::vector<double> ys = stroke.ys();
  return Stroke::FromCoordinates(smooth_sequence(xs, config),
                                 smooth_sequence(ys, config),
                                 stroke.sample_rate_hz());
}

}  // namespace fdf
