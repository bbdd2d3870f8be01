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

#ifndef FDF_PREPROCESS_H_
#define FDF_PREPROCESS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fdf/stroke.h"

namespace fdf {

enum class SmoothingMode {
  // Every detail band up to the configured depth is zeroed.
  kZeroDetail,
  // Details are shrunk toward zero by `threshold` (soft thresholding).
  kSoftThreshold,
};

const char* to_string(SmoothingMode mode);
// Accepts "zero"/"zero_detail" and "soft"/"soft_threshold".
SmoothingMode parse_smoothing_mode(const std::string& text);

struct SmoothingConfig {
  int levels = 2;
  SmoothingMode mode = SmoothingMode::kZeroDetail;
  double threshold = 0.0;

  // Throws ValidationError on negative levels or threshold.
  void validate() const;

  friend bool operator==(const SmoothingConfig&, const SmoothingConfig&) =
      default;
};

// Orthonormal Haar analysis of a sequence mirror-padded to a power of two.
// details[0] is the finest band; details.back() has the same length as
// `approximation`.
struct HaarPyramid {
  std::vector<double> approximation;
  std::vector<std::vector<double>> details;
  // Length of the unpadded input; reconstruction is truncated to it.
  std::size_t original_length = 0;
};

// `levels` beyond log2 of the padded length is clamped. Requires a non-empty
// sequence and levels >= 0.
HaarPyramid haar_forward(std::span<const double> seq, int levels);

// Throws StructuralError when band sizes do not halve level over level or
// when `original_length` exceeds the padded length.
std::vector<double> haar_inverse(const HaarPyramid& pyramid);

// Smooths the x and y sequences independently. The point count is
// preserved.
Stroke smooth_stroke(const Stroke& stroke, const SmoothingConfig& config);

// 1-D smoothing used by smooth_stroke.
std::vector<double> smooth_sequence(std::span<const double> seq,
                                    const SmoothingConfig& config);

}  // namespace fdf

#endif  // FDF_PREPROCESS_H_
