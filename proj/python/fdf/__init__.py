# Copyright 2026 The FDF Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Fuzzy directional features for on-line handwritten stroke recognition."""

from ._core import (
    DegenerateSegmentError,
    FdfError,
    FeatureExtractionError,
    Model,
    ParseError,
    StructuralError,
    TrainingError,
    ValidationError,
    angle_between,
    builtin_labels,
    classify_nbest,
    critical_indices,
    evaluate,
    extract_critical_points,
    extract_fdf,
    fuzzy_direction_pair,
    fuzzy_membership,
    generate_corpus,
    haar_forward,
    haar_inverse,
    parse_corpus_labels,
    rank,
    sign_diff,
    smooth_stroke,
    train,
    trim_spurious,
)

__all__ = [name for name in dir() if not name.startswith("_")]
