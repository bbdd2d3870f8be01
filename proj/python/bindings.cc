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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fdf/classifier.h"
#include "fdf/corpus_io.h"
#include "fdf/critical_points.h"
#include "fdf/errors.h"
#include "fdf/features.h"
#include "fdf/model_io.h"
#include "fdf/preprocess.h"
#include "fdf/report.h"
#include "fdf/synth.h"

namespace py = pybind11;

namespace {

using fdf::Point2D;

fdf::Stroke to_stroke(const std::vector<std::pair<double, double>>& points) {
  std::vector<Point2D> pts;
  pts.reserve(points.size());
  for (const auto& [x, y] : points) pts.push_back({x, y});
  return fdf::Stroke(std::move(pts));
}

std::vector<std::pair<double, double>> to_pairs(const fdf::Stroke& stroke) {
  std::vector<std::pair<double, double>> out;
  for (const Point2D& p : stroke.points()) out.emplace_back(p.x, p.y);
  return out;
}

fdf::SmoothingConfig smoothing(int levels, const std::string& mode,
                               double threshold) {
  fdf::SmoothingConfig config{levels, fdf::parse_smoothing_mode(mode), threshold};
  config.validate();
  return config;
}

py::tuple pair_tuple(const fdf::FuzzyDirPair& pair) {
  return py::make_tuple(
      py::make_tuple(pair.primary.direction.value(), pair.primary.membership),
      py::make_tuple(pair.secondary.direction.value(), pair.secondary.membership));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fuzzy directional features for on-line stroke recognition";

  auto base = py::register_exception<fdf::Error>(m, "FdfError", PyExc_ValueError);
  py::register_exception<fdf::ValidationError>(m, "ValidationError", base);
  py::register_exception<fdf::ParseError>(m, "ParseError", base);
  py::register_exception<fdf::StructuralError>(m, "StructuralError", base);
  py::register_exception<fdf::DegenerateSegmentError>(m, "DegenerateSegmentError",
                                                      base);
  py::register_exception<fdf::FeatureExtractionError>(m, "FeatureExtractionError",
                                                      base);
  py::register_exception<fdf::TrainingError>(m, "TrainingError", base);

  m.def("haar_forward",
        [](const std::vector<double>& seq, int levels) {
          fdf::HaarPyramid p = fdf::haar_forward(seq, levels);
          return py::make_tuple(p.approximation, p.details, p.original_length);
        },
        py::arg("seq"), py::arg("levels"),
        "Returns (approximation, details finest-first, original_length).");
  m.def("haar_inverse",
        [](std::vector<double> approximation,
           std::vector<std::vector<double>> details, std::size_t original_length) {
          return fdf::haar_inverse(
              {std::move(approximation), std::move(details), original_length});
        },
        py::arg("approximation"), py::arg("details"), py::arg("original_length"));
  m.def("smooth_stroke",
        [](const std::vector<std::pair<double, double>>& points, int levels,
           const std::string& mode, double threshold) {
          return to_pairs(
              fdf::smooth_stroke(to_stroke(points), smoothing(levels, mode, threshold)));
        },
        py::arg("points"), py::arg("levels") = 2, py::arg("mode") = "zero",
        py::arg("threshold") = 0.0);

  m.def("sign_diff", [](const std::vector<double>& seq) { return fdf::sign_diff(seq); });
  m.def("critical_indices",
        [](const std::vector<double>& seq) { return fdf::critical_indices(seq); });
  m.def("extract_critical_points",
        [](const std::vector<std::pair<double, double>>& points) {
          return fdf::extract_critical_points(to_stroke(points)).indices;
        });
  m.def("trim_spurious",
        [](const std::vector<std::pair<double, double>>& points) {
          fdf::Stroke stroke = to_stroke(points);
          return fdf::trim_spurious(fdf::extract_critical_points(stroke)).indices;
        },
        "Critical indices of an already smoothed stroke after trimming.");

  m.def("angle_between",
        [](std::pair<double, double> to, std::pair<double, double> from) {
          return fdf::angle_between({to.first, to.second}, {from.first, from.second});
        },
        py::arg("to"), py::arg("from_"));
  m.def("fuzzy_membership", &fdf::fuzzy_membership, py::arg("center"),
        py::arg("angle"));
  m.def("fuzzy_direction_pair",
        [](double angle) { return pair_tuple(fdf::fuzzy_direction_pair(angle)); },
        py::arg("angle"),
        "((primary_dir, membership), (secondary_dir, membership))");
  m.def("extract_fdf",
        [](const std::vector<std::pair<double, double>>& points, int levels,
           const std::string& mode, double threshold) {
          return fdf::extract_fdf(to_stroke(points),
                                  smoothing(levels, mode, threshold));
        },
        py::arg("points"), py::arg("levels") = 2, py::arg("mode") = "zero",
        py::arg("threshold") = 0.0);

  py::class_<fdf::Model>(m, "Model")
      .def_property_readonly("labels", &fdf::Model::labels)
      .def_property_readonly("templates",
                             [](const fdf::Model& model) { return model.templates; })
      .def("to_json", [](const fdf::Model& model) { return fdf::model_to_json(model); })
      .def_static("from_json", [](const std::string& text) {
        return fdf::model_from_json(text);
      });

  m.def("parse_corpus_labels",
        [](const std::string& text) {
          std::vector<std::string> labels;
          for (const auto& item : fdf::parse_corpus(text).items) {
            labels.push_back(item.label.value_or(""));
          }
          return labels;
        },
        "Labels of every record in a JSONL corpus, in file order.");
  m.def("generate_corpus",
        [](int per_class, std::uint64_t seed, double rotation_jitter,
           double scale_jitter, double point_noise, double speed_profile,
           double split_ratio) {
          fdf::VariabilitySpec var{rotation_jitter, scale_jitter, point_noise,
                                   speed_profile, seed};
          return fdf::write_corpus(fdf::gen_corpus(fdf::builtin_templates(), var,
                                                   per_class, split_ratio));
        },
        py::arg("per_class"), py::arg("seed") = 0, py::arg("rotation_jitter") = 0.0,
        py::arg("scale_jitter") = 0.0, py::arg("point_noise") = 0.0,
        py::arg("speed_profile") = 0.0, py::arg("split_ratio") = 0.5,
        "Built-in template corpus as JSONL text.");
  m.def("builtin_labels", [] {
    std::vector<std::string> ids;
    for (const auto& t : fdf::builtin_templates()) ids.push_back(t.id);
    return ids;
  });

  m.def("train",
        [](const std::string& corpus_text, const std::string& split, int levels,
           const std::string& mode, double threshold) {
          fdf::Corpus corpus = fdf::parse_corpus(corpus_text);
          if (split != "all") corpus = corpus.filter(fdf::parse_split(split));
          return fdf::train(corpus, smoothing(levels, mode, threshold));
        },
        py::arg("corpus_text"), py::arg("split") = "train", py::arg("levels") = 2,
        py::arg("mode") = "zero", py::arg("threshold") = 0.0);
  m.def("rank",
        [](const fdf::Model& model, const fdf::FdfVector& fdf_vector) {
          std::vector<std::pair<std::string, double>> out;
          for (const auto& e : fdf::rank(model, fdf_vector)) {
            out.emplace_back(e.label, e.squared_distance);
          }
          return out;
        });
  m.def("classify_nbest",
        [](const fdf::Model& model,
           const std::vector<std::pair<double, double>>& points, int alpha) {
          return fdf::classify_nbest(model, to_stroke(points), alpha);
        },
        py::arg("model"), py::arg("points"), py::arg("alpha") = 5);
  m.def("evaluate",
        [](const fdf::Model& model, const std::string& corpus_text,
           const std::vector<int>& alphas) {
          const fdf::AccuracyTable table =
              fdf::evaluate(model, fdf::parse_corpus(corpus_text), alphas);
          return fdf::render_accuracy_table(table);
        },
        py::arg("model"), py::arg("corpus_text"),
        py::arg("alphas") = std::vector<int>{1, 2, 5},
        "Renders the accuracy table for a JSONL corpus.");
}
