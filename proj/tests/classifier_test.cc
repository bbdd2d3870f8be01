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

#include <string>
#include <vector>

#include "fdf/classifier.h"
#include "fdf/errors.h"
#include "fdf/model_io.h"
#include "fdf/synth.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace fdf {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

Stroke line(double dx, double dy, int n = 20) {
  std::vector<Point2D> pts;
  for (int i = 0; i < n; ++i) pts.push_back({dx * i, dy * i});
  return Stroke(pts);
}

LabeledStroke labeled(Stroke s, std::string label,
                      std::optional<Split> split = Split::kTrain) {
  return {std::move(s), std::move(label), std::nullopt, split};
}

FdfVector vec(std::initializer_list<double> v) {
  FdfVector out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

Model toy_model() {
  Model m;
  m.templates["a"] = vec({1, 0, 0, 0, 0, 0, 0, 0});
  m.templates["b"] = vec({0, 1, 0, 0, 0, 0, 0, 0});
  m.templates["c"] = vec({0, 0, 1, 0, 0, 0, 0, 0});
  return m;
}

Corpus synthetic(double variability, int per_class, std::uint64_t seed) {
  const auto templates = builtin_templates();
  VariabilitySpec var{0.06 * variability, 0.05 * variability,
                      0.005 * variability, 0.5, seed};
  return gen_corpus(templates, var, per_class, 0.5);
}

TEST(SquaredDistanceTest, Example) {
  EXPECT_DOUBLE_EQ(squared_distance(vec({1, 0.5}), vec({0, 1})), 1.25);
}

TEST(TrainTest, AveragesPerLabel) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "h"));
  c.items.push_back(labeled(line(2, 0), "h"));
  c.items.push_back(labeled(line(0, 1), "v"));
  const Model m = train(c, {}, "2026-01-01T00:00:00Z");
  EXPECT_THAT(m.labels(), ElementsAre("h", "v"));
  EXPECT_EQ(m.templates.at("h"), vec({1}));
  EXPECT_EQ(m.templates.at("v"), vec({0, 0, 1}));
  EXPECT_EQ(m.meta.training_strokes, 3u);
  EXPECT_EQ(m.meta.exemplars_per_label.at("h"), 2u);
  EXPECT_EQ(m.meta.created_at, "2026-01-01T00:00:00Z");
}

TEST(TrainTest, MeanOfMixedExemplars) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "x"));
  c.items.push_back(labeled(line(0, 1), "x"));
  EXPECT_EQ(train(c, {}).templates.at("x"), vec({0.5, 0, 0.5}));
}

TEST(TrainTest, DegenerateStrokesAreExcluded) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "h"));
  c.items.push_back(labeled(Stroke({{1, 1}, {1, 1}}), "h"));
  const Model m = train(c, {});
  EXPECT_EQ(m.meta.training_strokes, 1u);
  EXPECT_EQ(m.meta.excluded_strokes, 1u);
  EXPECT_EQ(m.meta.excluded_per_label.at("h"), 1u);
}

TEST(TrainTest, Errors) {
  EXPECT_THROW(train(Corpus{}, {}), ValidationError);
  Corpus unlabeled;
  unlabeled.items.push_back({line(1, 0), std::nullopt, std::nullopt, std::nullopt});
  EXPECT_THROW(train(unlabeled, {}), ValidationError);
  Corpus hopeless;
  hopeless.items.push_back(labeled(line(1, 0), "ok"));
  hopeless.items.push_back(labeled(Stroke({{0, 0}, {0, 0}}), "dot"));
  try {
    train(hopeless, {});
    FAIL();
  } catch (const TrainingError& e) {
    EXPECT_THAT(e.what(), HasSubstr("dot"));
  }
}

TEST(RankTest, OrdersByDistance) {
  const RankedResult r = rank(toy_model(), vec({0.1, 0.9}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].label, "b");
  EXPECT_EQ(r[1].label, "a");
  EXPECT_EQ(r[2].label, "c");
  EXPECT_DOUBLE_EQ(r[0].squared_distance, 0.02);
}

TEST(RankTest, TiesBreakByLabel) {
  Model m;
  m.templates["zeta"] = vec({1});
  m.templates["alpha"] = vec({0, 1});
  m.templates["mid"] = vec({0, 0, 1});
  const RankedResult r = rank(m, vec({}));
  EXPECT_EQ(r[0].label, "alpha");
  EXPECT_EQ(r[1].label, "mid");
  EXPECT_EQ(r[2].label, "zeta");
}

TEST(ClassifyNbestTest, LengthIsCappedByLabelCount) {
  Model m = toy_model();
  const Stroke s = line(1, 0);
  EXPECT_THAT(classify_nbest(m, s, 1), ElementsAre("a"));
  EXPECT_EQ(classify_nbest(m, s, 2).size(), 2u);
  EXPECT_EQ(classify_nbest(m, s, 10).size(), 3u);
  EXPECT_THROW(classify_nbest(m, s, 0), ValidationError);
}

TEST(EvaluateTest, SelfEvaluationIsPerfect) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "h"));
  c.items.push_back(labeled(line(0, 1), "v"));
  c.items.push_back(labeled(line(-1, 0), "w", Split::kTest));
  const Model m = train(c, {});
  const AccuracyTable t = evaluate(m, c, {2, 1, 2});
  EXPECT_THAT(t.alphas, ElementsAre(1, 2));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].split, "train");
  EXPECT_EQ(t.rows[1].split, "test");
  EXPECT_EQ(t.rows[0].cells[0], (AccuracyCell{2, 2}));
  EXPECT_EQ(t.rows[1].cells[1], (AccuracyCell{1, 1}));
  EXPECT_EQ(t.sample_points, 60u);
  EXPECT_EQ(t.curvature_points, 6u);
}

TEST(EvaluateTest, MonotoneInAlpha) {
  const Corpus c = synthetic(2.0, 12, 3);
  Corpus train_part = c.filter(Split::kTrain);
  const Model m = train(train_part, {});
  const AccuracyTable t = evaluate(m, c, {1, 2, 3, 5, 8, 14});
  for (const AccuracyRow& row : t.rows) {
    for (std::size_t i = 1; i < row.cells.size(); ++i) {
      EXPECT_LE(row.cells[i - 1].correct, row.cells[i].correct) << row.split;
    }
    EXPECT_EQ(row.cells.back().correct, row.cells.back().total);
  }
}

TEST(EvaluateTest, UnknownLabelsCountAsWrong) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "h"));
  const Model m = train(c, {});
  c.items.push_back(labeled(line(0, 1), "unseen", std::nullopt));
  const AccuracyTable t = evaluate(m, c, {1, 5});
  EXPECT_EQ(t.unknown_label_strokes, 1u);
  ASSERT_EQ(t.rows.back().split, "all");
  EXPECT_EQ(t.rows.back().cells[1], (AccuracyCell{0, 1}));
}

TEST(EvaluateTest, Errors) {
  Corpus c;
  c.items.push_back(labeled(line(1, 0), "h"));
  const Model m = train(c, {});
  EXPECT_THROW(evaluate(m, c, {}), ValidationError);
  EXPECT_THROW(evaluate(m, c, {0}), ValidationError);
  c.items.push_back({line(0, 1), std::nullopt, std::nullopt, Split::kTest});
  EXPECT_THROW(evaluate(m, c, {1}), ValidationError);
}

TEST(EvaluateTest, Deterministic) {
  const Corpus c = synthetic(1.0, 6, 11);
  const Model m = train(c.filter(Split::kTrain), {});
  EXPECT_EQ(evaluate(m, c, {1, 5}), evaluate(m, c, {1, 5}));
  EXPECT_EQ(m, train(c.filter(Split::kTrain), {}));
}

TEST(EvaluateTest, RankingInvariantUnderScaling) {
  const Corpus c = synthetic(1.0, 4, 5);
  const Model m = train(c, {});
  for (const LabeledStroke& item : c.items) {
    const Stroke big = testing::transform(item.stroke, 4.0, 0, 0);
    EXPECT_EQ(classify_nbest(m, item.stroke, 14), classify_nbest(m, big, 14));
  }
}

TEST(ModelIoTest, RoundTrip) {
  Corpus c = synthetic(1.0, 2, 1);
  c.items.push_back(labeled(Stroke({{0, 0}, {0, 0}}), "line_e"));
  const Model m = train(c, {3, SmoothingMode::kSoftThreshold, 0.25},
                        "2026-03-04T05:06:07Z");
  const std::string text = model_to_json(m);
  const Model back = model_from_json(text);
  EXPECT_EQ(back, m);
  EXPECT_EQ(model_to_json(back), text);
}

TEST(ModelIoTest, RejectsBadInput) {
  const std::string good = model_to_json(toy_model());
  std::string bad_version = good;
  bad_version.replace(bad_version.find("\"format_version\": 1"), 19,
                      "\"format_version\": 7");
  EXPECT_THROW(model_from_json(bad_version), ParseError);
  EXPECT_THROW(model_from_json("{"), ParseError);
  std::string out_of_range = good;
  out_of_range.replace(out_of_range.find("1.0"), 3, "1.5");
  EXPECT_THROW(model_from_json(out_of_range), ValidationError);
}

}  // namespace
}  // namespace fdf
