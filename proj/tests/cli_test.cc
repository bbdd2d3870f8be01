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

#include <unistd.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "fdf/corpus_io.h"
#include "fdf/model_io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace fdf::cli {
namespace {

using Json = nlohmann::json;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fdf_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "fdf");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  // The small pipeline behind the eval golden file.
  void small_pipeline() {
    ASSERT_EQ(run({"gen", "--per-class", "6", "--seed", "3", "-o", path("c.jsonl")}).code,
              kExitOk);
    ASSERT_EQ(run({"train", "--corpus", path("c.jsonl"), "--created-at",
                   "2026-01-01T00:00:00Z", "-o", path("m.json")})
                  .code,
              kExitOk);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GenWritesEveryClass) {
  const Result r = run({"gen", "-o", path("c.jsonl")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Corpus c = read_corpus_file(path("c.jsonl"));
  EXPECT_EQ(c.size(), 280u);
  EXPECT_EQ(c.label_set().size(), 14u);
  EXPECT_EQ(c.filter(Split::kTrain).size(), 140u);
}

TEST_F(CliTest, GenIsByteIdentical) {
  ASSERT_EQ(run({"gen", "--seed", "9", "-o", path("a.jsonl")}).code, kExitOk);
  ASSERT_EQ(run({"gen", "--seed", "9", "-o", path("b.jsonl")}).code, kExitOk);
  ASSERT_EQ(run({"gen", "--seed", "10", "-o", path("c.jsonl")}).code, kExitOk);
  EXPECT_EQ(read_text_file(path("a.jsonl")), read_text_file(path("b.jsonl")));
  EXPECT_NE(read_text_file(path("a.jsonl")), read_text_file(path("c.jsonl")));
}

TEST_F(CliTest, GenUsageErrors) {
  EXPECT_EQ(run({"gen", "--per-class", "0", "-o", path("x")}).code, kExitUsage);
  EXPECT_EQ(run({"gen"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "--split-ratio", "2", "-o", path("x")}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
}

TEST_F(CliTest, GenFromTemplateFile) {
  write_text_file(path("t.json"),
                  R"([{"id":"vee","polyline":[[0,0],[0.5,1],[1,0]]}])");
  ASSERT_EQ(run({"gen", "--classes", path("t.json"), "--per-class", "3", "-o",
                 path("c.jsonl")})
                .code,
            kExitOk);
  EXPECT_EQ(read_corpus_file(path("c.jsonl")).label_set(),
            std::set<std::string>{"vee"});
}

TEST_F(CliTest, TrainRecordsSmoothingAndIsRepeatable) {
  ASSERT_EQ(run({"gen", "--per-class", "4", "-o", path("c.jsonl")}).code, kExitOk);
  const std::vector<std::string> train = {
      "train", "--corpus", path("c.jsonl"), "--smooth-levels", "0",
      "--created-at", "2026-02-02T00:00:00Z", "-o", path("m.json")};
  const Result r = run(train);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("line_e: 2 exemplars, 0 excluded"));
  const Model m = load_model(path("m.json"));
  EXPECT_EQ(m.meta.smoothing.levels, 0);
  EXPECT_EQ(m.meta.created_at, "2026-02-02T00:00:00Z");
  const std::string first = read_text_file(path("m.json"));
  ASSERT_EQ(run(train).code, kExitOk);
  EXPECT_EQ(read_text_file(path("m.json")), first);
}

TEST_F(CliTest, TrainErrors) {
  EXPECT_EQ(run({"train", "--corpus", path("missing.jsonl"), "-o", path("m")}).code,
            kExitUsage);
  write_text_file(path("bad.jsonl"), "{\"label\": \"a\", \"points\": [[0,0],[1,1]]}\n[\n");
  const Result r = run({"train", "--corpus", path("bad.jsonl"), "--split", "all", "-o",
                        path("m.json")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_THAT(r.err, HasSubstr("line 2"));
}

TEST_F(CliTest, EvalMatchesGolden) {
  small_pipeline();
  const Result r = run({"eval", "--model", path("m.json"), "--corpus", path("c.jsonl"),
                        "--json", path("r.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, read_text_file(std::string(FDF_GOLDEN_DIR) + "/eval_synthetic.txt"));
  const Json report = Json::parse(read_text_file(path("r.json")));
  EXPECT_EQ(report["alphas"], Json({1, 2, 5}));
}

TEST_F(CliTest, EvalCustomAlphas) {
  small_pipeline();
  const Result r = run({"eval", "--model", path("m.json"), "--corpus", path("c.jsonl"),
                        "--alpha", "3,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, StartsWith("| Data       | alpha=1"));
  EXPECT_THAT(r.out, HasSubstr("alpha=3"));
  EXPECT_EQ(run({"eval", "--model", path("m.json"), "--corpus", path("c.jsonl"),
                 "--alpha", "0"})
                .code,
            kExitUsage);
}

TEST_F(CliTest, ClassifyPrintsAlphaLines) {
  small_pipeline();
  Json points = Json::array();
  for (int i = 0; i < 30; ++i) points.push_back({10 * i, 0});
  write_text_file(path("s.jsonl"), Json{{"points", points}}.dump());
  const Result r = run({"classify", "--model", path("m.json"), "--input", path("s.jsonl"),
                        "--alpha", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string line; std::getline(lines, line);) got.push_back(line);
  ASSERT_EQ(got.size(), 3u);
  EXPECT_THAT(got[0], StartsWith("line_e "));
}

TEST_F(CliTest, ClassifyDegenerateStroke) {
  small_pipeline();
  write_text_file(path("dot.jsonl"), R"({"points": [[5,5],[5,5],[5,5]]})");
  const Result r =
      run({"classify", "--model", path("m.json"), "--input", path("dot.jsonl")});
  EXPECT_EQ(r.code, kExitFailure);
  const Json err = Json::parse(r.err);
  EXPECT_EQ(err["error"], "feature_extraction");
  EXPECT_TRUE(err.contains("message"));
}

TEST_F(CliTest, InspectShape) {
  write_text_file(path("l.jsonl"),
                  R"({"label":"L","points":[[0,0],[10,0],[20,0],[30,0],[40,0],)"
                  R"([40,10],[40,20],[40,30],[40,40]]})");
  const Result r = run({"inspect", "--input", path("l.jsonl"), "--smooth-levels", "0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["label"], "L");
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["critical_indices"], Json({0, 4, 8}));
  EXPECT_EQ(j["critical_points"][1], Json({40.0, 0.0}));
  EXPECT_EQ(j["fdf_matrix"].size(), 2u);
  EXPECT_EQ(j["fdf"], Json({1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
  EXPECT_EQ(j["smoothed"][8], Json({40.0, 40.0}));
}

TEST_F(CliTest, UnwritableOutputFails) {
  const Result r = run({"gen", "--per-class", "1", "-o", path("no/such/dir/c.jsonl")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace fdf::cli
