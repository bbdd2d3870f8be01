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

#include "commands.h"

#include <csignal>
#include <cstdio>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fdf/classifier.h"
#include "fdf/corpus_io.h"
#include "fdf/errors.h"
#include "fdf/features.h"
#include "fdf/model_io.h"
#include "fdf/preprocess.h"
#include "fdf/report.h"
#include "fdf/service.h"
#include "fdf/synth.h"
#include "json.hpp"

namespace fdf::cli {
namespace {

using Json = nlohmann::ordered_json;

struct SmoothingFlags {
  int levels = 2;
  std::string mode = "zero";
  double threshold = 0.0;

  SmoothingConfig config() const {
    SmoothingConfig c{levels, parse_smoothing_mode(mode), threshold};
    c.validate();
    return c;
  }
};

void add_smoothing_flags(CLI::App* cmd, SmoothingFlags& flags) {
  cmd->add_option("--smooth-levels", flags.levels, "Haar decomposition depth")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--smooth-mode", flags.mode, "zero | soft")
      ->check(CLI::IsMember({"zero", "soft", "zero_detail", "soft_threshold"}))
      ->capture_default_str();
  cmd->add_option("--smooth-threshold", flags.threshold,
                  "Soft-threshold shrinkage (soft mode only)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

std::string iso_utc(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// SOURCE_DATE_EPOCH pins the timestamp for reproducible model files.
std::string default_timestamp() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    return iso_utc(static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10)));
  }
  return iso_utc(std::time(nullptr));
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  return read_text_file(path);
}

LabeledStroke read_single_record(const std::string& path,
                                 const ParseOptions& options) {
  Corpus corpus = parse_corpus(read_input(path), options);
  if (corpus.size() != 1) {
    throw ValidationError("expected exactly one stroke record, found " +
                          std::to_string(corpus.size()));
  }
  return std::move(corpus.items.front());
}

Json point_json(const Point2D& p) { return Json::array({p.x, p.y}); }

Json membership_json(const DirectionMembership& dm) {
  Json j;
  j["direction"] = dm.direction.value();
  j["membership"] = dm.membership;
  return j;
}

std::string shortest(double v) { return Json(v).dump(); }

// --- gen -------------------------------------------------------------------

struct GenArgs {
  std::string classes = "builtin";
  int per_class = 20;
  std::uint64_t seed = 0;
  double split_ratio = 0.5;
  double rotation_jitter = 0.06;
  double scale_jitter = 0.05;
  double noise = 0.005;
  double speed_profile = 0.5;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const std::vector<TemplateSpec> templates =
      a.classes == "builtin" ? builtin_templates()
                             : parse_templates(read_text_file(a.classes));
  VariabilitySpec var{a.rotation_jitter, a.scale_jitter, a.noise,
                      a.speed_profile, a.seed};
  const Corpus corpus = gen_corpus(templates, var, a.per_class, a.split_ratio);
  write_text_file(a.output, write_corpus(corpus));
  out << "wrote " << corpus.size() << " strokes (" << corpus.label_set().size()
      << " classes) to " << a.output << "\n";
  return kExitOk;
}

// --- train -----------------------------------------------------------------

struct TrainArgs {
  std::string corpus;
  std::string split = "train";
  SmoothingFlags smoothing;
  bool flip_y = false;
  std::string output;
  std::string created_at;
};

Corpus select_split(const Corpus& corpus, const std::string& split) {
  if (split == "all") return corpus;
  return corpus.filter(parse_split(split));
}

int cmd_train(const TrainArgs& a, std::ostream& out) {
  const Corpus corpus = select_split(
      read_corpus_file(a.corpus, ParseOptions{a.flip_y}), a.split);
  const Model model =
      train(corpus, a.smoothing.config(),
            a.created_at.empty() ? default_timestamp() : a.created_at);
  save_model(model, a.output);
  out << "trained " << model.templates.size() << " templates from "
      << model.meta.training_strokes << " strokes ("
      << model.meta.excluded_strokes << " excluded)\n";
  for (const auto& [label, count] : model.meta.exemplars_per_label) {
    out << "  " << label << ": " << count << " exemplars, "
        << model.meta.excluded_per_label.at(label) << " excluded\n";
  }
  out << "model written to " << a.output << "\n";
  return kExitOk;
}

// --- eval ------------------------------------------------------------------

struct EvalArgs {
  std::string model;
  std::string corpus;
  std::vector<int> alphas = {1, 2, 5};
  std::string json_report;
  bool flip_y = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const Model model = load_model(a.model);
  const Corpus corpus = read_corpus_file(a.corpus, ParseOptions{a.flip_y});
  for (const std::string& label : corpus.label_set()) {
    if (!model.templates.contains(label)) {
      err << "warning: label '" << label
          << "' is not in the model; its strokes count as incorrect\n";
    }
  }
  const AccuracyTable table = evaluate(model, corpus, a.alphas);
  if (table.extraction_failures > 0) {
    err << "warning: " << table.extraction_failures
        << " strokes failed feature extraction\n";
  }
  out << render_accuracy_table(table);
  char ratio[96];
  std::snprintf(ratio, sizeof(ratio),
                "curvature points per sample (k/n): %zu/%zu = %.4f\n",
                table.curvature_points, table.sample_points,
                table.curvature_ratio());
  out << ratio;
  if (!a.json_report.empty()) {
    write_text_file(a.json_report, accuracy_table_to_json(table));
  }
  return kExitOk;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string model;
  std::string input = "-";
  int alpha = 5;
  bool flip_y = false;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  const Model model = load_model(a.model);
  const LabeledStroke record =
      read_single_record(a.input, ParseOptions{a.flip_y});
  FdfVector fdf;
  try {
    fdf = extract_fdf(record.stroke, model.meta.smoothing);
  } catch (const FeatureExtractionError& e) {
    Json j;
    j["error"] = "feature_extraction";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kExitFailure;
  }
  const RankedResult ranked = rank(model, fdf);
  for (std::size_t i = 0;
       i < ranked.size() && i < static_cast<std::size_t>(a.alpha); ++i) {
    out << ranked[i].label << " " << shortest(ranked[i].squared_distance)
        << "\n";
  }
  return kExitOk;
}

// --- inspect ---------------------------------------------------------------

struct InspectArgs {
  std::string input = "-";
  std::string model;
  SmoothingFlags smoothing;
  bool flip_y = false;
};

int cmd_inspect(const InspectArgs& a, std::ostream& out) {
  const LabeledStroke record =
      read_single_record(a.input, ParseOptions{a.flip_y});
  const SmoothingConfig config =
      a.model.empty() ? a.smoothing.config() : load_model(a.model).meta.smoothing;
  const Stroke& stroke = record.stroke;
  const FeatureTrace trace = trace_features(stroke, config);

  // The trace is anchored at the first point; shift back for overlays.
  const Point2D origin = stroke[0];
  Json smoothed = Json::array();
  for (const Point2D& p : trace.smoothed.points()) {
    smoothed.push_back(point_json({p.x + origin.x, p.y + origin.y}));
  }
  Json critical_points = Json::array();
  for (std::size_t i : trace.critical.indices) {
    critical_points.push_back(point_json(stroke[i]));
  }
  Json rows = Json::array();
  for (const FuzzyDirPair& row : trace.matrix.rows) {
    Json r;
    r["primary"] = membership_json(row.primary);
    r["secondary"] = membership_json(row.secondary);
    rows.push_back(std::move(r));
  }

  Json j;
  j["label"] = record.label ? Json(*record.label) : Json(nullptr);
  j["n"] = stroke.size();
  j["smoothing"] = {{"levels", config.levels},
                    {"mode", to_string(config.mode)},
                    {"threshold", config.threshold}};
  j["smoothed"] = std::move(smoothed);
  j["candidate_indices"] = trace.candidates.indices;
  j["critical_indices"] = trace.critical.indices;
  j["critical_points"] = std::move(critical_points);
  j["fdf_matrix"] = std::move(rows);
  j["skipped_degenerate"] = trace.matrix.skipped_degenerate;
  j["fdf"] = trace.fdf;
  out << j.dump(2) << "\n";
  return kExitOk;
}

// --- serve -----------------------------------------------------------------

HttpServer* g_server = nullptr;

extern "C" void handle_stop_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_serve(const ServeConfig& config, std::ostream& out) {
  config.validate();
  Model model = load_model(config.model_path);
  std::unique_ptr<CorpusAppender> appender;
  if (!config.corpus_out.empty()) {
    appender = std::make_unique<CorpusAppender>(config.corpus_out);
  }
  RecognitionService service(std::move(model), std::move(appender));
  HttpServer server(service, config);
  const int port = server.bind();
  out << "serving " << service.model().templates.size() << " templates on http://"
      << config.bind << ":" << port << "\n"
      << std::flush;
  g_server = &server;
  std::signal(SIGINT, handle_stop_signal);
  std::signal(SIGTERM, handle_stop_signal);
  server.run();
  g_server = nullptr;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Fuzzy directional feature stroke recognizer", "fdf"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("--classes", gen.classes,
                      "'builtin' or a template JSON file")
      ->capture_default_str();
  gen_cmd->add_option("--per-class", gen.per_class, "Strokes per class")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--split-ratio", gen.split_ratio,
                      "Fraction of each class tagged train")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--rotation-jitter", gen.rotation_jitter, "radians")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--scale-jitter", gen.scale_jitter)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--noise", gen.noise,
                      "Noise std-dev as a fraction of the bounding box")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--speed-profile", gen.speed_profile,
                      "Pen slow-down at bends, in [0, 1)")
      ->check(CLI::Range(0.0, 0.99))
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output)->required();

  TrainArgs tr;
  auto* train_cmd = app.add_subcommand("train", "Train per-class templates");
  train_cmd->add_option("--corpus", tr.corpus)->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--split", tr.split, "train | test | all")
      ->check(CLI::IsMember({"train", "test", "all"}))
      ->capture_default_str();
  add_smoothing_flags(train_cmd, tr.smoothing);
  train_cmd->add_flag("--flip-y", tr.flip_y, "Input y axis grows downward");
  train_cmd->add_option("--created-at", tr.created_at,
                        "Timestamp recorded in the model meta");
  train_cmd->add_option("-o,--output", tr.output)->required();

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Report N-best accuracy");
  eval_cmd->add_option("--model", ev.model)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--corpus", ev.corpus)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--alpha", ev.alphas, "N-best depths")
      ->check(CLI::PositiveNumber)
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--json", ev.json_report, "Also write a JSON report");
  eval_cmd->add_flag("--flip-y", ev.flip_y);

  ClassifyArgs cl;
  auto* classify_cmd = app.add_subcommand("classify", "Rank labels for a stroke");
  classify_cmd->add_option("--model", cl.model)->required()->check(CLI::ExistingFile);
  classify_cmd->add_option("--input", cl.input, "Stroke record file or '-'")
      ->capture_default_str();
  classify_cmd->add_option("--alpha", cl.alpha)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  classify_cmd->add_flag("--flip-y", cl.flip_y);

  InspectArgs in;
  auto* inspect_cmd =
      app.add_subcommand("inspect", "Dump curvature points and features as JSON");
  inspect_cmd->add_option("--input", in.input, "Stroke record file or '-'")
      ->capture_default_str();
  inspect_cmd->add_option("--model", in.model, "Use this model's smoothing");
  add_smoothing_flags(inspect_cmd, in.smoothing);
  inspect_cmd->add_flag("--flip-y", in.flip_y);

  ServeConfig sv;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the recognizer over HTTP");
  serve_cmd->add_option("--model", sv.model_path)
      ->envname("FDF_MODEL")
      ->required()
      ->check(CLI::ExistingFile);
  serve_cmd->add_option("--corpus-out", sv.corpus_out,
                        "Append labeled strokes to this JSONL file")
      ->envname("FDF_CORPUS_OUT");
  serve_cmd->add_option("--bind", sv.bind)->envname("FDF_BIND")->capture_default_str();
  serve_cmd->add_option("--port", sv.port)
      ->envname("FDF_PORT")
      ->check(CLI::Range(1, 65535))
      ->capture_default_str();
  serve_cmd->add_option("--static-dir", sv.static_dir)
      ->envname("FDF_STATIC_DIR")
      ->check(CLI::ExistingDirectory);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*train_cmd) return cmd_train(tr, out);
    if (*eval_cmd) return cmd_eval(ev, out, err);
    if (*classify_cmd) return cmd_classify(cl, out, err);
    if (*inspect_cmd) return cmd_inspect(in, out);
    if (*serve_cmd) return cmd_serve(sv, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fdf::cli
