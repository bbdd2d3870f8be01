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

#include "fdf/corpus_io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "fdf/errors.h"
#include "json.hpp"

namespace fdf {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::string> optional_string(const Json& record,
                                           const char* key) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw ValidationError(std::string("'") + key + "' must be a string or null");
  }
  return it->get<std::string>();
}

LabeledStroke record_from_json(const Json& record, const ParseOptions& options) {
  if (!record.is_object()) throw ValidationError("record is not a JSON object");

  auto points_it = record.find("points");
  if (points_it == record.end() || !points_it->is_array()) {
    throw ValidationError("'points' must be an array of [x, y] pairs");
  }
  std::vector<Point2D> points;
  points.reserve(points_it->size());
  for (const Json& pair : *points_it) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw ValidationError("each point must be a pair of numbers");
    }
    double y = pair[1].get<double>();
    points.push_back({pair[0].get<double>(), options.flip_y ? -y : y});
  }

  std::optional<double> rate;
  if (auto it = record.find("sample_rate_hz");
      it != record.end() && !it->is_null()) {
    if (!it->is_number()) throw ValidationError("'sample_rate_hz' must be a number");
    rate = it->get<double>();
  }

  LabeledStroke out{Stroke(std::move(points), rate), optional_string(record, "label"),
                    optional_string(record, "writer_id"), std::nullopt};
  if (out.label && out.label->empty()) {
    throw ValidationError("'label' must be non-empty when present");
  }
  if (auto split = optional_string(record, "split")) {
    out.split = parse_split(*split);
  }
  return out;
}

Json optional_json(const std::optional<std::string>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

LabeledStroke parse_record(std::string_view line, const ParseOptions& options) {
  Json record = Json::parse(line.begin(), line.end(), nullptr,
                            /*allow_exceptions=*/false);
  if (record.is_discarded()) throw ValidationError("malformed JSON");
  return record_from_json(record, options);
}

Corpus parse_corpus(std::string_view text, const ParseOptions& options,
                    ParseReport* report) {
  Corpus corpus;
  if (report) *report = ParseReport{};
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    const bool terminated = end != std::string_view::npos;
    if (!terminated) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    try {
      corpus.items.push_back(parse_record(line, options));
    } catch (const ValidationError& e) {
      if (!terminated) {
        Json probe = Json::parse(line.begin(), line.end(), nullptr, false);
        if (probe.is_discarded()) {
          if (report) report->truncated_tail = true;
          break;
        }
      }
      throw ParseError(e.what(), line_number);
    }
  }
  return corpus;
}

std::string write_record(const LabeledStroke& record) {
  Json points = Json::array();
  for (const Point2D& p : record.stroke.points()) points.push_back({p.x, p.y});
  Json out;
  out["label"] = optional_json(record.label);
  out["writer_id"] = optional_json(record.writer_id);
  out["split"] = record.split ? Json(to_string(*record.split)) : Json(nullptr);
  out["sample_rate_hz"] = record.stroke.sample_rate_hz()
                              ? Json(*record.stroke.sample_rate_hz())
                              : Json(nullptr);
  out["points"] = std::move(points);
  return out.dump();
}

std::string write_corpus(const Corpus& corpus) {
  std::string text;
  for (const LabeledStroke& item : corpus.items) {
    text += write_record(item);
    text += '\n';
  }
  return text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

Corpus read_corpus_file(const std::string& path, const ParseOptions& options,
                        ParseReport* report) {
  return parse_corpus(read_text_file(path), options, report);
}

}  // namespace fdf
