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

#include "fdf/report.h"

#include <algorithm>
#include <cstdio>
#include <vector>

#include "fdf/errors.h"
#include "json.hpp"

namespace fdf {
namespace {

using Json = nlohmann::ordered_json;

std::string row_title(const std::string& split) {
  if (split == "train") return "Train Data";
  if (split == "test") return "Test Data";
  if (split == "all") return "All Data";
  return split;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string format_cell(const AccuracyCell& cell) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.1f%% (%zu/%zu)", cell.percentage(),
                cell.correct, cell.total);
  return buffer;
}

std::string render_accuracy_table(const AccuracyTable& table) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"Data"};
  for (int alpha : table.alphas) header.push_back("alpha=" + std::to_string(alpha));
  grid.push_back(std::move(header));
  for (const AccuracyRow& row : table.rows) {
    std::vector<std::string> line = {row_title(row.split)};
    for (const AccuracyCell& cell : row.cells) line.push_back(format_cell(cell));
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(grid.front().size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      widths[c] = std::max(widths[c], line[c].size());
    }
  }

  std::string out;
  auto emit = [&](const std::vector<std::string>& line) {
    out += "|";
    for (std::size_t c = 0; c < line.size(); ++c) {
      out += " " + pad(line[c], widths[c]) + " |";
    }
    out += "\n";
  };
  emit(grid.front());
  out += "|";
  for (std::size_t w : widths) out += std::string(w + 2, '-') + "|";
  out += "\n";
  for (std::size_t r = 1; r < grid.size(); ++r) emit(grid[r]);
  return out;
}

std::string accuracy_table_to_json(const AccuracyTable& table) {
  Json rows = Json::array();
  for (const AccuracyRow& row : table.rows) {
    Json cells = Json::array();
    for (std::size_t a = 0; a < row.cells.size(); ++a) {
      const AccuracyCell& cell = row.cells[a];
      Json c;
      c["alpha"] = table.alphas[a];
      c["correct"] = cell.correct;
      c["total"] = cell.total;
      c["percentage"] = cell.percentage();
      cells.push_back(std::move(c));
    }
    Json r;
    r["split"] = row.split;
    r["cells"] = std::move(cells);
    rows.push_back(std::move(r));
  }
  Json out;
  out["alphas"] = table.alphas;
  out["rows"] = std::move(rows);
  out["unknown_label_strokes"] = table.unknown_label_strokes;
  out["extraction_failures"] = table.extraction_failures;
  out["curvature_points"] = table.curvature_points;
  out["sample_points"] = table.sample_points;
  return out.dump(2) + "\n";
}

AccuracyTable accuracy_table_from_json(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw ParseError("report is not valid JSON", 0);
  try {
    AccuracyTable table;
    table.alphas = j.at("alphas").get<std::vector<int>>();
    for (const Json& r : j.at("rows")) {
      AccuracyRow row;
      row.split = r.at("split").get<std::string>();
      const Json& cells = r.at("cells");
      if (cells.size() != table.alphas.size()) {
        throw ParseError("row '" + row.split + "' has the wrong cell count", 0);
      }
      for (const Json& c : cells) {
        AccuracyCell cell{c.at("correct").get<std::size_t>(),
                          c.at("total").get<std::size_t>()};
        if (cell.correct > cell.total) {
          throw ParseError("correct count exceeds total", 0);
        }
        row.cells.push_back(cell);
      }
      table.rows.push_back(std::move(row));
    }
    table.unknown_label_strokes = j.value("unknown_label_strokes", std::size_t{0});
    table.extraction_failures = j.value("extraction_failures", std::size_t{0});
    table.curvature_points = j.value("curvature_points", std::size_t{0});
    table.sample_points = j.value("sample_points", std::size_t{0});
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad report: ") + e.what(), 0);
  }
}

}  // namespace fdf
