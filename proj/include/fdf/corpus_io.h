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

#ifndef FDF_CORPUS_IO_H_
#define FDF_CORPUS_IO_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "fdf/stroke.h"

namespace fdf {

struct ParseOptions {
  // Negate y on ingestion, for sources whose y axis grows downward.
  bool flip_y = false;
};

struct ParseReport {
  // Set when the last line had no terminating newline and did not parse,
  // the signature of an append interrupted mid-write. The line is skipped.
  bool truncated_tail = false;
};

// Parses line-delimited JSON records:
//   {"label": str|null, "writer_id": str|null, "split": "train"|"test"|null,
//    "sample_rate_hz": number|null, "points": [[x,y],...]}
// Blank lines are ignored. Throws ParseError (with the 1-based line number)
// on malformed JSON or schema violations, including records with fewer than
// two points.
Corpus parse_corpus(std::string_view text, const ParseOptions& options = {},
                    ParseReport* report = nullptr);

// Parses a single record (one JSON object, no trailing newline required).
LabeledStroke parse_record(std::string_view line,
                           const ParseOptions& options = {});

// Serializes one record per line, each terminated by '\n'. Doubles are
// written in shortest round-trip form.
std::string write_corpus(const Corpus& corpus);
std::string write_record(const LabeledStroke& record);

Corpus read_corpus_file(const std::string& path,
                        const ParseOptions& options = {},
                        ParseReport* report = nullptr);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace fdf

#endif  // FDF_CORPUS_IO_H_
