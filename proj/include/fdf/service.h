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

#ifndef FDF_SERVICE_H_
#define FDF_SERVICE_H_

#include <cstddef>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "fdf/classifier.h"
#include "fdf/stroke.h"

namespace fdf {

struct ServeConfig {
  std::string bind = "127.0.0.1";
  // 0 picks an ephemeral port (tests only; the CLI enforces [1, 65535]).
  int port = 8080;
  std::string model_path;
  std::string corpus_out;
  std::string static_dir;

  void validate() const;
};

// Appends corpus records one line at a time. Each line is written with a
// single call and flushed before append() returns. An unterminated last line
// is dropped when it does not parse, otherwise terminated.
class CorpusAppender {
 public:
  explicit CorpusAppender(const std::string& path);

  void append(const LabeledStroke& record);
  std::size_t appended() const;

 private:
  mutable std::mutex mu_;
  std::ofstream out_;
  std::size_t appended_ = 0;
};

struct HttpReply {
  int status = 200;
  std::string body;  // JSON
};

// Request handlers behind the /api endpoints, independent of the transport.
// The model is never modified after construction.
class RecognitionService {
 public:
  RecognitionService(Model model, std::unique_ptr<CorpusAppender> appender);

  // POST /api/classify
  //   {"points": [[x,y],...], "alpha": int}
  //   -> {"nbest": [{"label", "distance"}], "fdf": [8], "critical_indices": []}
  HttpReply classify(std::string_view body) const;
  // GET /api/model -> {"labels": [...], "meta": {...}}
  HttpReply model_info() const;
  // POST /api/strokes {"label": str, "points": [...]} -> {"stored": true}
  HttpReply store_stroke(std::string_view body);

  const Model& model() const { return model_; }

 private:
  const Model model_;
  std::unique_ptr<CorpusAppender> appender_;
};

// Thin cpp-httplib wrapper. bind() reserves the port; run() blocks until
// stop() is called from another thread.
class HttpServer {
 public:
  HttpServer(RecognitionService& service, ServeConfig config);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port. Throws Error when the port cannot be bound.
  int bind();
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fdf

#endif  // FDF_SERVICE_H_
