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

#include "fdf/service.h"

#include <filesystem>
#include <utility>

#include "fdf/corpus_io.h"
#include "fdf/errors.h"
#include "fdf/features.h"
#include "fdf/model_io.h"
#include "httplib.h"
#include "json.hpp"

namespace fdf {
namespace {

using Json = nlohmann::ordered_json;

HttpReply error_reply(int status, const std::string& message) {
  Json body;
  body["error"] = message;
  return {status, body.dump()};
}

}  // namespace

void ServeConfig::validate() const {
  if (port < 0 || port > 65535) {
    throw ValidationError("port must be in [1, 65535]");
  }
  if (model_path.empty()) throw ValidationError("a model path is required");
}

CorpusAppender::CorpusAppender(const std::string& path) {
  bool needs_newline = false;
  if (std::filesystem::exists(path)) {
    const std::string text = read_text_file(path);
    if (!text.empty() && text.back() != '\n') {
      const std::size_t cut = text.find_last_of('\n') + 1;  // npos + 1 == 0
      try {
        parse_record(std::string_view(text).substr(cut));
        needs_newline = true;
      } catch (const Error&) {
        std::filesystem::resize_file(path, cut);
      }
    }
  }
  out_.open(path, std::ios::binary | std::ios::app);
  if (!out_) throw Error("cannot open '" + path + "' for appending");
  if (needs_newline) {
    out_.put('\n');
    out_.flush();
  }
}

void CorpusAppender::append(const LabeledStroke& record) {
  const std::string line = write_record(record) + "\n";
  std::lock_guard<std::mutex> lock(mu_);
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) throw Error("failed appending to corpus file");
  ++appended_;
}

std::size_t CorpusAppender::appended() const {
  std::lock_guard<std::mutex> lock(mu_);
  return appended_;
}

RecognitionService::RecognitionService(Model model,
                                       std::unique_ptr<CorpusAppender> appender)
    : model_(std::move(model)), appender_(std::move(appender)) {}

HttpReply RecognitionService::classify(std::string_view body) const {
  Json request = Json::parse(body.begin(), body.end(), nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return error_reply(400, "request body must be a JSON object");
  }
  int alpha = 5;
  if (auto it = request.find("alpha"); it != request.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<int>() < 1) {
      return error_reply(400, "'alpha' must be a positive integer");
    }
    alpha = it->get<int>();
  }

  std::optional<LabeledStroke> record;
  try {
    record = parse_record(body);
  } catch (const Error& e) {
    return error_reply(400, e.what());
  }

  std::optional<FeatureTrace> trace;
  try {
    trace = trace_features(record->stroke, model_.meta.smoothing);
  } catch (const FeatureExtractionError& e) {
    return error_reply(422, e.what());
  }
  const RankedResult ranked = rank(model_, trace->fdf);

  Json nbest = Json::array();
  for (std::size_t i = 0;
       i < ranked.size() && i < static_cast<std::size_t>(alpha); ++i) {
    Json entry;
    entry["label"] = ranked[i].label;
    entry["distance"] = ranked[i].squared_distance;
    nbest.push_back(std::move(entry));
  }
  Json reply;
  reply["nbest"] = std::move(nbest);
  reply["fdf"] = trace->fdf;
  reply["critical_indices"] = trace->critical.indices;
  return {200, reply.dump()};
}

HttpReply RecognitionService::model_info() const {
  Json reply;
  reply["labels"] = model_.labels();
  reply["meta"] = Json::parse(model_to_json(model_))["meta"];
  return {200, reply.dump()};
}

HttpReply RecognitionService::store_stroke(std::string_view body) {
  if (!appender_) return error_reply(503, "no corpus output file configured");
  std::optional<LabeledStroke> record;
  try {
    record = parse_record(body);
  } catch (const Error& e) {
    return error_reply(400, e.what());
  }
  if (!record->label) return error_reply(400, "'label' is required");
  try {
    appender_->append(*record);
  } catch (const Error& e) {
    return error_reply(500, e.what());
  }
  Json reply;
  reply["stored"] = true;
  return {200, reply.dump()};
}

struct HttpServer::Impl {
  Impl(RecognitionService& s, ServeConfig c)
      : service(s), config(std::move(c)) {}

  RecognitionService& service;
  ServeConfig config;
  httplib::Server server;
};

HttpServer::HttpServer(RecognitionService& service, ServeConfig config)
    : impl_(std::make_unique<Impl>(service, std::move(config))) {
  auto& server = impl_->server;
  auto& svc = impl_->service;
  auto send = [](httplib::Response& res, const HttpReply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server.Post("/api/classify",
              [&svc, send](const httplib::Request& req, httplib::Response& res) {
                send(res, svc.classify(req.body));
              });
  server.Get("/api/model",
             [&svc, send](const httplib::Request&, httplib::Response& res) {
               send(res, svc.model_info());
             });
  server.Post("/api/strokes",
              [&svc, send](const httplib::Request& req, httplib::Response& res) {
                send(res, svc.store_stroke(req.body));
              });
  if (!impl_->config.static_dir.empty()) {
    if (!std::filesystem::is_directory(impl_->config.static_dir) ||
        !server.set_mount_point("/", impl_->config.static_dir)) {
      throw Error("static directory '" + impl_->config.static_dir +
                  "' is not readable");
    }
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& server = impl_->server;
  const std::string& host = impl_->config.bind;
  int port = impl_->config.port;
  if (port == 0) {
    port = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error("cannot bind " + host + ":" +
                std::to_string(impl_->config.port));
  }
  return port;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace fdf
