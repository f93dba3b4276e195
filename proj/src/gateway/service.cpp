// Copyright 2026 The GRG Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "grg/gateway/service.hpp"

#include <httplib.h>

#include <functional>

#include "grg/common/error.hpp"
#include "grg/engine/context.hpp"
#include "grg/evalbench/benchmark.hpp"
#include "grg/kgraph/graph_io.hpp"

namespace grg::gateway {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, ErrorKind kind, std::string_view message) {
  send(res, http_status(kind), error_envelope(to_string(kind), message));
}

/// Every handler runs through here; no exception escapes to httplib.
void guarded(httplib::Response& res, const std::function<json()>& fn) {
  try {
    send(res, 200, fn());
  } catch (const Error& e) {
    send_error(res, e.kind(), e.what());
  } catch (const json::exception& e) {
    send_error(res, ErrorKind::format, std::string("malformed JSON: ") + e.what());
  } catch (const std::exception& e) {
    send(res, 500, error_envelope("internal", e.what()));
  }
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) throw Error(ErrorKind::format, "request body is empty");
  return json::parse(req.body);
}

int parse_depth(const httplib::Request& req) {
  if (!req.has_param("depth")) return 1;
  const std::string raw = req.get_param_value("depth");
  if (raw == "1") return 1;
  if (raw == "2") return 2;
  throw Error(ErrorKind::contract, "depth must be 1 or 2, got '" + raw + "'");
}

}  // namespace

Service::Service(EngineConfig config) : config_(std::move(config)), adapters_(make_adapters(config_)) {
  try {
    reload();
  } catch (const Error&) {
    // health reports load_error_
  }
}

void Service::reload() {
  try {
    auto fresh = std::make_shared<const Stores>(load_stores(StoreLayout{config_.store_root}));
    std::lock_guard lock(store_mu_);
    stores_ = std::move(fresh);
    load_error_.clear();
  } catch (const Error& e) {
    std::lock_guard lock(store_mu_);
    load_error_ = e.what();
    throw;
  }
}

std::shared_ptr<const Stores> Service::snapshot() const {
  std::lock_guard lock(store_mu_);
  return stores_;
}

std::shared_ptr<const Stores> Service::require_stores() const {
  std::lock_guard lock(store_mu_);
  if (!stores_) {
    throw Error(ErrorKind::conflict, load_error_.empty() ? "store not loaded" : load_error_);
  }
  return stores_;
}

json Service::health() const {
  const auto stores = require_stores();
  return {{"status", "ok"},
          {"store", store_status(StoreLayout{config_.store_root})},
          {"chunks", stores->chunks.size()},
          {"documents", stores->docs.size()},
          {"entities", stores->graph ? stores->graph->entities().size() : 0},
          {"relations", stores->graph ? stores->graph->relations().size() : 0},
          {"default_mode", engine::to_string(config_.default_mode)}};
}

void Service::install_routes(httplib::Server& server) {
  server.Get("/v1/health", [this](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] { return health(); });
  });

  server.Post("/v1/query", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const auto request = query_request_from_json(parse_body(req));
      const auto stores = require_stores();
      std::lock_guard lock(adapter_mu_);
      return run_query(config_, *stores, adapters_, request);
    });
  });

  server.Get(R"(/v1/graph/entity/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = req.matches[1];
      const int depth = parse_depth(req);
      const auto stores = require_stores();
      if (!stores->graph) throw Error(ErrorKind::conflict, "graph store not built; run `grg graph` first");
      const auto* entity = stores->graph->find(id);
      if (!entity) throw Error(ErrorKind::not_found, "unknown entity '" + id + "'");
      auto hood = kgraph::neighborhood(*stores->graph, {id}, depth);
      const auto global = engine::make_global_context(hood.subgraph);
      json sub = kgraph::graph_to_json(hood.subgraph);
      return json{{"entity", *entity},
                  {"depth", depth},
                  {"entities", sub["entities"]},
                  {"relations", sub["relations"]},
                  {"facts", global.facts}};
    });
  });

  server.Get(R"(/v1/chunks/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const std::string id = req.matches[1];
      const auto stores = require_stores();
      auto it = stores->chunks.find(id);
      if (it == stores->chunks.end()) throw Error(ErrorKind::not_found, "unknown chunk '" + id + "'");
      const auto& c = it->second;
      json out = {{"chunk_id", c.chunk_id},
                  {"doc_id", c.doc_id},
                  {"span", {c.span.start, c.span.end}},
                  {"text", c.text}};
      if (auto d = stores->docs.find(c.doc_id); d != stores->docs.end()) out["title"] = d->second.title;
      return out;
    });
  });

  server.Post("/v1/eval", [this](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      const json body = parse_body(req);
      if (!body.is_object()) throw Error(ErrorKind::format, "eval body must be a JSON object");
      for (const auto& [key, value] : body.items()) {
        if (key != "benchmark" && key != "questions" && key != "mode") {
          throw Error(ErrorKind::format, "unexpected field '" + key + "' in eval request");
        }
      }
      evalbench::Benchmark bench;
      if (body.contains("benchmark") == body.contains("questions")) {
        throw Error(ErrorKind::format, "eval needs exactly one of 'benchmark' or 'questions'");
      }
      if (body.contains("benchmark")) {
        bench = evalbench::load_benchmark(body.at("benchmark").get<std::string>());
      } else {
        const auto& qs = body.at("questions");
        if (!qs.is_array()) throw Error(ErrorKind::format, "'questions' must be an array");
        std::string jsonl;
        for (const auto& q : qs) jsonl += q.dump() + "\n";
        bench = evalbench::parse_benchmark(jsonl);
      }
      const auto mode =
          body.contains("mode") ? engine::parse_mode(body.at("mode").get<std::string>()) : config_.default_mode;
      const auto stores = require_stores();
      std::lock_guard lock(adapter_mu_);
      auto result = run_eval(config_, *stores, adapters_, bench.questions, mode);
      json rejected = json::array();
      for (const auto& r : bench.rejected) rejected.push_back({{"line", r.line}, {"reason", r.reason}});
      result.result["rejected_rows"] = rejected;
      return result.result;
    });
  });

  server.Post("/v1/admin/reload", [this](const httplib::Request&, httplib::Response& res) {
    guarded(res, [&] {
      reload();
      return health();
    });
  });

  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      res.set_content(error_envelope("not_found", "no route for " + req.method + " " + req.path).dump(), kJson);
    } else {
      res.set_content(error_envelope("http", "HTTP status " + std::to_string(res.status)).dump(), kJson);
    }
  });
}

void serve(const EngineConfig& config, const std::string& host, int port) {
  Service service(config);
  httplib::Server server;
  service.install_routes(server);
  if (!server.bind_to_port(host, port)) {
    throw Error(ErrorKind::io, "cannot bind " + host + ":" + std::to_string(port));
  }
  server.listen_after_bind();
}

}  // namespace grg::gateway
