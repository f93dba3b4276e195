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

#include <CLI11.hpp>

#include <ostream>

#include "grg/common/error.hpp"
#include "grg/evalbench/benchmark.hpp"
#include "grg/gateway/commands.hpp"
#include "grg/gateway/service.hpp"

namespace grg::gateway {

using nlohmann::json;

namespace {

void fail(std::ostream& out, std::ostream& err, std::string_view code, std::string_view message) {
  out << error_envelope(code, message).dump() << '\n';
  err << "error (" << code << "): " << message << '\n';
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph and retrieval augmented generation engine for telecom corpora", "grg"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "Engine config file (JSON); " + std::string(kStoreRootEnv) +
                                              " overrides store_root")
      ->check(CLI::ExistingFile);

  auto* ingest = app.add_subcommand("ingest", "Load, clean, filter and deduplicate a corpus manifest");
  std::string manifest;
  ingest->add_option("--manifest", manifest, "Corpus manifest (JSONL)")->required()->check(CLI::ExistingFile);

  app.add_subcommand("index", "Chunk and embed the ingested corpus and build the vector index");
  app.add_subcommand("graph", "Extract triples from the chunk store and build the knowledge graph");
  app.add_subcommand("forge", "Generate, judge and export instruction records from the chunk store");

  auto* query = app.add_subcommand("query", "Answer one question against the built stores");
  std::string text;
  std::string query_mode;
  std::vector<std::string> images;
  query->add_option("--text", text, "Question text")->required();
  query->add_option("--mode", query_mode, "base, rag or grg (default from config)")
      ->check(CLI::IsMember({"base", "rag", "grg"}));
  query->add_option("--image", images, "Image fixture id; repeatable");

  auto* eval = app.add_subcommand("eval", "Run a multiple-choice benchmark and write a report");
  std::string benchmark;
  std::string eval_mode;
  eval->add_option("--benchmark", benchmark, "Benchmark file (JSONL)")->required()->check(CLI::ExistingFile);
  eval->add_option("--mode", eval_mode, "base, rag or grg (default from config)")
      ->check(CLI::IsMember({"base", "rag", "grg"}));

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API over the built stores");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve_cmd->add_option("--host", host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--port", port, "Port")->capture_default_str()->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    fail(out, err, to_string(ErrorKind::config), e.what());
    err << "run `grg --help` for usage\n";
    return exit_code(ErrorKind::config);
  }

  try {
    const EngineConfig config = config_path.empty() ? default_config() : load_config(config_path);
    const StoreLayout layout{config.store_root};

    if (*serve_cmd) {
      err << "serving " << layout.root.string() << " on http://" << host << ':' << port << '\n';
      serve(config, host, port);
      return 0;
    }

    Adapters adapters = make_adapters(config);
    CommandResult result;
    if (*ingest) {
      result = run_ingest(config, adapters, manifest);
    } else if (app.got_subcommand("index")) {
      result = run_index(config, adapters);
    } else if (app.got_subcommand("graph")) {
      result = run_graph(config, adapters);
    } else if (app.got_subcommand("forge")) {
      result = run_forge(config, adapters);
    } else if (*query) {
      const Stores stores = load_stores(layout);
      QueryRequest request{text, images, std::nullopt};
      if (!query_mode.empty()) request.mode = engine::parse_mode(query_mode);
      result.result = run_query(config, stores, adapters, request);
      result.summary = "query (" + result.result["mode"].get<std::string>() + "): " +
                       std::to_string(result.result["context"]["chunks"].size()) + " chunks, " +
                       std::to_string(result.result["context"]["facts"].size()) + " facts\n" +
                       result.result["answer"].get<std::string>();
    } else if (*eval) {
      const Stores stores = load_stores(layout);
      const auto bench = evalbench::load_benchmark(benchmark);
      for (const auto& r : bench.rejected) err << "benchmark line " << r.line << " rejected: " << r.reason << '\n';
      const auto mode = eval_mode.empty() ? config.default_mode : engine::parse_mode(eval_mode);
      result = run_eval(config, stores, adapters, bench.questions, mode);
    }
    out << result.result.dump() << '\n';
    err << result.summary << (result.summary.ends_with('\n') ? "" : "\n");
    return 0;
  } catch (const Error& e) {
    fail(out, err, to_string(e.kind()), e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    fail(out, err, "internal", e.what());
    return 1;
  }
}

}  // namespace grg::gateway
