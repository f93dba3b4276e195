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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grg/corpus/judge.hpp"
#include "grg/embed/embedding.hpp"
#include "grg/engine/engine.hpp"
#include "grg/evalbench/runner.hpp"
#include "grg/forge/qa.hpp"
#include "grg/forge/quality.hpp"
#include "grg/gateway/config.hpp"
#include "grg/gateway/store.hpp"
#include "grg/kgraph/extractor.hpp"
#include "grg/mmio/vision.hpp"

namespace grg::gateway {

/// Backends selected by the config. Optional ones may be null.
struct Adapters {
  std::unique_ptr<embed::Embedder> embedder;
  std::unique_ptr<kgraph::ExtractorClient> extractor;
  std::unique_ptr<engine::GeneratorClient> generator;
  std::unique_ptr<corpus::JudgeClient> judge;
  std::unique_ptr<forge::QaGeneratorClient> qa;
  std::unique_ptr<forge::RecordJudge> record_judge;
  std::unique_ptr<mmio::CaptionerClient> captioner;
  std::unique_ptr<mmio::OcrClient> ocr;
};

Adapters make_adapters(const EngineConfig& config);

/// Machine-readable result plus a one-paragraph human summary.
struct CommandResult {
  nlohmann::json result;
  std::string summary;
};

CommandResult run_ingest(const EngineConfig& config, Adapters& adapters, const std::filesystem::path& manifest);
CommandResult run_index(const EngineConfig& config, Adapters& adapters);
CommandResult run_graph(const EngineConfig& config, Adapters& adapters);
CommandResult run_forge(const EngineConfig& config, Adapters& adapters);

struct QueryRequest {
  std::string text;
  std::vector<std::string> image_ids;  // fixture ids; format "png"
  std::optional<engine::Mode> mode;
};

/// {"text": str, "image_ids"?: [str], "mode"?: "base"|"rag"|"grg"}.
/// Throws Error(format) on anything else.
QueryRequest query_request_from_json(const nlohmann::json& j);

engine::Resources resources(const Stores& stores, Adapters& adapters);

/// The one query path shared by the CLI and the HTTP service:
///   {"answer", "mode", "generator",
///    "context": {"facts": [str], "chunks": [{chunk_id, doc_id, span, rank,
///                score, text}], "total_chars", "budget_chars", "truncation"},
///    "diagnostics": {"fused_query", "query_entities", "notices"}}
nlohmann::json run_query(const EngineConfig& config, const Stores& stores, Adapters& adapters,
                         const QueryRequest& request);

/// Runs the benchmark and writes reports/eval-<mode>.json and .txt.
CommandResult run_eval(const EngineConfig& config, const Stores& stores, Adapters& adapters,
                       const std::vector<evalbench::McqQuestion>& questions, engine::Mode mode);

/// Exit status per error category: config 2, contract 3, io 4, format 5,
/// not_found 6, conflict 7, adapter 8, anything else 1.
int exit_code(ErrorKind kind) noexcept;
int http_status(ErrorKind kind) noexcept;

/// {"error": {"code": <category>, "message": ...}}
nlohmann::json error_envelope(std::string_view code, std::string_view message);

/// CLI entry point: JSON result line on `out`, summary and errors on `err`.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace grg::gateway
