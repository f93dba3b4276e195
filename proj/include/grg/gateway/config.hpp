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
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "grg/adapters/chat_client.hpp"
#include "grg/corpus/judge.hpp"
#include "grg/corpus/pipeline.hpp"
#include "grg/embed/chunk.hpp"
#include "grg/engine/engine.hpp"
#include "grg/kgraph/extractor.hpp"
#include "grg/vindex/index.hpp"

namespace grg::gateway {

inline constexpr const char* kStoreRootEnv = "GRG_STORE_ROOT";

/// One pluggable backend. kind "stub" uses the offline implementation,
/// "http" a remote service, "none" disables an optional adapter.
struct AdapterConfig {
  std::string kind = "stub";
  std::filesystem::path fixture;  // stub data file, when the stub needs one
  adapters::ChatSettings chat;    // http: endpoint and model
};

struct EmbedderConfig {
  std::string kind = "hashed-trigram";  // or "http"
  std::size_t dim = 256;
  adapters::HttpEndpoint endpoint;
  std::string model;
};

/// Every tunable of the pipeline in one document. Relative paths resolve
/// against the directory of the config file.
struct EngineConfig {
  std::filesystem::path store_root = "grg-store";

  corpus::PipelineConfig pipeline;
  corpus::StubJudgeConfig judge_stub;
  embed::ChunkPolicy chunking;
  EmbedderConfig embedder;
  vindex::IndexMode index_mode = vindex::IndexMode::exact;
  vindex::SmallWorldParams small_world;
  kgraph::PatternExtractorConfig extractor_stub{kgraph::PatternExtractor::default_rules(), {}, "entity", 4};
  int extract_attempts = 3;
  engine::EngineOptions engine;
  engine::Mode default_mode = engine::Mode::grg;
  std::string forge_instruction = "This is a Question and Answer task related to 3GPP.";
  double forge_min_score = 0.5;

  AdapterConfig generator;
  AdapterConfig judge;
  AdapterConfig extractor;
  AdapterConfig qa;
  AdapterConfig record_judge;
  AdapterConfig captioner{"none", {}, {}};
  AdapterConfig ocr{"none", {}, {}};
};

/// Defaults plus every key present in `j`. Unknown top-level keys and out
/// of range values are Error(config); referenced files must exist.
EngineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);

/// Reads the file, then applies the GRG_STORE_ROOT override.
EngineConfig load_config(const std::filesystem::path& path);

/// Defaults with only the environment override applied.
EngineConfig default_config();

}  // namespace grg::gateway
