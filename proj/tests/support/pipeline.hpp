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
#include <string>

#include "grg/gateway/commands.hpp"
#include "grg/gateway/config.hpp"
#include "test_support.hpp"

namespace grg::testing {

/// Fixture config with its store redirected to `store_root`.
inline gateway::EngineConfig fixture_config(const std::string& rel, const std::filesystem::path& store_root) {
  auto config = gateway::load_config(fixture(rel));
  config.store_root = store_root;
  return config;
}

/// ingest, index and graph over `manifest`, as the CLI would run them.
inline void build_store(const gateway::EngineConfig& config, const std::filesystem::path& manifest) {
  auto adapters = gateway::make_adapters(config);
  gateway::run_ingest(config, adapters, manifest);
  gateway::run_index(config, adapters);
  gateway::run_graph(config, adapters);
}

}  // namespace grg::testing
