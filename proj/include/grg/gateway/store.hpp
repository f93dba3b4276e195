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
#include <optional>
#include <string>

#include <json.hpp>

#include "grg/corpus/types.hpp"
#include "grg/embed/chunk.hpp"
#include "grg/kgraph/graph.hpp"
#include "grg/vindex/index.hpp"

namespace grg::gateway {

inline constexpr int kStoreLayoutVersion = 1;

/// Fixed paths under store_root. The marker file holds
/// "grg-store <version>\n".
struct StoreLayout {
  std::filesystem::path root;

  std::filesystem::path marker() const { return root / "STORE_VERSION"; }
  std::filesystem::path corpus_docs() const { return root / "corpus" / "docs.jsonl"; }
  std::filesystem::path corpus_report() const { return root / "corpus" / "report.json"; }
  std::filesystem::path chunks() const { return root / "chunks" / "chunks.jsonl"; }
  std::filesystem::path vectors() const { return root / "vectors" / "vectors.grgv"; }
  std::filesystem::path index() const { return root / "index" / "index.grgi"; }
  std::filesystem::path graph() const { return root / "graph" / "graph.json"; }
  std::filesystem::path graph_statements() const { return root / "graph" / "statements.cypher"; }
  std::filesystem::path graph_report() const { return root / "graph" / "report.json"; }
  std::filesystem::path benchmarks() const { return root / "benchmarks"; }
  std::filesystem::path reports() const { return root / "reports"; }
  std::filesystem::path forge() const { return root / "forge"; }

  /// Creates the root and marker if absent. Throws Error(conflict) when an
  /// existing marker names another layout version.
  void ensure() const;
  /// Error(conflict) with a hint when the marker is missing or incompatible.
  void check() const;
};

/// Immutable snapshot of the built stores for serving queries.
struct Stores {
  std::map<std::string, embed::Chunk> chunks;
  std::map<std::string, corpus::CleanDocument> docs;  // may be empty
  vindex::VectorIndex index;
  std::optional<kgraph::KnowledgeGraph> graph;
};

/// Loads chunks, index and (when present) graph and corpus documents.
/// Throws Error(conflict) naming the missing store and the command that
/// builds it.
Stores load_stores(const StoreLayout& layout);

/// Which stores exist on disk.
nlohmann::json store_status(const StoreLayout& layout);

}  // namespace grg::gateway
