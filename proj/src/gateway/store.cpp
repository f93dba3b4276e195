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

#include "grg/gateway/store.hpp"

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"
#include "grg/kgraph/graph_io.hpp"

namespace grg::gateway {

namespace {

std::string marker_text() { return "grg-store " + std::to_string(kStoreLayoutVersion) + "\n"; }

void require(const std::filesystem::path& p, const std::string& what, const std::string& command) {
  if (!std::filesystem::exists(p)) {
    throw Error(ErrorKind::conflict, what + " not built (missing " + p.string() + "); run `grg " + command + "` first");
  }
}

}  // namespace

void StoreLayout::ensure() const {
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create store root " + root.string() + ": " + ec.message());
  if (std::filesystem::exists(marker())) {
    check();
    return;
  }
  io::write_file(marker(), marker_text());
}

void StoreLayout::check() const {
  if (!std::filesystem::exists(marker())) {
    throw Error(ErrorKind::conflict, "no store at " + root.string() + " (missing STORE_VERSION); run `grg ingest` first");
  }
  const std::string got = io::read_file(marker());
  if (got != marker_text()) {
    throw Error(ErrorKind::conflict, "store at " + root.string() + " has layout '" +
                                         std::string(text::trim(got)) + "', expected '" +
                                         std::string(text::trim(marker_text())) + "'; rebuild the store");
  }
}

Stores load_stores(const StoreLayout& layout) {
  layout.check();
  require(layout.chunks(), "chunk store", "index");
  require(layout.index(), "vector index", "index");
  Stores s;
  for (auto& c : embed::chunks_from_jsonl(io::read_file(layout.chunks()))) {
    std::string id = c.chunk_id;
    s.chunks.emplace(std::move(id), std::move(c));
  }
  s.index = vindex::VectorIndex::load(layout.index());
  for (const auto& id : s.index.ids()) {
    if (!s.chunks.contains(id)) {
      throw Error(ErrorKind::conflict, "index and chunk store disagree on '" + id + "'; run `grg index` again");
    }
  }
  if (std::filesystem::exists(layout.graph())) s.graph = kgraph::read_graph(layout.graph());
  if (std::filesystem::exists(layout.corpus_docs())) {
    for (auto& d : corpus::clean_documents_from_jsonl(io::read_file(layout.corpus_docs()))) {
      std::string id = d.doc_id;
      s.docs.emplace(std::move(id), std::move(d));
    }
  }
  return s;
}

nlohmann::json store_status(const StoreLayout& layout) {
  auto has = [](const std::filesystem::path& p) { return std::filesystem::exists(p); };
  std::string version;
  if (has(layout.marker())) version = std::string(text::trim(io::read_file(layout.marker())));
  return {{"layout", version},
          {"corpus", has(layout.corpus_docs())},
          {"chunks", has(layout.chunks())},
          {"vectors", has(layout.vectors())},
          {"index", has(layout.index())},
          {"graph", has(layout.graph())}};
}

}  // namespace grg::gateway
