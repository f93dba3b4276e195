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

#include "grg/gateway/commands.hpp"

#include <atomic>
#include <map>

#include "grg/adapters/llm_adapters.hpp"
#include "grg/adapters/vision_http.hpp"
#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"
#include "grg/corpus/manifest.hpp"
#include "grg/corpus/pipeline.hpp"
#include "grg/embed/vector_file.hpp"
#include "grg/forge/bundle.hpp"
#include "grg/forge/records.hpp"
#include "grg/kgraph/align.hpp"
#include "grg/kgraph/graph_io.hpp"

namespace grg::gateway {

using nlohmann::json;

Adapters make_adapters(const EngineConfig& c) {
  Adapters a;
  if (c.embedder.kind == "http") {
    a.embedder = std::make_unique<adapters::HttpEmbedder>(c.embedder.endpoint, c.embedder.model, c.embedder.dim);
  } else {
    a.embedder = std::make_unique<embed::HashedTrigramEmbedder>(c.embedder.dim);
  }

  if (c.extractor.kind == "http") {
    a.extractor = std::make_unique<adapters::LlmExtractor>(c.extractor.chat);
  } else {
    a.extractor = std::make_unique<kgraph::PatternExtractor>(c.extractor_stub);
  }

  if (c.generator.kind == "http") {
    a.generator = std::make_unique<adapters::LlmGenerator>(c.generator.chat);
  } else if (!c.generator.fixture.empty()) {
    a.generator = std::make_unique<engine::NeedleMockGenerator>(engine::NeedleMockGenerator::load(c.generator.fixture));
  } else {
    a.generator = std::make_unique<engine::NeedleMockGenerator>(std::vector<engine::NeedleRule>{});
  }

  if (c.judge.kind == "http") {
    a.judge = std::make_unique<adapters::LlmJudge>(c.judge.chat);
  } else if (c.judge.kind == "stub") {
    a.judge = std::make_unique<corpus::StubJudge>(c.judge_stub);
  }

  if (c.qa.kind == "http") {
    a.qa = std::make_unique<adapters::LlmQaGenerator>(c.qa.chat);
  } else {
    a.qa = std::make_unique<forge::StubQaGenerator>();
  }

  if (c.record_judge.kind == "http") {
    a.record_judge = std::make_unique<adapters::LlmRecordJudge>(c.record_judge.chat);
  } else {
    a.record_judge = std::make_unique<forge::StubRecordJudge>();
  }

  if (c.captioner.kind == "http") {
    a.captioner = std::make_unique<adapters::HttpCaptioner>(c.captioner.chat.endpoint);
  } else if (c.captioner.kind == "stub") {
    a.captioner = std::make_unique<mmio::FixtureVision>(mmio::FixtureVision::load(c.captioner.fixture));
  }
  if (c.ocr.kind == "http") {
    a.ocr = std::make_unique<adapters::HttpOcr>(c.ocr.chat.endpoint);
  } else if (c.ocr.kind == "stub") {
    a.ocr = std::make_unique<mmio::FixtureVision>(mmio::FixtureVision::load(c.ocr.fixture));
  }
  return a;
}

namespace {

std::vector<embed::Chunk> stored_chunks(const StoreLayout& layout) {
  layout.check();
  if (!std::filesystem::exists(layout.chunks())) {
    throw Error(ErrorKind::conflict, "chunk store not built (missing " + layout.chunks().string() +
                                         "); run `grg index` first");
  }
  return embed::chunks_from_jsonl(io::read_file(layout.chunks()));
}

std::string stage_counts(const std::map<std::string, std::size_t>& by_stage) {
  std::vector<std::string> parts;
  for (const auto& [stage, n] : by_stage) parts.push_back(stage + " " + std::to_string(n));
  return parts.empty() ? "none" : text::join(parts, ", ");
}

}  // namespace

CommandResult run_ingest(const EngineConfig& config, Adapters& adapters, const std::filesystem::path& manifest_path) {
  const StoreLayout layout{config.store_root};
  const auto manifest = corpus::load_manifest(manifest_path);
  auto result = corpus::preprocess(manifest, config.pipeline, adapters.judge.get());
  layout.ensure();
  io::write_file(layout.corpus_docs(), corpus::to_jsonl(result.docs));
  io::write_file(layout.corpus_report(), json(result.report).dump(2) + "\n");

  const auto& r = result.report;
  json out = {{"command", "ingest"},
              {"input", r.input_count},
              {"kept", r.kept_count},
              {"dropped", r.dropped_total()},
              {"dropped_by_stage", r.dropped_by_stage},
              {"quarantined", r.quarantined.size()},
              {"duplicate_clusters", r.duplicate_clusters},
              {"conserved", r.conserved()},
              {"store", layout.root.string()}};
  std::string summary = "ingest: " + std::to_string(r.input_count) + " input, " + std::to_string(r.kept_count) +
                        " kept, " + std::to_string(r.dropped_total()) + " dropped (" + stage_counts(r.dropped_by_stage) +
                        "), " + std::to_string(r.quarantined.size()) + " quarantined";
  return {std::move(out), std::move(summary)};
}

CommandResult run_index(const EngineConfig& config, Adapters& adapters) {
  const StoreLayout layout{config.store_root};
  layout.check();
  if (!std::filesystem::exists(layout.corpus_docs())) {
    throw Error(ErrorKind::conflict, "corpus not ingested (missing " + layout.corpus_docs().string() +
                                         "); run `grg ingest` first");
  }
  const auto docs = corpus::clean_documents_from_jsonl(io::read_file(layout.corpus_docs()));
  std::vector<embed::Chunk> chunks;
  for (const auto& d : docs) {
    for (auto& c : embed::chunk_document(d, config.chunking)) chunks.push_back(std::move(c));
  }
  if (chunks.empty()) throw Error(ErrorKind::conflict, "corpus has no text to index; check the ingest report");

  std::vector<embed::EmbeddingVector> vectors(chunks.size());
  auto& embedder = *adapters.embedder;
  const std::size_t workers = embedder.concurrent_safe() ? config.pipeline.workers : 1;
  io::parallel_for(chunks.size(), workers, [&](std::size_t i) { vectors[i] = embed::embed_text(chunks[i].text, embedder); });

  embed::VectorSet set;
  set.dim = static_cast<std::uint32_t>(embedder.dim());
  std::vector<vindex::VectorIndex::Entry> entries;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    set.records.push_back({chunks[i].chunk_id, vectors[i].values});
    entries.emplace_back(chunks[i].chunk_id, std::move(vectors[i]));
  }
  const auto index = vindex::VectorIndex::build(std::move(entries), config.index_mode, config.small_world);
  io::write_file(layout.chunks(), embed::chunks_to_jsonl(chunks));
  embed::write_vector_file(layout.vectors(), set);
  index.persist(layout.index());

  json out = {{"command", "index"},
              {"documents", docs.size()},
              {"chunks", chunks.size()},
              {"dim", embedder.dim()},
              {"embedder", embedder.name()},
              {"mode", vindex::to_string(config.index_mode)}};
  std::string summary = "index: " + std::to_string(chunks.size()) + " chunks from " + std::to_string(docs.size()) +
                        " documents, " + std::string(vindex::to_string(config.index_mode)) + " index, dim " +
                        std::to_string(embedder.dim());
  return {std::move(out), std::move(summary)};
}

CommandResult run_graph(const EngineConfig& config, Adapters& adapters) {
  const StoreLayout layout{config.store_root};
  const auto chunks = stored_chunks(layout);
  auto build = kgraph::build_graph(chunks, *adapters.extractor, {config.extract_attempts});
  kgraph::write_graph(build.graph, layout.graph());
  io::write_file(layout.graph_statements(), kgraph::graph_to_statements(build.graph));
  const auto& r = build.report;
  json report = {{"chunks", r.chunks},
                 {"triples_accepted", r.triples_accepted},
                 {"self_loops_dropped", r.self_loops_dropped},
                 {"unextracted", r.unextracted},
                 {"warnings", r.warnings}};
  io::write_file(layout.graph_report(), report.dump(2) + "\n");

  json out = {{"command", "graph"},
              {"chunks", r.chunks},
              {"entities", build.graph.entities().size()},
              {"relations", build.graph.relations().size()},
              {"unextracted", r.unextracted.size()},
              {"warnings", r.warnings.size()},
              {"extractor", adapters.extractor->name()}};
  std::string summary = "graph: " + std::to_string(build.graph.entities().size()) + " entities, " +
                        std::to_string(build.graph.relations().size()) + " relations from " +
                        std::to_string(r.chunks) + " chunks (" + std::to_string(r.unextracted.size()) +
                        " unextracted, " + std::to_string(r.warnings.size()) + " warnings)";
  return {std::move(out), std::move(summary)};
}

CommandResult run_forge(const EngineConfig& config, Adapters& adapters) {
  const StoreLayout layout{config.store_root};
  const auto chunks = stored_chunks(layout);
  std::vector<forge::SourcedRecord> records;
  std::vector<std::string> notices;
  std::size_t pairs = 0;
  std::size_t ungrounded = 0;
  for (const auto& chunk : chunks) {
    auto qa = forge::generate_qa(chunk, *adapters.qa, config.forge_instruction);
    pairs += qa.pairs.size();
    for (const auto& p : qa.pairs) ungrounded += p.grounded ? 0 : 1;
    for (auto& n : qa.notices) notices.push_back(std::move(n));
    auto built = forge::build_records(qa.pairs, config.forge_instruction, chunk);
    for (auto& r : built.records) records.push_back(std::move(r));
    for (auto& reason : built.rejected) notices.push_back(std::move(reason));
  }
  const auto quality = forge::assess_quality(records, *adapters.record_judge, config.forge_min_score);
  std::vector<forge::InstructionRecord> kept;
  for (const auto& r : quality.kept) kept.push_back(r.record);
  std::string rejected;
  for (const auto& r : quality.rejected) {
    rejected += json{{"chunk_id", r.record.chunk_id},
                     {"reason", r.reason},
                     {"record", json::parse(forge::record_to_line(r.record.record))}}
                    .dump() +
                "\n";
  }
  io::write_file(layout.forge() / "rejected.jsonl", rejected);
  forge::export_training_bundle(kept, forge::default_training_configs(), layout.forge());

  json out = {{"command", "forge"},
              {"chunks", chunks.size()},
              {"pairs", pairs},
              {"ungrounded", ungrounded},
              {"records", records.size()},
              {"kept", quality.kept.size()},
              {"rejected", quality.rejected.size()},
              {"output_dir", layout.forge().string()}};
  std::string summary = "forge: " + std::to_string(quality.kept.size()) + " records kept, " +
                        std::to_string(quality.rejected.size()) + " rejected, from " + std::to_string(pairs) +
                        " generated pairs over " + std::to_string(chunks.size()) + " chunks";
  return {std::move(out), std::move(summary)};
}

QueryRequest query_request_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::format, "query body must be a JSON object");
  QueryRequest q;
  for (const auto& [key, value] : j.items()) {
    if (key == "text") {
      if (!value.is_string()) throw Error(ErrorKind::format, "'text' must be a string");
      q.text = value.get<std::string>();
    } else if (key == "image_ids") {
      if (!value.is_array()) throw Error(ErrorKind::format, "'image_ids' must be an array of strings");
      for (const auto& id : value) {
        if (!id.is_string()) throw Error(ErrorKind::format, "'image_ids' must be an array of strings");
        q.image_ids.push_back(id.get<std::string>());
      }
    } else if (key == "mode") {
      if (!value.is_string()) throw Error(ErrorKind::format, "'mode' must be a string");
      try {
        q.mode = engine::parse_mode(value.get<std::string>());
      } catch (const Error& e) {
        throw Error(ErrorKind::format, e.what());
      }
    } else {
      throw Error(ErrorKind::format, "unexpected field '" + key + "' in query");
    }
  }
  return q;
}

engine::Resources resources(const Stores& stores, Adapters& adapters) {
  engine::Resources r;
  r.chunks = &stores.chunks;
  r.index = &stores.index;
  r.graph = stores.graph ? &*stores.graph : nullptr;
  r.embedder = adapters.embedder.get();
  r.extractor = adapters.extractor.get();
  r.captioner = adapters.captioner.get();
  r.ocr = adapters.ocr.get();
  return r;
}

json run_query(const EngineConfig& config, const Stores& stores, Adapters& adapters, const QueryRequest& request) {
  engine::Query query{request.text, {}};
  for (const auto& id : request.image_ids) query.images.push_back({id, "", id, "png"});
  const auto mode = request.mode.value_or(config.default_mode);
  const auto a = engine::answer(query, mode, resources(stores, adapters), config.engine, *adapters.generator);

  std::map<std::string, const vindex::SearchHit*> hit_by_id;
  for (const auto& h : a.hits) hit_by_id.emplace(h.chunk_id, &h);
  json facts = json::array();
  json chunks = json::array();
  for (const auto& b : a.context.blocks) {
    if (b.kind == engine::BlockKind::facts) {
      std::size_t start = 0;
      while (start <= b.text.size()) {
        const std::size_t nl = std::min(b.text.find('\n', start), b.text.size());
        facts.push_back(b.text.substr(start, nl - start));
        start = nl + 1;
      }
      continue;
    }
    const auto& chunk = stores.chunks.at(b.id);
    const auto* hit = hit_by_id.at(b.id);
    chunks.push_back({{"chunk_id", b.id},
                      {"doc_id", chunk.doc_id},
                      {"span", {chunk.span.start, chunk.span.end}},
                      {"rank", hit->rank},
                      {"score", hit->score},
                      {"text", b.text}});
  }
  return {{"answer", a.answer},
          {"mode", engine::to_string(a.mode)},
          {"generator", a.generator},
          {"context",
           {{"facts", facts},
            {"chunks", chunks},
            {"total_chars", a.context.total_chars},
            {"budget_chars", a.context.budget_chars},
            {"truncation", a.context.truncation}}},
          {"diagnostics",
           {{"fused_query", a.fused_query}, {"query_entities", a.query_entities}, {"notices", a.notices}}}};
}

CommandResult run_eval(const EngineConfig& config, const Stores& stores, Adapters& adapters,
                       const std::vector<evalbench::McqQuestion>& questions, engine::Mode mode) {
  const StoreLayout layout{config.store_root};
  const auto report =
      evalbench::run_eval(questions, mode, resources(stores, adapters), config.engine, *adapters.generator);
  json out = evalbench::report_to_json(report);
  const std::string name = "eval-" + std::string(engine::to_string(mode));
  const auto json_path = layout.reports() / (name + ".json");
  io::write_file(json_path, out.dump(2) + "\n");
  const std::string table = evalbench::report_table(report);
  io::write_file(layout.reports() / (name + ".txt"), table);
  out["report_path"] = json_path.string();
  return {std::move(out), table};
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::config: return 2;
    case ErrorKind::contract: return 3;
    case ErrorKind::io: return 4;
    case ErrorKind::format: return 5;
    case ErrorKind::not_found: return 6;
    case ErrorKind::conflict: return 7;
    case ErrorKind::adapter: return 8;
  }
  return 1;
}

int http_status(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::config:
    case ErrorKind::contract:
    case ErrorKind::format: return 400;
    case ErrorKind::not_found: return 404;
    case ErrorKind::conflict: return 409;
    case ErrorKind::adapter: return 503;
    case ErrorKind::io: return 500;
  }
  return 500;
}

json error_envelope(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace grg::gateway
