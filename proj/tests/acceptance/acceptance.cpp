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

// Acceptance gate: one PASS/FAIL line per primary criterion. Tolerances and
// time limits are fixed here; the exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grg/common/io.hpp"
#include "grg/embed/chunk.hpp"
#include "grg/evalbench/benchmark.hpp"
#include "grg/evalbench/runner.hpp"
#include "grg/forge/bundle.hpp"
#include "grg/forge/records.hpp"
#include "grg/gateway/commands.hpp"
#include "grg/gateway/service.hpp"
#include "grg/gateway/store.hpp"
#include "grg/kgraph/align.hpp"
#include "grg/kgraph/graph.hpp"
#include "grg/mmio/vision.hpp"
#include "grg/vindex/index.hpp"
#include "local_server.hpp"
#include "oracles.hpp"
#include "pipeline.hpp"
#include "random_graph.hpp"
#include "test_support.hpp"

namespace {

using namespace grg;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kExactSearchLimitSeconds = 10.0;
constexpr double kAnnLimitSeconds = 30.0;
constexpr double kMinRecallAt10 = 0.95;
constexpr double kReconstructionLimitSeconds = 5.0;
constexpr double kAblationLimitSeconds = 10.0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Collects failures so one criterion reports every violated clause.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    all_ &= ok;
  }
  Outcome done(std::string detail) const {
    if (all_) return {true, std::move(detail)};
    std::string msg;
    for (const auto& f : failures_) msg += (msg.empty() ? "" : "; ") + f;
    return {false, msg};
  }

 private:
  bool all_ = true;
  std::vector<std::string> failures_;
};

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

using Rows = std::vector<std::pair<std::string, std::vector<float>>>;

vindex::VectorIndex build_index(const Rows& rows, vindex::IndexMode mode) {
  std::vector<vindex::VectorIndex::Entry> entries;
  for (const auto& [id, v] : rows) entries.emplace_back(id, embed::EmbeddingVector{v, true});
  return vindex::VectorIndex::build(std::move(entries), mode);
}

// 1000 vectors of dim 64; the last 20 duplicate earlier rows so ties occur.
Rows search_instance() {
  std::mt19937_64 rng(1000);
  Rows rows;
  for (std::size_t i = 0; i < 980; ++i) rows.emplace_back("v" + std::to_string(i), testing::random_unit(rng, 64));
  for (std::size_t i = 0; i < 20; ++i) rows.emplace_back("w" + std::to_string(i), rows[i * 7].second);
  return rows;
}

std::vector<std::vector<float>> search_queries(const Rows& rows) {
  std::mt19937_64 rng(1001);
  std::vector<std::vector<float>> qs;
  for (std::size_t q = 0; q < 100; ++q) qs.push_back(q % 4 == 0 ? rows[q].second : testing::random_unit(rng, 64));
  return qs;
}

Outcome vector_search_oracle() {
  const auto t0 = Clock::now();
  const Rows rows = search_instance();
  const auto index = build_index(rows, vindex::IndexMode::exact);
  Verdict v;
  std::size_t compared = 0;
  for (const auto& q : search_queries(rows)) {
    for (std::size_t k : {1u, 5u, 20u}) {
      const auto got = index.search(embed::EmbeddingVector{q, true}, k);
      const auto want = testing::brute_force_top_k(rows, q, k);
      bool same = got.size() == want.size();
      for (std::size_t i = 0; same && i < got.size(); ++i) {
        same = got[i].chunk_id == want[i].id && got[i].score == want[i].score && got[i].rank == i + 1;
      }
      v.require(same, "mismatch at k=" + std::to_string(k));
      ++compared;
    }
  }
  const double secs = testing::seconds_since(t0);
  v.require(secs < kExactSearchLimitSeconds, "took " + fmt_seconds(secs));
  return v.done(std::to_string(compared) + " result lists identical, " + fmt_seconds(secs));
}

Outcome ann_recall() {
  const auto t0 = Clock::now();
  const Rows rows = search_instance();
  const auto exact = build_index(rows, vindex::IndexMode::exact);
  const auto approx = build_index(rows, vindex::IndexMode::approximate);
  std::size_t found = 0, total = 0;
  for (const auto& q : search_queries(rows)) {
    std::set<std::string> truth;
    for (const auto& h : exact.search(embed::EmbeddingVector{q, true}, 10)) truth.insert(h.chunk_id);
    for (const auto& h : approx.search(embed::EmbeddingVector{q, true}, 10)) found += truth.count(h.chunk_id);
    total += truth.size();
  }
  const double recall = static_cast<double>(found) / static_cast<double>(total);
  const double secs = testing::seconds_since(t0);
  Verdict v;
  v.require(recall >= kMinRecallAt10, "recall@10 " + std::to_string(recall));
  v.require(secs < kAnnLimitSeconds, "took " + fmt_seconds(secs));
  return v.done("recall@10 " + std::to_string(recall) + ", " + fmt_seconds(secs));
}

Outcome chunk_reconstruction() {
  const auto t0 = Clock::now();
  std::mt19937 rng(500);
  Verdict v;
  std::size_t chunks_seen = 0;
  for (int d = 0; d < 500; ++d) {
    const std::string body = testing::random_body(rng, 20000);
    const std::size_t target = 16 + rng() % 2033;
    const embed::ChunkPolicy policy{target, rng() % target, rng() % 65};
    const auto chunks = embed::chunk_text("doc" + std::to_string(d), body, policy);
    chunks_seen += chunks.size();
    v.require(testing::reconstruct(body, chunks) == body, "doc " + std::to_string(d) + " not reconstructed");
  }
  const double secs = testing::seconds_since(t0);
  v.require(secs < kReconstructionLimitSeconds, "took " + fmt_seconds(secs));
  return v.done("500 documents, " + std::to_string(chunks_seen) + " chunks, " + fmt_seconds(secs));
}

Outcome graph_integrity() {
  Verdict v;
  auto chunks = embed::chunks_from_jsonl(io::read_file(testing::fixture("graph20/chunks.jsonl")));
  std::set<std::string> chunk_ids;
  for (const auto& c : chunks) chunk_ids.insert(c.chunk_id);
  kgraph::PatternExtractor extractor({kgraph::PatternExtractor::default_rules(), {}, "entity", 4});
  const auto built = kgraph::build_graph(chunks, extractor);
  const auto& g = built.graph;
  try {
    g.check_integrity();
  } catch (const std::exception& e) {
    v.require(false, e.what());
  }
  for (const auto& r : g.relations()) {
    v.require(g.find(r.subject_id) && g.find(r.object_id), "dangling relation");
    v.require(!r.provenance.empty(), "relation without provenance");
    for (const auto& p : r.provenance) v.require(chunk_ids.count(p) == 1, "unknown provenance " + p);
  }
  for (const auto& [id, e] : g.entities()) {
    v.require(!e.provenance.empty(), "entity without provenance");
    for (const auto& p : e.provenance) v.require(chunk_ids.count(p) == 1, "unknown provenance " + p);
  }
  v.require(g.entities().size() == 16 && g.relations().size() == 12, "unexpected graph size");
  std::reverse(chunks.begin(), chunks.end());
  v.require(kgraph::build_graph(chunks, extractor).graph == g, "rebuild differs");

  std::mt19937_64 rng(50);
  std::size_t checks = 0;
  for (int round = 0; round < 5; ++round) {
    auto [rg, og] = testing::random_graph(rng, 50, 80);
    for (int s = 0; s < 20; ++s) {
      const std::vector<std::string> seeds = {og.nodes[rng() % og.nodes.size()]};
      for (int depth : {1, 2}) {
        const auto got = kgraph::neighborhood(rg, seeds, depth);
        const auto [nodes, edges] = testing::bfs_oracle(og, seeds, depth);
        std::set<std::string> got_nodes;
        for (const auto& [id, _] : got.subgraph.entities()) got_nodes.insert(id);
        std::set<std::tuple<std::string, std::string, std::string>> got_edges;
        for (const auto& r : got.subgraph.relations()) got_edges.insert({r.subject_id, r.predicate, r.object_id});
        v.require(got_nodes == nodes && got_edges == edges, "neighborhood differs from BFS oracle");
        ++checks;
      }
    }
  }
  return v.done("16 entities, 12 relations, rebuild identical, " + std::to_string(checks) +
                " neighborhoods match BFS oracle");
}

/// Builds the ablation store once; later criteria reuse it.
class AblationWorld {
 public:
  AblationWorld() {
    config_ = testing::fixture_config("ablation/config.json", dir_ / "store");
    testing::build_store(config_, testing::fixture("ablation/manifest.jsonl"));
  }
  const gateway::EngineConfig& config() const { return config_; }
  const testing::TempDir& dir() const { return dir_; }

 private:
  testing::TempDir dir_;
  gateway::EngineConfig config_;
};

Outcome ablation_trend(const AblationWorld& world, double build_seconds) {
  const auto t0 = Clock::now();
  const auto stores = gateway::load_stores(gateway::StoreLayout{world.config().store_root});
  auto adapters = gateway::make_adapters(world.config());
  const auto bench = evalbench::load_benchmark(testing::fixture("ablation/benchmark.jsonl"));
  Verdict v;
  v.require(bench.questions.size() == 30 && bench.rejected.empty(), "benchmark is not 30 clean rows");
  const std::pair<engine::Mode, std::size_t> expected[] = {
      {engine::Mode::base, 10}, {engine::Mode::rag, 20}, {engine::Mode::grg, 30}};
  std::string detail;
  for (const auto& [mode, want] : expected) {
    const auto res = gateway::resources(stores, adapters);
    const auto a = evalbench::run_eval(bench.questions, mode, res, world.config().engine, *adapters.generator);
    const auto b = evalbench::run_eval(bench.questions, mode, res, world.config().engine, *adapters.generator);
    const std::string name(engine::to_string(mode));
    v.require(a.correct == want, name + " scored " + std::to_string(a.correct) + "/30");
    v.require(a.transcript == b.transcript, name + " not deterministic");
    detail += name + " " + std::to_string(a.correct) + "/30, ";
  }
  const double secs = build_seconds + testing::seconds_since(t0);
  v.require(secs < kAblationLimitSeconds, "took " + fmt_seconds(secs));
  return v.done(detail + "deterministic, " + fmt_seconds(secs));
}

constexpr const char* kReferenceLine =
    R"({"Instruction": "This is a Question and Answer task related to 3GPP.", )"
    R"("Input": "What is the purpose of the SIP-based protocol framework?", )"
    R"("Output": "The SIP-based protocol framework serves as a means of user configuration of supplementary services in the IM CN subsystem.", )"
    R"("Metadata": "Section 4.1, General description in 24238-c00"})";

Outcome record_round_trip() {
  Verdict v;
  const auto r = forge::record_from_line(kReferenceLine);
  v.require(!forge::record_problem(r).has_value(), "record invalid");
  v.require(r.instruction == "This is a Question and Answer task related to 3GPP.", "instruction differs");
  v.require(forge::record_to_line(r) == kReferenceLine, "re-export not byte-identical");
  testing::TempDir dir;
  forge::export_training_bundle({r}, forge::default_training_configs(), dir.path());
  const std::string file = io::read_file(dir / std::string(forge::kRecordsFile));
  v.require(file == std::string(kReferenceLine) + "\n", "bundle file not byte-identical");
  v.require(forge::records_from_jsonl(file) == std::vector<forge::InstructionRecord>{r}, "bundle re-import differs");
  return v.done("import, validate, export byte-identical");
}

Outcome training_config_fidelity() {
  Verdict v;
  testing::TempDir dir;
  forge::export_training_bundle({forge::record_from_line(kReferenceLine)}, forge::default_training_configs(),
                                dir.path());
  const auto cs = forge::read_training_configs(dir / std::string(forge::kTrainingConfigFile));
  v.require(cs.size() == 2, "expected two phases");
  if (cs.size() == 2) {
    v.require(cs[0].phase == forge::Phase::pretrain && cs[0].initial_lr == 5e-6, "pretrain lr");
    v.require(cs[1].phase == forge::Phase::finetune && cs[1].initial_lr == 1e-5, "finetune lr");
    for (const auto& c : cs) {
      v.require(c.lora_rank == 8 && c.lora_scale == 16, "lora values");
      v.require(c.precision == "bf16", "precision");
      v.require(c.scheduler == "cosine" && c.optimizer == "adam", "scheduler/optimizer");
    }
  }
  return v.done("pretrain 5e-6, finetune 1e-5, cosine, adam, LoRA 8/16, bf16");
}

Outcome pipeline_conservation() {
  Verdict v;
  testing::TempDir dir;
  const auto config = testing::fixture_config("corpus6/config.json", dir / "store");
  auto adapters = gateway::make_adapters(config);
  const auto r = gateway::run_ingest(config, adapters, testing::fixture("corpus6/manifest.jsonl")).result;
  const int input = r["input"], kept = r["kept"], dropped = r["dropped"], quarantined = r["quarantined"];
  v.require(input == kept + dropped + quarantined, "input != kept + dropped + quarantined");
  v.require(input == 6 && kept == 4 && dropped == 2 && quarantined == 0, "totals differ from hand trace");
  v.require(r["dropped_by_stage"] == json({{"dedup", 1}, {"keyword", 1}}), "per-stage counts differ");
  v.require(r["conserved"] == true, "report not conserved");
  return v.done("6 = 4 kept + 2 dropped (dedup 1, keyword 1) + 0 quarantined");
}

Outcome ocr_threshold_law() {
  Verdict v;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::size_t sets = 0;
  for (int round = 0; round < 1000; ++round, ++sets) {
    std::vector<mmio::OcrToken> toks(rng() % 40);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      // Every fourth confidence sits on a two-decimal grid so thresholds hit it exactly.
      const double c = i % 4 == 0 ? static_cast<double>(rng() % 101) / 100.0 : u(rng);
      toks[i] = {"t" + std::to_string(i), c, {0, static_cast<std::uint32_t>(i), 1, 1}};
    }
    std::vector<double> ts = {0.0, 1.0, static_cast<double>(rng() % 101) / 100.0, u(rng), u(rng)};
    std::sort(ts.begin(), ts.end());
    std::size_t previous = toks.size() + 1;
    for (double t : ts) {
      const auto kept = mmio::filter_by_confidence(toks, t);
      std::vector<mmio::OcrToken> want;
      for (const auto& tok : toks) {
        if (tok.confidence >= t) want.push_back(tok);
      }
      v.require(kept == want, "filtered set differs from {confidence >= t}");
      v.require(kept.size() <= previous, "not monotone in t");
      previous = kept.size();
    }
  }
  return v.done(std::to_string(sets) + " token sets x 5 thresholds");
}

Outcome cli_http_bridge(const AblationWorld& world) {
  Verdict v;
  // A graph-only question, so the answer depends on retrieval and facts.
  const auto bench = evalbench::load_benchmark(testing::fixture("ablation/benchmark.jsonl"));
  const auto& hard = bench.questions.back();
  const std::string question = evalbench::render_query(hard);
  const std::string cmd = "GRG_STORE_ROOT=" + testing::shell_quote(world.config().store_root.string()) + " " +
                          testing::shell_quote(GRG_CLI_PATH) + " --config " +
                          testing::shell_quote(testing::fixture("ablation/config.json").string()) +
                          " query --mode grg --text " + testing::shell_quote(question);
  const auto proc = testing::run_process(cmd);
  v.require(proc.exit_code == 0, "cli exited " + std::to_string(proc.exit_code));
  json from_cli;
  try {
    from_cli = json::parse(proc.out);
  } catch (const std::exception& e) {
    v.require(false, std::string("cli output not JSON: ") + e.what());
  }

  gateway::Service service(world.config());
  testing::LocalServer server;
  service.install_routes(server.server());
  server.start();
  httplib::Client client(server.base_url());
  auto res = client.Post("/v1/query", json{{"text", question}, {"mode", "grg"}}.dump(), "application/json");
  v.require(res && res->status == 200, "POST /v1/query failed");
  json from_http = res ? json::parse(res->body, nullptr, false) : json();
  server.stop();

  v.require(!from_cli.is_null() && from_cli.value("answer", "") == from_http.value("answer", "?"), "answers differ");
  v.require(from_cli.contains("context") && from_cli["context"] == from_http["context"], "contexts differ");
  v.require(from_cli == from_http, "payloads differ");
  const auto label = evalbench::parse_choice(from_http.value("answer", ""), hard.labels());
  v.require(label == hard.answer_key, "bridge question not answered correctly");
  return v.done("answer and context identical (" + from_http.value("answer", "") + ")");
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const std::string& name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  };

  report("vector-search oracle equivalence", vector_search_oracle);
  report("ANN recall gate", ann_recall);
  report("chunk reconstruction property", chunk_reconstruction);
  report("graph integrity suite", graph_integrity);

  std::unique_ptr<AblationWorld> world;
  double build_seconds = 0.0;
  try {
    const auto t0 = Clock::now();
    world = std::make_unique<AblationWorld>();
    build_seconds = testing::seconds_since(t0);
  } catch (const std::exception& e) {
    std::cerr << "ablation store build failed: " << e.what() << '\n';
  }
  auto with_world = [&](auto fn) {
    return [&, fn]() -> Outcome {
      if (!world) return {false, "ablation store could not be built"};
      return fn();
    };
  };
  report("ablation-trend reproduction", with_world([&] { return ablation_trend(*world, build_seconds); }));
  report("worked example record round-trip", record_round_trip);
  report("training-config fidelity", training_config_fidelity);
  report("pipeline conservation", pipeline_conservation);
  report("OCR threshold law", ocr_threshold_law);
  report("CLI/HTTP determinism bridge", with_world([&] { return cli_http_bridge(*world); }));

  std::cout << (failures == 0 ? "all primary criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
