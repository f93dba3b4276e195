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
#include <vector>

#include <json.hpp>

#include "grg/engine/context.hpp"

namespace grg::engine {

/// Mirrors an AssembledContext block for block.
struct GenerationRequest {
  std::string system_preamble;
  std::vector<ContextBlock> context;
  std::string user_query;

  /// Single-string prompt: preamble, labeled blocks, then the question.
  std::string render() const;
};

struct GenerationResponse {
  std::string answer;
  std::string generator;
  nlohmann::json usage = nlohmann::json::object();
};

/// Answer generator backend. Failures are reported as Error(adapter).
class GeneratorClient {
 public:
  virtual ~GeneratorClient() = default;
  virtual std::string name() const = 0;
  virtual GenerationResponse generate(const GenerationRequest& request) = 0;
};

/// A mock rule applies to queries containing `trigger` (case-insensitive);
/// it answers `answer` iff `needle` occurs in the query or in a context
/// block. An empty needle makes the rule answerable from the query alone.
struct NeedleRule {
  std::string trigger;
  std::string needle;
  std::string answer;
};

/// Deterministic stand-in for a fine-tuned model. The first matching rule
/// decides; with no rule, or with the needle absent, it abstains.
class NeedleMockGenerator final : public GeneratorClient {
 public:
  explicit NeedleMockGenerator(std::vector<NeedleRule> rules, std::string abstain = kDefaultAbstain);

  /// {"abstain": "...", "rules": [{"trigger", "needle", "answer"}]}
  static NeedleMockGenerator from_json(const nlohmann::json& j);
  static NeedleMockGenerator load(const std::filesystem::path& path);

  std::string name() const override { return "needle-mock"; }
  GenerationResponse generate(const GenerationRequest& request) override;

  /// Contains no standalone option letter, so it never scores as a choice.
  static constexpr const char* kDefaultAbstain = "Insufficient context to respond.";

 private:
  std::vector<NeedleRule> rules_;
  std::string abstain_;
};

}  // namespace grg::engine
