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

#include "grg/engine/generator.hpp"

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::engine {

using nlohmann::json;

std::string GenerationRequest::render() const {
  std::string out;
  if (!system_preamble.empty()) out += system_preamble + "\n\n";
  if (!context.empty()) {
    out += "Context:\n";
    for (const auto& b : context) {
      out += b.kind == BlockKind::facts ? "[graph facts]\n" : "[chunk " + b.id + "]\n";
      out += b.text + "\n\n";
    }
  }
  out += "Question:\n" + user_query;
  return out;
}

NeedleMockGenerator::NeedleMockGenerator(std::vector<NeedleRule> rules, std::string abstain)
    : rules_(std::move(rules)), abstain_(std::move(abstain)) {
  for (const auto& r : rules_) {
    if (r.trigger.empty() || r.answer.empty()) throw Error(ErrorKind::config, "mock rule needs a trigger and an answer");
  }
  if (abstain_.empty()) throw Error(ErrorKind::config, "mock abstain text must not be empty");
}

NeedleMockGenerator NeedleMockGenerator::from_json(const json& j) {
  try {
    std::vector<NeedleRule> rules;
    for (const auto& r : j.at("rules")) {
      rules.push_back({r.at("trigger").get<std::string>(), r.value("needle", ""), r.at("answer").get<std::string>()});
    }
    return NeedleMockGenerator(std::move(rules), j.value("abstain", std::string(kDefaultAbstain)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, std::string("malformed mock generator rules: ") + e.what());
  }
}

NeedleMockGenerator NeedleMockGenerator::load(const std::filesystem::path& path) {
  try {
    return from_json(json::parse(io::read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

GenerationResponse NeedleMockGenerator::generate(const GenerationRequest& request) {
  GenerationResponse response;
  response.generator = name();
  response.answer = abstain_;
  for (const auto& rule : rules_) {
    if (!text::icontains(request.user_query, rule.trigger)) continue;
    bool found = rule.needle.empty() || request.user_query.find(rule.needle) != std::string::npos;
    for (const auto& b : request.context) {
      if (found) break;
      found = b.text.find(rule.needle) != std::string::npos;
    }
    if (found) response.answer = rule.answer;
    break;
  }
  std::size_t chars = 0;
  for (const auto& b : request.context) chars += b.chars;
  response.usage = json{{"context_blocks", request.context.size()}, {"context_chars", chars}};
  return response;
}

}  // namespace grg::engine
