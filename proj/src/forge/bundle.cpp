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

#include "grg/forge/bundle.hpp"

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"

namespace grg::forge {

using nlohmann::json;

std::string_view to_string(Phase phase) noexcept { return phase == Phase::pretrain ? "pretrain" : "finetune"; }

Phase parse_phase(std::string_view name) {
  if (name == "pretrain") return Phase::pretrain;
  if (name == "finetune") return Phase::finetune;
  throw Error(ErrorKind::format, "unknown training phase '" + std::string(name) + "'");
}

std::vector<TrainingConfig> default_training_configs() {
  TrainingConfig pretrain;
  pretrain.phase = Phase::pretrain;
  pretrain.initial_lr = 5e-6;
  TrainingConfig finetune;
  finetune.phase = Phase::finetune;
  finetune.initial_lr = 1e-5;
  return {pretrain, finetune};
}

void validate_config(const TrainingConfig& c) {
  if (!(c.initial_lr > 0.0)) throw Error(ErrorKind::contract, "initial_lr must be positive");
  if (c.lora_rank <= 0 || c.lora_scale <= 0) throw Error(ErrorKind::contract, "LoRA rank and scale must be positive");
}

void to_json(json& j, const TrainingConfig& c) {
  j = json{{"phase", to_string(c.phase)},     {"initial_lr", c.initial_lr}, {"scheduler", c.scheduler},
           {"optimizer", c.optimizer},        {"lora_rank", c.lora_rank},   {"lora_scale", c.lora_scale},
           {"precision", c.precision}};
}

void from_json(const json& j, TrainingConfig& c) {
  c.phase = parse_phase(j.at("phase").get<std::string>());
  j.at("initial_lr").get_to(c.initial_lr);
  j.at("scheduler").get_to(c.scheduler);
  j.at("optimizer").get_to(c.optimizer);
  j.at("lora_rank").get_to(c.lora_rank);
  j.at("lora_scale").get_to(c.lora_scale);
  j.at("precision").get_to(c.precision);
}

void export_training_bundle(const std::vector<InstructionRecord>& records, const std::vector<TrainingConfig>& configs,
                            const std::filesystem::path& dir) {
  if (records.empty()) throw Error(ErrorKind::contract, "nothing to export");
  for (const auto& r : records) {
    if (auto problem = record_problem(r)) throw Error(ErrorKind::contract, "invalid record: " + *problem);
  }
  for (const auto& c : configs) validate_config(c);
  io::write_file(dir / kRecordsFile, records_to_jsonl(records));
  io::write_file(dir / kTrainingConfigFile, json{{"configs", configs}}.dump(2) + "\n");
}

std::vector<TrainingConfig> read_training_configs(const std::filesystem::path& path) {
  try {
    auto configs = json::parse(io::read_file(path)).at("configs").get<std::vector<TrainingConfig>>();
    for (const auto& c : configs) validate_config(c);
    return configs;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

}  // namespace grg::forge
