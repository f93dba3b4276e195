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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grg/forge/records.hpp"

namespace grg::forge {

enum class Phase { pretrain, finetune };

std::string_view to_string(Phase phase) noexcept;
Phase parse_phase(std::string_view name);

struct TrainingConfig {
  Phase phase = Phase::finetune;
  double initial_lr = 1e-5;
  std::string scheduler = "cosine";
  std::string optimizer = "adam";
  int lora_rank = 8;
  int lora_scale = 16;
  std::string precision = "bf16";

  bool operator==(const TrainingConfig&) const = default;
};

/// Pretrain (lr 5e-6) then finetune (lr 1e-5); both cosine, adam, LoRA
/// rank 8 scale 16, bf16.
std::vector<TrainingConfig> default_training_configs();

/// Throws Error(contract) unless lr > 0 and both LoRA values are positive.
void validate_config(const TrainingConfig& c);

void to_json(nlohmann::json& j, const TrainingConfig& c);
void from_json(const nlohmann::json& j, TrainingConfig& c);

inline constexpr std::string_view kRecordsFile = "records.jsonl";
inline constexpr std::string_view kTrainingConfigFile = "training_config.json";

/// Writes <dir>/records.jsonl and <dir>/training_config.json
/// ({"configs": [...]}). Throws Error(contract) "nothing to export" on an
/// empty record list and Error(io) on write failures.
void export_training_bundle(const std::vector<InstructionRecord>& records, const std::vector<TrainingConfig>& configs,
                            const std::filesystem::path& dir);

std::vector<TrainingConfig> read_training_configs(const std::filesystem::path& path);

}  // namespace grg::forge
