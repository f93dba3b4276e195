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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grg/embed/chunk.hpp"

namespace grg::forge {

/// Four-field supervised fine-tuning example.
struct InstructionRecord {
  std::string instruction;
  std::string input;
  std::string output;
  std::string metadata;  // may be empty

  bool operator==(const InstructionRecord&) const = default;
};

/// Reason the record is invalid, or nullopt.
std::optional<std::string> record_problem(const InstructionRecord& r);

/// One JSON object per line with keys in the order Instruction, Input,
/// Output, Metadata, separated by ", " with ": " after each key; non-ASCII
/// text is written as UTF-8.
std::string record_to_line(const InstructionRecord& r);

/// Accepts any JSON object holding exactly those keys (Metadata optional).
/// Throws Error(format) on other keys, non-string values or an invalid record.
InstructionRecord record_from_line(std::string_view line);

std::string records_to_jsonl(const std::vector<InstructionRecord>& records);
/// Throws Error(format) naming the 1-based line of the first bad row.
std::vector<InstructionRecord> records_from_jsonl(std::string_view content);

struct QaPair {
  std::string question;
  std::string answer;
  bool grounded = true;  // answer occurs in the source chunk
};

/// A record with the chunk it was generated from.
struct SourcedRecord {
  InstructionRecord record;
  std::string chunk_id;
  std::string source_text;
};

/// "doc_id, span [start,end)"
std::string citation(const embed::Chunk& chunk);

struct BuildResult {
  std::vector<SourcedRecord> records;
  std::vector<std::string> rejected;  // one reason per rejected pair
};

/// One record per valid pair; pairs that would give an invalid record are
/// rejected with a reason. Throws Error(contract) on an empty template.
BuildResult build_records(const std::vector<QaPair>& pairs, std::string_view instruction_template,
                          const embed::Chunk& source);

}  // namespace grg::forge
