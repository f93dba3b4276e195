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

#include "grg/forge/records.hpp"

#include <json.hpp>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::forge {

using nlohmann::json;

namespace {

constexpr std::string_view kInstruction = "Instruction";
constexpr std::string_view kInput = "Input";
constexpr std::string_view kOutput = "Output";
constexpr std::string_view kMetadata = "Metadata";

std::string json_string(std::string_view s) { return json(std::string(s)).dump(-1, ' ', false, json::error_handler_t::replace); }

}  // namespace

std::optional<std::string> record_problem(const InstructionRecord& r) {
  if (text::trim(r.instruction).empty()) return "empty instruction";
  if (text::trim(r.input).empty()) return "empty input";
  if (text::trim(r.output).empty()) return "empty output";
  return std::nullopt;
}

std::string record_to_line(const InstructionRecord& r) {
  return "{" + json_string(kInstruction) + ": " + json_string(r.instruction) + ", " + json_string(kInput) + ": " + json_string(r.input) +
         ", " + json_string(kOutput) + ": " + json_string(r.output) + ", " + json_string(kMetadata) + ": " + json_string(r.metadata) + "}";
}

InstructionRecord record_from_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, std::string("record is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::format, "record must be a JSON object");
  InstructionRecord r;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw Error(ErrorKind::format, "field '" + key + "' must be a string");
    if (key == kInstruction) {
      r.instruction = value.get<std::string>();
    } else if (key == kInput) {
      r.input = value.get<std::string>();
    } else if (key == kOutput) {
      r.output = value.get<std::string>();
    } else if (key == kMetadata) {
      r.metadata = value.get<std::string>();
    } else {
      throw Error(ErrorKind::format, "unexpected field '" + key + "'");
    }
  }
  if (auto problem = record_problem(r)) throw Error(ErrorKind::format, "invalid record: " + *problem);
  return r;
}

std::string records_to_jsonl(const std::vector<InstructionRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_to_line(r) + "\n";
  return out;
}

std::vector<InstructionRecord> records_from_jsonl(std::string_view content) {
  std::vector<InstructionRecord> out;
  io::for_each_line(content, [&](std::size_t line_no, std::string_view line) {
    try {
      out.push_back(record_from_line(line));
    } catch (const Error& e) {
      throw Error(ErrorKind::format, "line " + std::to_string(line_no) + ": " + e.what());
    }
  });
  return out;
}

std::string citation(const embed::Chunk& chunk) {
  return chunk.doc_id + ", span [" + std::to_string(chunk.span.start) + "," + std::to_string(chunk.span.end) + ")";
}

BuildResult build_records(const std::vector<QaPair>& pairs, std::string_view instruction_template,
                          const embed::Chunk& source) {
  if (text::trim(instruction_template).empty()) throw Error(ErrorKind::contract, "instruction template is empty");
  BuildResult result;
  for (const auto& p : pairs) {
    InstructionRecord r{std::string(instruction_template), p.question, p.answer, citation(source)};
    if (auto problem = record_problem(r)) {
      result.rejected.push_back(source.chunk_id + ": " + *problem);
      continue;
    }
    result.records.push_back({std::move(r), source.chunk_id, source.text});
  }
  return result;
}

}  // namespace grg::forge
