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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grg::evalbench {

enum class Difficulty { easy, intermediate, hard };

std::string_view to_string(Difficulty d) noexcept;
/// Throws Error(format) on an unknown name.
Difficulty parse_difficulty(std::string_view name);

struct McqOption {
  std::string label;  // single letter A-F
  std::string text;

  bool operator==(const McqOption&) const = default;
};

struct McqQuestion {
  std::string qid;
  std::string stem;
  std::vector<McqOption> options;
  std::string answer_key;
  Difficulty difficulty = Difficulty::easy;

  std::vector<std::string> labels() const;
  bool operator==(const McqQuestion&) const = default;
};

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
};

struct Benchmark {
  std::vector<McqQuestion> questions;
  std::vector<RejectedRow> rejected;
};

/// JSON Lines rows {qid, stem, options: [{label, text}], answer_key,
/// difficulty}. Malformed rows are rejected with their line number. Throws
/// Error(format) on a duplicate qid (naming it) or when no row is valid.
Benchmark parse_benchmark(std::string_view content);
Benchmark load_benchmark(const std::filesystem::path& path);

/// The first standalone label letter (case-insensitive, word-bounded) in
/// `output`; nullopt means abstain.
std::optional<std::string> parse_choice(std::string_view output, const std::vector<std::string>& labels);

/// Stem, then one "L. text" line per option.
std::string render_query(const McqQuestion& q);

}  // namespace grg::evalbench
