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

#include "grg/evalbench/benchmark.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::evalbench {

using nlohmann::json;

namespace {

constexpr std::string_view kLabelAlphabet = "ABCDEF";

struct RowError {
  std::string reason;
};

std::string string_field(const json& row, const char* key) {
  if (!row.contains(key)) throw RowError{std::string("missing ") + key};
  if (!row.at(key).is_string()) throw RowError{std::string(key) + " must be a string"};
  std::string v = row.at(key).get<std::string>();
  if (text::trim(v).empty()) throw RowError{std::string("empty ") + key};
  return v;
}

McqQuestion parse_row(std::string_view line) {
  json row;
  try {
    row = json::parse(line);
  } catch (const json::exception&) {
    throw RowError{"not valid JSON"};
  }
  if (!row.is_object()) throw RowError{"row must be a JSON object"};
  McqQuestion q;
  q.qid = string_field(row, "qid");
  q.stem = string_field(row, "stem");
  q.answer_key = string_field(row, "answer_key");
  try {
    q.difficulty = parse_difficulty(string_field(row, "difficulty"));
  } catch (const Error& e) {
    throw RowError{e.what()};
  }
  if (!row.contains("options") || !row.at("options").is_array()) throw RowError{"missing options array"};
  std::set<std::string> labels;
  for (const auto& opt : row.at("options")) {
    if (!opt.is_object()) throw RowError{"option must be an object"};
    McqOption o{string_field(opt, "label"), string_field(opt, "text")};
    if (o.label.size() != 1 || kLabelAlphabet.find(o.label[0]) == std::string_view::npos) {
      throw RowError{"option label '" + o.label + "' is not one of A-F"};
    }
    if (!labels.insert(o.label).second) throw RowError{"duplicate option label '" + o.label + "'"};
    q.options.push_back(std::move(o));
  }
  if (q.options.size() < 2 || q.options.size() > 6) throw RowError{"need 2 to 6 options"};
  if (!labels.contains(q.answer_key)) throw RowError{"answer_key '" + q.answer_key + "' is not an option label"};
  return q;
}

}  // namespace

std::string_view to_string(Difficulty d) noexcept {
  switch (d) {
    case Difficulty::easy: return "easy";
    case Difficulty::intermediate: return "intermediate";
    case Difficulty::hard: return "hard";
  }
  return "easy";
}

Difficulty parse_difficulty(std::string_view name) {
  if (name == "easy") return Difficulty::easy;
  if (name == "intermediate") return Difficulty::intermediate;
  if (name == "hard") return Difficulty::hard;
  throw Error(ErrorKind::format, "unknown difficulty '" + std::string(name) + "'");
}

std::vector<std::string> McqQuestion::labels() const {
  std::vector<std::string> out;
  for (const auto& o : options) out.push_back(o.label);
  return out;
}

Benchmark parse_benchmark(std::string_view content) {
  Benchmark bench;
  std::set<std::string> qids;
  io::for_each_line(content, [&](std::size_t line_no, std::string_view line) {
    McqQuestion q;
    try {
      q = parse_row(line);
    } catch (const RowError& e) {
      bench.rejected.push_back({line_no, e.reason});
      return;
    }
    if (!qids.insert(q.qid).second) {
      throw Error(ErrorKind::format, "line " + std::to_string(line_no) + ": duplicate qid '" + q.qid + "'");
    }
    bench.questions.push_back(std::move(q));
  });
  if (bench.questions.empty()) {
    std::string msg = "benchmark has no valid questions";
    if (!bench.rejected.empty()) {
      msg += " (first rejected row: line " + std::to_string(bench.rejected.front().line) + ": " +
             bench.rejected.front().reason + ")";
    }
    throw Error(ErrorKind::format, msg);
  }
  return bench;
}

Benchmark load_benchmark(const std::filesystem::path& path) {
  try {
    return parse_benchmark(io::read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::format) throw;
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

std::optional<std::string> parse_choice(std::string_view output, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < output.size(); ++i) {
    const char c = output[i];
    if (!text::is_word_byte(c)) continue;
    const bool left_ok = i == 0 || !text::is_word_byte(output[i - 1]);
    const bool right_ok = i + 1 == output.size() || !text::is_word_byte(output[i + 1]);
    if (!left_ok || !right_ok) continue;
    const char upper = static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    const std::string candidate(1, upper);
    if (std::find(labels.begin(), labels.end(), candidate) != labels.end()) return candidate;
  }
  return std::nullopt;
}

std::string render_query(const McqQuestion& q) {
  std::string out = q.stem;
  for (const auto& o : q.options) out += "\n" + o.label + ". " + o.text;
  return out;
}

}  // namespace grg::evalbench
