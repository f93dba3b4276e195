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

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace grg::io {

std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file and rename, so readers never observe a
/// partially written file.
void write_file(const std::filesystem::path& path, std::string_view content);

/// Reads a term list: one term per line, `#` starts a comment, blank lines
/// skipped, terms trimmed.
std::vector<std::string> read_term_list(const std::filesystem::path& path);
std::vector<std::string> parse_term_list(std::string_view content);

/// Calls `fn(line_number, line)` for every non-blank line. Line numbers are
/// 1-based.
void for_each_line(std::string_view content,
                   const std::function<void(std::size_t, std::string_view)>& fn);

/// Runs fn(i) for i in [0, n) over `workers` threads. Results must be
/// written to per-index slots so the outcome equals sequential execution.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  workers = std::min(workers, n);
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

}  // namespace grg::io
