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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Byte-level text helpers. Everything here is locale-independent: only ASCII
// letters are case-folded and every byte >= 0x80 counts as a word byte, so
// UTF-8 text in other scripts tokenizes as opaque words.
namespace grg::text {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_word_byte(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return (u >= '0' && u <= '9') || (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u >= 0x80;
}

inline char lower_ascii(char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s) noexcept;

/// Trims and collapses every internal whitespace run to one space.
std::string collapse_whitespace(std::string_view s);

/// Lowercased maximal runs of word bytes.
std::vector<std::string> words(std::string_view s);

/// True if `needle` occurs in `haystack` with non-word bytes (or the string
/// ends) on both sides. Both arguments are compared as given; callers lower
/// them first for case-insensitive matching.
bool contains_word(std::string_view haystack, std::string_view needle) noexcept;

bool icontains(std::string_view haystack, std::string_view needle);

bool starts_with_icase(std::string_view s, std::string_view prefix) noexcept;

/// Byte offsets of every code point start, followed by s.size().
std::vector<std::size_t> utf8_offsets(std::string_view s);

std::size_t utf8_length(std::string_view s) noexcept;

/// Replaces every invalid UTF-8 sequence with U+FFFD.
std::string sanitize_utf8(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// 64-bit FNV-1a. Platform-independent, used for stable ids and hashing
/// n-grams into buckets.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a64(std::string_view s, std::uint64_t basis = kFnvOffset) noexcept {
  std::uint64_t h = basis;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

std::string hex64(std::uint64_t v);

}  // namespace grg::text
