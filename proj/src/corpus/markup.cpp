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

#include "grg/corpus/markup.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <vector>

#include "grg/common/text.hpp"

namespace grg::corpus {

namespace {

using text::is_space;
using text::is_word_byte;
using text::lower_ascii;

bool is_alpha(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::size_t ifind(std::string_view s, std::string_view needle, std::size_t from) {
  if (needle.empty() || s.size() < needle.size()) return std::string_view::npos;
  for (std::size_t i = from; i + needle.size() <= s.size(); ++i) {
    if (text::starts_with_icase(s.substr(i), needle)) return i;
  }
  return std::string_view::npos;
}

constexpr std::array<std::string_view, 24> kBlockTags{
    "p",  "br", "div", "h1",    "h2",    "h3",      "h4",     "h5",     "h6",         "li",  "ul", "ol",
    "tr", "table", "section", "article", "header", "footer", "blockquote", "pre", "hr", "dl", "dt", "dd"};

std::string_view tag_replacement(std::string_view name) {
  for (auto b : kBlockTags) {
    if (b == name) return "\n";
  }
  if (name == "td" || name == "th") return " ";
  return "";
}

// `{{ ... }}` with nesting. Matched pairs are removed with their content;
// unmatched openers and closers are removed on their own.
std::string remove_templates(std::string_view in) {
  std::vector<bool> drop(in.size(), false);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i + 1 < in.size();) {
    if (in[i] == '{' && in[i + 1] == '{') {
      open.push_back(i);
      i += 2;
    } else if (in[i] == '}' && in[i + 1] == '}') {
      if (!open.empty()) {
        const std::size_t start = open.back();
        open.pop_back();
        for (std::size_t k = start; k < i + 2; ++k) drop[k] = true;
      } else {
        drop[i] = drop[i + 1] = true;
      }
      i += 2;
    } else {
      ++i;
    }
  }
  for (std::size_t start : open) drop[start] = drop[start + 1] = true;
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!drop[i]) out.push_back(in[i]);
  }
  return out;
}

std::string remove_tags(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const char c = in[i];
    if (c == '>') {
      out.push_back(' ');
      ++i;
      continue;
    }
    if (c != '<') {
      out.push_back(c);
      ++i;
      continue;
    }
    if (in.substr(i).starts_with("<!--")) {
      const std::size_t end = in.find("-->", i + 4);
      i = end == std::string_view::npos ? in.size() : end + 3;
      continue;
    }
    const char next = i + 1 < in.size() ? in[i + 1] : '\0';
    const bool tag_like = is_alpha(next) || next == '/' || next == '!' || next == '?';
    const std::size_t close = tag_like ? in.find('>', i + 1) : std::string_view::npos;
    if (close == std::string_view::npos) {
      out.push_back(' ');
      ++i;
      continue;
    }
    std::size_t p = i + 1;
    const bool closing = in[p] == '/';
    while (p < close && (in[p] == '/' || in[p] == '!' || in[p] == '?')) ++p;
    std::string name;
    while (p < close && (is_alpha(in[p]) || (in[p] >= '0' && in[p] <= '9'))) name.push_back(lower_ascii(in[p++]));
    if (!closing && (name == "script" || name == "style")) {
      const std::size_t end_tag = ifind(in, "</" + name, close + 1);
      const std::size_t end = end_tag == std::string_view::npos ? std::string_view::npos : in.find('>', end_tag);
      i = end == std::string_view::npos ? in.size() : end + 1;
      out.push_back(' ');
      continue;
    }
    out.append(tag_replacement(name));
    i = close + 1;
  }
  return out;
}

// [[target|label]] -> label, [[target]] -> target, [label](url) -> label,
// ![alt](url) -> alt.
std::string unwrap_links(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in.substr(i).starts_with("[[")) {
      const std::size_t end = in.find("]]", i + 2);
      if (end != std::string_view::npos) {
        std::string_view inner = in.substr(i + 2, end - i - 2);
        if (auto bar = inner.rfind('|'); bar != std::string_view::npos) inner = inner.substr(bar + 1);
        out.append(inner);
        i = end + 2;
        continue;
      }
    }
    const bool image = in[i] == '!' && i + 1 < in.size() && in[i + 1] == '[';
    const std::size_t open = image ? i + 1 : i;
    if (in[open] == '[') {
      const std::size_t close = in.find_first_of("]\n", open + 1);
      if (close != std::string_view::npos && in[close] == ']' && close + 1 < in.size() && in[close + 1] == '(') {
        const std::size_t paren = in.find_first_of(")\n", close + 2);
        if (paren != std::string_view::npos && in[paren] == ')') {
          out.append(in.substr(open + 1, close - open - 1));
          i = paren + 1;
          continue;
        }
      }
    }
    out.push_back(in[i]);
    ++i;
  }
  return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Entities that would decode to a tag delimiter or a control byte become a
// space.
std::string decode_entities(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    if (in[i] != '&') {
      out.push_back(in[i++]);
      continue;
    }
    const std::size_t semi = in.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(in[i++]);
      continue;
    }
    const std::string name = text::to_lower(in.substr(i + 1, semi - i - 1));
    std::string_view replacement;
    bool known = true;
    if (name == "amp") replacement = "&";
    else if (name == "nbsp" || name == "lt" || name == "gt") replacement = " ";
    else if (name == "quot") replacement = "\"";
    else if (name == "apos") replacement = "'";
    else known = false;
    if (known) {
      out.append(replacement);
      i = semi + 1;
      continue;
    }
    if (name.size() > 1 && name[0] == '#') {
      const bool hex = name[1] == 'x';
      const char* first = name.data() + (hex ? 2 : 1);
      const char* last = name.data() + name.size();
      std::uint32_t cp = 0;
      auto [ptr, ec] = std::from_chars(first, last, cp, hex ? 16 : 10);
      if (ec == std::errc() && ptr == last && first != last && cp <= 0x10FFFF && (cp < 0xD800 || cp > 0xDFFF)) {
        if (cp < 0x20 || cp == '<' || cp == '>' || cp == 0x7F) {
          out.push_back(' ');
        } else {
          append_utf8(out, cp);
        }
        i = semi + 1;
        continue;
      }
    }
    out.push_back(in[i++]);
  }
  return out;
}

bool is_scheme_byte(char c) noexcept {
  return is_alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '.' || c == '-';
}

std::string remove_urls(std::string_view in) {
  std::vector<bool> drop(in.size(), false);
  auto drop_to_space = [&](std::size_t from) {
    std::size_t k = from;
    while (k < in.size() && !is_space(in[k])) drop[k++] = true;
  };
  for (std::size_t pos = in.find("://"); pos != std::string_view::npos; pos = in.find("://", pos + 1)) {
    std::size_t start = pos;
    while (start > 0 && is_scheme_byte(in[start - 1])) --start;
    drop_to_space(start);
  }
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i > 0 && is_word_byte(in[i - 1])) continue;
    const auto rest = in.substr(i);
    if (text::starts_with_icase(rest, "www.") || text::starts_with_icase(rest, "mailto:")) drop_to_space(i);
  }
  std::string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!drop[i]) out.push_back(in[i]);
  }
  return out;
}

std::string normalize_whitespace(std::string_view in) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= in.size()) {
    std::size_t end = pos;
    while (end < in.size() && in[end] != '\n' && in[end] != '\r' && in[end] != '\f' && in[end] != '\v') ++end;
    std::string line = text::collapse_whitespace(in.substr(pos, end - pos));
    if (!line.empty()) {
      if (!out.empty()) out.push_back('\n');
      out += line;
    }
    if (end >= in.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string strip_once(std::string_view in) {
  std::string s = remove_templates(in);
  s = remove_tags(s);
  s = unwrap_links(s);
  s = decode_entities(s);
  s = remove_urls(s);
  return normalize_whitespace(s);
}

}  // namespace

std::string strip_markup(std::string_view body) {
  // Each pass is length non-increasing; iterate to a fixpoint so nested or
  // entity-encoded markup is fully removed and the function is idempotent.
  std::string cur = strip_once(body);
  for (int pass = 0; pass < 32; ++pass) {
    std::string next = strip_once(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace grg::corpus
