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

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <type_traits>

#include "grg/common/error.hpp"

// Little-endian encoding for the on-disk vector and index formats.
namespace grg::binary {

class Writer {
 public:
  void bytes(std::string_view b) { buf_.append(b); }

  template <typename T>
  void le(T v) {
    static_assert(std::is_integral_v<T>);
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buf_.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
    }
  }

  void f32(float v) { le(std::bit_cast<std::uint32_t>(v)); }

  /// u32 byte length followed by the bytes.
  void str(std::string_view s) {
    le(static_cast<std::uint32_t>(s.size()));
    bytes(s);
  }

  const std::string& data() const noexcept { return buf_; }
  std::string take() { return std::move(buf_); }

 private:
  std::string buf_;
};

/// Every read throws Error(format) when the input is exhausted, so a
/// truncated file never yields a partial object.
class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::string_view bytes(std::size_t n) {
    need(n);
    auto out = data_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  template <typename T>
  T le() {
    static_assert(std::is_integral_v<T>);
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }

  float f32() { return std::bit_cast<float>(le<std::uint32_t>()); }

  std::string str() {
    const auto n = le<std::uint32_t>();
    return std::string(bytes(n));
  }

  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  bool done() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw Error(ErrorKind::format, "unexpected end of file (truncated?)");
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

}  // namespace grg::binary
