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

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "grg/common/binary.hpp"
#include "grg/embed/embedding.hpp"

namespace grg::embed {

/// Vector store layout (all integers little-endian):
///
///   magic   "GRGV" (4 bytes)
///   version u32 = 1
///   dim     u32
///   count   u64
///   count x { id_len u32, id bytes (UTF-8), dim x float32 }
///
/// See docs/formats.md.
inline constexpr std::string_view kVectorMagic = "GRGV";
inline constexpr std::uint32_t kVectorVersion = 1;

struct VectorRecord {
  std::string id;
  std::vector<float> values;

  bool operator==(const VectorRecord&) const = default;
};

struct VectorSet {
  std::uint32_t dim = 0;
  std::vector<VectorRecord> records;
};

void encode_vectors(binary::Writer& out, const VectorSet& set);
/// Throws Error(format) on bad magic, version or truncation.
VectorSet decode_vectors(binary::Reader& in);

void write_vector_file(const std::filesystem::path& path, const VectorSet& set);
VectorSet read_vector_file(const std::filesystem::path& path);

}  // namespace grg::embed
