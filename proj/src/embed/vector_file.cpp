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

#include "grg/embed/vector_file.hpp"

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"

namespace grg::embed {

void encode_vectors(binary::Writer& out, const VectorSet& set) {
  out.bytes(kVectorMagic);
  out.le(kVectorVersion);
  out.le(set.dim);
  out.le(static_cast<std::uint64_t>(set.records.size()));
  for (const auto& r : set.records) {
    if (r.values.size() != set.dim) {
      throw Error(ErrorKind::contract, "vector '" + r.id + "' has dim " + std::to_string(r.values.size()) +
                                           ", store dim is " + std::to_string(set.dim));
    }
    out.str(r.id);
    for (float v : r.values) out.f32(v);
  }
}

VectorSet decode_vectors(binary::Reader& in) {
  if (in.bytes(4) != kVectorMagic) throw Error(ErrorKind::format, "not a vector store (bad magic)");
  if (const auto version = in.le<std::uint32_t>(); version != kVectorVersion) {
    throw Error(ErrorKind::format, "unsupported vector store version " + std::to_string(version));
  }
  VectorSet set;
  set.dim = in.le<std::uint32_t>();
  const auto count = in.le<std::uint64_t>();
  // Each record takes at least 4 + 4*dim bytes; reject impossible counts
  // before allocating.
  const std::uint64_t min_record = 4 + 4ULL * set.dim;
  if (count > in.remaining() / min_record) throw Error(ErrorKind::format, "vector store truncated");
  set.records.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    VectorRecord r;
    r.id = in.str();
    r.values.resize(set.dim);
    for (auto& v : r.values) v = in.f32();
    set.records.push_back(std::move(r));
  }
  return set;
}

void write_vector_file(const std::filesystem::path& path, const VectorSet& set) {
  binary::Writer out;
  encode_vectors(out, set);
  io::write_file(path, out.data());
}

VectorSet read_vector_file(const std::filesystem::path& path) {
  const std::string data = io::read_file(path);
  binary::Reader in(data);
  auto set = decode_vectors(in);
  if (!in.done()) throw Error(ErrorKind::format, path.string() + ": trailing bytes after vector records");
  return set;
}

}  // namespace grg::embed
