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

// Index file = vector section ("GRGV", see embed/vector_file.hpp) followed by
//
//   magic   "GRGI"
//   version u32 = 1
//   mode    u8 (0 exact, 1 approximate)
//   approximate only:
//     m u32, ef_construction u32, ef_search u32, seed u64,
//     entry u32, top_layer u32,
//     per node (vector order): layer_count u32,
//       per layer: neighbor_count u32, neighbor_count x u32
//
// Nothing may follow the index section.

#include "grg/common/binary.hpp"
#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/embed/vector_file.hpp"
#include "grg/vindex/index.hpp"

namespace grg::vindex {

namespace {

constexpr std::string_view kIndexMagic = "GRGI";
constexpr std::uint32_t kIndexVersion = 1;

}  // namespace

void VectorIndex::persist(const std::filesystem::path& path) const {
  embed::VectorSet set;
  set.dim = static_cast<std::uint32_t>(dim_);
  set.records.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    const auto v = vector(i);
    set.records.push_back({ids_[i], std::vector<float>(v.begin(), v.end())});
  }
  binary::Writer out;
  embed::encode_vectors(out, set);
  out.bytes(kIndexMagic);
  out.le(kIndexVersion);
  out.le(static_cast<std::uint8_t>(mode_ == IndexMode::exact ? 0 : 1));
  if (mode_ == IndexMode::approximate) graph_->encode(out);
  io::write_file(path, out.data());
}

VectorIndex VectorIndex::load(const std::filesystem::path& path) {
  const std::string data = io::read_file(path);
  binary::Reader in(data);
  try {
    auto set = embed::decode_vectors(in);
    if (in.bytes(4) != kIndexMagic) throw Error(ErrorKind::format, "missing index section (bad magic)");
    if (const auto version = in.le<std::uint32_t>(); version != kIndexVersion) {
      throw Error(ErrorKind::format, "unsupported index version " + std::to_string(version));
    }
    const auto mode_byte = in.le<std::uint8_t>();
    if (mode_byte > 1) throw Error(ErrorKind::format, "unknown index mode byte");
    if (set.records.empty()) throw Error(ErrorKind::format, "index holds no vectors");

    VectorIndex index;
    index.mode_ = mode_byte == 0 ? IndexMode::exact : IndexMode::approximate;
    index.dim_ = set.dim;
    index.ids_.reserve(set.records.size());
    index.data_.reserve(set.records.size() * set.dim);
    for (auto& r : set.records) {
      if (!index.positions_.emplace(r.id, index.ids_.size()).second) {
        throw Error(ErrorKind::format, "duplicate chunk_id '" + r.id + "' in index file");
      }
      index.ids_.push_back(std::move(r.id));
      index.data_.insert(index.data_.end(), r.values.begin(), r.values.end());
    }
    if (index.mode_ == IndexMode::approximate) index.graph_ = SmallWorldGraph::decode(in, index.ids_.size());
    if (!in.done()) throw Error(ErrorKind::format, "trailing bytes after index section");
    return index;
  } catch (const Error& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

}  // namespace grg::vindex
