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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace grg::mmio {

/// Formats an ImageInput may declare.
const std::vector<std::string>& image_format_allowlist();

/// Either inline bytes or a locator (path or URL the backend can fetch).
struct ImageInput {
  std::string image_id;
  std::string bytes;
  std::string locator;
  std::string format;  // lowercase, one of image_format_allowlist()
};

/// Throws Error(contract) on an empty id, an empty payload or a format
/// outside the allowlist.
void validate_image(const ImageInput& img);

struct Caption {
  std::string text;
  std::string source;

  bool operator==(const Caption&) const = default;
};

struct BBox {
  std::uint32_t x = 0, y = 0, w = 0, h = 0;
  bool operator==(const BBox&) const = default;
};

struct OcrToken {
  std::string text;
  double confidence = 0.0;
  BBox bbox;

  bool operator==(const OcrToken&) const = default;
};

class CaptionerClient {
 public:
  virtual ~CaptionerClient() = default;
  virtual std::string name() const = 0;
  virtual std::string caption(const ImageInput& img) = 0;
};

class OcrClient {
 public:
  virtual ~OcrClient() = default;
  virtual std::string name() const = 0;
  virtual std::vector<OcrToken> read(const ImageInput& img) = 0;
};

/// Throws Error(adapter) naming the adapter when the backend fails or
/// returns an empty caption.
Caption caption_image(const ImageInput& img, CaptionerClient& captioner);

/// Tokens sorted top-to-bottom then left-to-right (stable on equal boxes).
/// Throws Error(adapter) on backend failure or a confidence outside [0, 1].
std::vector<OcrToken> ocr_image(const ImageInput& img, OcrClient& ocr);

/// Tokens with confidence >= threshold, order preserved. Throws
/// Error(contract) unless threshold is in [0, 1].
std::vector<OcrToken> filter_by_confidence(const std::vector<OcrToken>& tokens, double threshold);

inline constexpr double kDefaultOcrThreshold = 0.5;
inline constexpr std::string_view kImageLabel = "[image] ";
inline constexpr std::string_view kOcrLabel = "[ocr] ";

/// user_text, "[image] <caption>", "[ocr] <tokens joined by spaces>", one
/// per line, empty parts omitted. Throws Error(contract) if all are empty.
std::string fuse_query(std::string_view user_text, const std::optional<Caption>& caption,
                       const std::vector<OcrToken>& tokens);

/// Caption and OCR output of one image after filtering.
struct ImageText {
  std::string image_id;
  std::optional<Caption> caption;
  std::vector<OcrToken> tokens;
};

/// Multi-image form: user_text followed by each image's blocks in order.
std::string fuse_query(std::string_view user_text, const std::vector<ImageText>& images);

struct ImageReading {
  std::vector<ImageText> images;
  std::vector<std::string> notices;  // adapter failures, in image order
};

/// Runs both adapters on every image. A failing adapter (or a missing one)
/// leaves that part empty and adds a notice; the query proceeds.
ImageReading read_images(const std::vector<ImageInput>& images, CaptionerClient* captioner, OcrClient* ocr,
                         double threshold = kDefaultOcrThreshold);

/// Offline stub for both adapters, keyed by image_id:
///   {"<image_id>": {"caption": "...", "width": W, "height": H,
///                   "tokens": [{"text": "...", "confidence": c,
///                               "bbox": [x, y, w, h]}]}}
/// width/height are optional; when present, boxes must lie inside them.
class FixtureVision final : public CaptionerClient, public OcrClient {
 public:
  struct Entry {
    std::string caption;
    std::vector<OcrToken> tokens;
  };

  /// Throws Error(format) on a malformed table.
  static FixtureVision from_json(const nlohmann::json& table);
  static FixtureVision load(const std::filesystem::path& path);

  std::string name() const override { return "fixture"; }
  /// Unregistered ids and empty captions raise Error(adapter).
  std::string caption(const ImageInput& img) override;
  std::vector<OcrToken> read(const ImageInput& img) override;

 private:
  const Entry& lookup(const ImageInput& img) const;
  std::map<std::string, Entry> entries_;
};

}  // namespace grg::mmio
