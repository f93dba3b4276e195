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

#include "grg/mmio/vision.hpp"

#include <algorithm>
#include <cmath>

#include "grg/common/error.hpp"
#include "grg/common/io.hpp"
#include "grg/common/text.hpp"

namespace grg::mmio {

using nlohmann::json;

const std::vector<std::string>& image_format_allowlist() {
  static const std::vector<std::string> formats = {"bmp", "gif", "jpeg", "jpg", "png", "tiff", "webp"};
  return formats;
}

void validate_image(const ImageInput& img) {
  if (img.image_id.empty()) throw Error(ErrorKind::contract, "image without an id");
  if (img.bytes.empty() && img.locator.empty()) {
    throw Error(ErrorKind::contract, "image '" + img.image_id + "' has an empty payload");
  }
  const auto& allow = image_format_allowlist();
  if (std::find(allow.begin(), allow.end(), img.format) == allow.end()) {
    throw Error(ErrorKind::contract, "image '" + img.image_id + "' has unsupported format '" + img.format + "'");
  }
}

Caption caption_image(const ImageInput& img, CaptionerClient& captioner) {
  validate_image(img);
  std::string text;
  try {
    text = captioner.caption(img);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::contract) throw;
    throw Error(ErrorKind::adapter, "captioner '" + captioner.name() + "' failed on '" + img.image_id + "': " + e.what(),
                e.retryable());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::adapter, "captioner '" + captioner.name() + "' failed on '" + img.image_id + "': " + e.what());
  }
  text = text::collapse_whitespace(text);
  if (text.empty()) {
    throw Error(ErrorKind::adapter, "captioner '" + captioner.name() + "' returned an empty caption for '" +
                                        img.image_id + "'");
  }
  return {std::move(text), captioner.name()};
}

std::vector<OcrToken> ocr_image(const ImageInput& img, OcrClient& ocr) {
  validate_image(img);
  std::vector<OcrToken> tokens;
  try {
    tokens = ocr.read(img);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::contract) throw;
    throw Error(ErrorKind::adapter, "ocr '" + ocr.name() + "' failed on '" + img.image_id + "': " + e.what(),
                e.retryable());
  } catch (const std::exception& e) {
    throw Error(ErrorKind::adapter, "ocr '" + ocr.name() + "' failed on '" + img.image_id + "': " + e.what());
  }
  for (const auto& t : tokens) {
    if (!std::isfinite(t.confidence) || t.confidence < 0.0 || t.confidence > 1.0) {
      throw Error(ErrorKind::adapter, "ocr '" + ocr.name() + "' returned confidence outside [0,1] for token '" +
                                          t.text + "'");
    }
  }
  std::stable_sort(tokens.begin(), tokens.end(), [](const OcrToken& a, const OcrToken& b) {
    return a.bbox.y != b.bbox.y ? a.bbox.y < b.bbox.y : a.bbox.x < b.bbox.x;
  });
  return tokens;
}

std::vector<OcrToken> filter_by_confidence(const std::vector<OcrToken>& tokens, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorKind::contract, "confidence threshold must be in [0,1], got " + std::to_string(threshold));
  }
  std::vector<OcrToken> out;
  std::copy_if(tokens.begin(), tokens.end(), std::back_inserter(out),
               [threshold](const OcrToken& t) { return t.confidence >= threshold; });
  return out;
}

namespace {

void append_blocks(std::vector<std::string>& parts, const std::optional<Caption>& caption,
                   const std::vector<OcrToken>& tokens) {
  if (caption && !caption->text.empty()) parts.push_back(std::string(kImageLabel) + caption->text);
  std::vector<std::string> words;
  for (const auto& t : tokens) {
    if (!t.text.empty()) words.push_back(t.text);
  }
  if (!words.empty()) parts.push_back(std::string(kOcrLabel) + text::join(words, " "));
}

std::string finish(std::vector<std::string> parts) {
  if (parts.empty()) throw Error(ErrorKind::contract, "query has no text, caption or OCR content");
  return text::join(parts, "\n");
}

}  // namespace

std::string fuse_query(std::string_view user_text, const std::optional<Caption>& caption,
                       const std::vector<OcrToken>& tokens) {
  std::vector<std::string> parts;
  if (!user_text.empty()) parts.emplace_back(user_text);
  append_blocks(parts, caption, tokens);
  return finish(std::move(parts));
}

std::string fuse_query(std::string_view user_text, const std::vector<ImageText>& images) {
  std::vector<std::string> parts;
  if (!user_text.empty()) parts.emplace_back(user_text);
  for (const auto& img : images) append_blocks(parts, img.caption, img.tokens);
  return finish(std::move(parts));
}

ImageReading read_images(const std::vector<ImageInput>& images, CaptionerClient* captioner, OcrClient* ocr,
                         double threshold) {
  ImageReading reading;
  for (const auto& img : images) {
    validate_image(img);
    ImageText out;
    out.image_id = img.image_id;
    if (captioner) {
      try {
        out.caption = caption_image(img, *captioner);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::adapter) throw;
        reading.notices.push_back(std::string("caption unavailable: ") + e.what());
      }
    } else {
      reading.notices.push_back("no captioner configured; image '" + img.image_id + "' not captioned");
    }
    if (ocr) {
      try {
        out.tokens = filter_by_confidence(ocr_image(img, *ocr), threshold);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::adapter) throw;
        reading.notices.push_back(std::string("ocr unavailable: ") + e.what());
      }
    } else {
      reading.notices.push_back("no ocr configured; image '" + img.image_id + "' not read");
    }
    reading.images.push_back(std::move(out));
  }
  return reading;
}

FixtureVision FixtureVision::from_json(const json& table) {
  if (!table.is_object()) throw Error(ErrorKind::format, "image fixture table must be a JSON object");
  FixtureVision fv;
  try {
    for (const auto& [id, spec] : table.items()) {
      Entry e;
      e.caption = spec.value("caption", "");
      // 0 means unbounded
      const std::uint64_t width = spec.value("width", std::uint64_t{0});
      const std::uint64_t height = spec.value("height", std::uint64_t{0});
      for (const auto& t : spec.value("tokens", json::array())) {
        OcrToken tok;
        tok.text = t.at("text").get<std::string>();
        tok.confidence = t.at("confidence").get<double>();
        const auto& b = t.at("bbox");
        if (!b.is_array() || b.size() != 4) throw Error(ErrorKind::format, "bbox must be [x, y, w, h]");
        tok.bbox = {b[0].get<std::uint32_t>(), b[1].get<std::uint32_t>(), b[2].get<std::uint32_t>(),
                    b[3].get<std::uint32_t>()};
        if (!(tok.confidence >= 0.0 && tok.confidence <= 1.0)) {
          throw Error(ErrorKind::format, "token confidence outside [0,1] in image '" + id + "'");
        }
        if ((width > 0 && std::uint64_t{tok.bbox.x} + tok.bbox.w > width) ||
            (height > 0 && std::uint64_t{tok.bbox.y} + tok.bbox.h > height)) {
          throw Error(ErrorKind::format, "token bbox outside image bounds in image '" + id + "'");
        }
        e.tokens.push_back(std::move(tok));
      }
      fv.entries_.emplace(id, std::move(e));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, std::string("malformed image fixture table: ") + e.what());
  }
  return fv;
}

FixtureVision FixtureVision::load(const std::filesystem::path& path) {
  try {
    return from_json(json::parse(io::read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

const FixtureVision::Entry& FixtureVision::lookup(const ImageInput& img) const {
  auto it = entries_.find(img.image_id);
  if (it == entries_.end()) throw Error(ErrorKind::adapter, "no fixture registered for image '" + img.image_id + "'");
  return it->second;
}

std::string FixtureVision::caption(const ImageInput& img) {
  const Entry& e = lookup(img);
  if (e.caption.empty()) throw Error(ErrorKind::adapter, "fixture image '" + img.image_id + "' has no caption");
  return e.caption;
}

std::vector<OcrToken> FixtureVision::read(const ImageInput& img) { return lookup(img).tokens; }

}  // namespace grg::mmio
