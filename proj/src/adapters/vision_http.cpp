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

#include "grg/adapters/vision_http.hpp"

#include <httplib.h>

#include "grg/common/error.hpp"

namespace grg::adapters {

using nlohmann::json;

json image_request(const mmio::ImageInput& img) {
  json body = {{"image_id", img.image_id}, {"format", img.format}};
  if (!img.locator.empty()) {
    body["locator"] = img.locator;
  } else {
    body["bytes_base64"] = httplib::detail::base64_encode(img.bytes);
  }
  return body;
}

std::string HttpCaptioner::caption(const mmio::ImageInput& img) {
  const json reply = post_json(endpoint_, image_request(img));
  if (!reply.contains("caption") || !reply["caption"].is_string()) {
    throw Error(ErrorKind::adapter, "captioner reply lacks a caption string");
  }
  return reply["caption"].get<std::string>();
}

std::vector<mmio::OcrToken> HttpOcr::read(const mmio::ImageInput& img) {
  const json reply = post_json(endpoint_, image_request(img));
  std::vector<mmio::OcrToken> out;
  try {
    for (const auto& t : reply.at("tokens")) {
      mmio::OcrToken tok;
      tok.text = t.at("text").get<std::string>();
      tok.confidence = t.at("confidence").get<double>();
      const auto& b = t.at("bbox");
      if (b.size() != 4) throw Error(ErrorKind::adapter, "ocr bbox must have four integers");
      tok.bbox = {b[0].get<std::uint32_t>(), b[1].get<std::uint32_t>(), b[2].get<std::uint32_t>(),
                  b[3].get<std::uint32_t>()};
      out.push_back(std::move(tok));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::adapter, std::string("malformed ocr reply: ") + e.what());
  }
  return out;
}

}  // namespace grg::adapters
