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

#include <string>
#include <vector>

#include <json.hpp>

#include "grg/adapters/chat_client.hpp"
#include "grg/mmio/vision.hpp"

namespace grg::adapters {

/// Request body shared by both services:
///   {"image_id", "format", "locator"} or {"image_id", "format", "bytes_base64"}
nlohmann::json image_request(const mmio::ImageInput& img);

/// Reply {"caption": "..."}.
class HttpCaptioner final : public mmio::CaptionerClient {
 public:
  explicit HttpCaptioner(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {}
  std::string name() const override { return "http-captioner"; }
  std::string caption(const mmio::ImageInput& img) override;

 private:
  HttpEndpoint endpoint_;
};

/// Reply {"tokens": [{"text", "confidence", "bbox": [x, y, w, h]}]}.
class HttpOcr final : public mmio::OcrClient {
 public:
  explicit HttpOcr(HttpEndpoint endpoint) : endpoint_(std::move(endpoint)) {}
  std::string name() const override { return "http-ocr"; }
  std::vector<mmio::OcrToken> read(const mmio::ImageInput& img) override;

 private:
  HttpEndpoint endpoint_;
};

}  // namespace grg::adapters
