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

#include <json.hpp>

namespace grg::adapters {

/// Plain-HTTP endpoint settings shared by every remote adapter.
struct HttpEndpoint {
  std::string base_url;  // "http://host:port"
  std::string path;
  std::string api_key_env;  // name of the variable holding a bearer token; may be empty
  int timeout_seconds = 60;
  int max_attempts = 3;  // total tries for retryable failures
};

/// POSTs `body` as JSON and parses the JSON reply. Connection failures,
/// 429 and 5xx are retried and finally reported as retryable
/// Error(adapter); other statuses and unparsable bodies are non-retryable
/// Error(adapter).
nlohmann::json post_json(const HttpEndpoint& endpoint, const nlohmann::json& body);

struct ChatSettings {
  HttpEndpoint endpoint{"http://127.0.0.1:8000", "/v1/chat/completions", "", 60, 3};
  std::string model;
  double temperature = 0.0;
  int max_tokens = 512;
};

/// OpenAI-compatible chat completions client.
class ChatClient {
 public:
  explicit ChatClient(ChatSettings settings);

  struct Reply {
    std::string content;
    nlohmann::json usage = nlohmann::json::object();
  };

  /// Throws Error(adapter) on transport failures or a reply without
  /// choices[0].message.content.
  Reply complete(const std::string& system, const std::string& user) const;
  const ChatSettings& settings() const noexcept { return settings_; }

 private:
  ChatSettings settings_;
};

}  // namespace grg::adapters
