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

#include "grg/adapters/chat_client.hpp"

#include <algorithm>
#include <cstdlib>

#include <httplib.h>

#include "grg/common/error.hpp"

namespace grg::adapters {

using nlohmann::json;

json post_json(const HttpEndpoint& endpoint, const json& body) {
  if (!endpoint.base_url.starts_with("http://")) {
    throw Error(ErrorKind::config, "adapter endpoint must be a plain http:// URL, got '" + endpoint.base_url + "'");
  }
  httplib::Client client(endpoint.base_url);
  client.set_connection_timeout(endpoint.timeout_seconds, 0);
  client.set_read_timeout(endpoint.timeout_seconds, 0);
  client.set_write_timeout(endpoint.timeout_seconds, 0);
  httplib::Headers headers;
  if (!endpoint.api_key_env.empty()) {
    if (const char* key = std::getenv(endpoint.api_key_env.c_str()); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }
  const std::string payload = body.dump(-1, ' ', false, json::error_handler_t::replace);
  const std::string where = endpoint.base_url + endpoint.path;
  const int attempts = std::max(1, endpoint.max_attempts);
  std::string last_error;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    auto res = client.Post(endpoint.path, headers, payload, "application/json");
    if (!res) {
      last_error = where + ": " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = where + ": HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw Error(ErrorKind::adapter, where + ": HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
    }
    try {
      return json::parse(res->body);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::adapter, where + ": reply is not JSON: " + e.what());
    }
  }
  throw Error(ErrorKind::adapter, last_error + " (after " + std::to_string(attempts) + " attempt(s))", true);
}

ChatClient::ChatClient(ChatSettings settings) : settings_(std::move(settings)) {
  if (settings_.model.empty()) throw Error(ErrorKind::config, "chat adapter needs a model name");
}

ChatClient::Reply ChatClient::complete(const std::string& system, const std::string& user) const {
  json body = {{"model", settings_.model},
               {"temperature", settings_.temperature},
               {"max_tokens", settings_.max_tokens},
               {"messages", json::array({{{"role", "system"}, {"content", system}}, {{"role", "user"}, {"content", user}}})}};
  const json reply = post_json(settings_.endpoint, body);
  try {
    Reply out;
    out.content = reply.at("choices").at(0).at("message").at("content").get<std::string>();
    if (reply.contains("usage") && reply["usage"].is_object()) out.usage = reply["usage"];
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::adapter, "chat reply lacks choices[0].message.content: " + std::string(e.what()));
  }
}

}  // namespace grg::adapters
