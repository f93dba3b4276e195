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

#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "grg/gateway/commands.hpp"
#include "grg/gateway/config.hpp"
#include "grg/gateway/store.hpp"

namespace httplib {
class Server;
}

namespace grg::gateway {

/// HTTP front end over one store. Requests share an immutable Stores
/// snapshot; reload swaps it atomically, so in-flight requests finish on
/// the snapshot they started with. Adapter calls are serialized.
class Service {
 public:
  /// Never throws on a missing store; health reports it instead.
  explicit Service(EngineConfig config);

  /// Loads the stores again. On failure the previous snapshot stays and
  /// the error is rethrown.
  void reload();

  /// Null until a store has been loaded.
  std::shared_ptr<const Stores> snapshot() const;

  void install_routes(httplib::Server& server);

  const EngineConfig& config() const noexcept { return config_; }

 private:
  std::shared_ptr<const Stores> require_stores() const;
  nlohmann::json health() const;

  EngineConfig config_;
  Adapters adapters_;
  std::mutex adapter_mu_;
  mutable std::mutex store_mu_;
  std::shared_ptr<const Stores> stores_;
  std::string load_error_;
};

/// Blocks serving on host:port until the process is stopped.
void serve(const EngineConfig& config, const std::string& host, int port);

}  // namespace grg::gateway
