/*
   Copyright 2026 The LSA Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// HTTP transport for node services and the gateway. Servers map lsa::Error
// to 422 (503 for gateway quorum failures) with {"error", "detail",
// "local_epoch"?} bodies; clients map those bodies back to the same codes.

#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <lsa/net/gateway.hpp>
#include <lsa/net/node_service.hpp>

namespace httplib {
class Server;
}

namespace lsa::net {

// Request-body shape shared by node and gateway fronts:
// {"call": "<name>", "parameters": [["<name>","<hex>"]...]}.
nlohmann::json query_to_json(const Query& query);
Query query_from_json(const nlohmann::json& j);  // Errc::bad_config

// Static node registry: the gateway's complete view of the network.
struct RegistryEntry {
  std::string node_id;
  std::string base_url;
  Bytes public_key;  // 48 bytes, pinned
};

struct NodeRegistry {
  std::vector<RegistryEntry> nodes;
  GatewayPolicy policy;
};

nlohmann::json node_registry_to_json(const NodeRegistry& registry);
NodeRegistry node_registry_from_json(const nlohmann::json& j);
NodeRegistry load_node_registry(const std::string& path);

// Serves one NodeService. Routes:
//   POST /lsa/v1/attest/call        {"call","parameters","epoch"}
//   POST /lsa/v1/attest/block_hash  {"epoch"}
//   GET  /lsa/v1/raw/<hex key>
//   GET  /lsa/v1/info
class NodeHttpServer {
 public:
  // port 0 binds any free port; start() reports the choice via port().
  NodeHttpServer(std::shared_ptr<NodeService> service, std::string host, int port);
  ~NodeHttpServer();

  void start();  // Errc::net_error when the port cannot be bound
  void stop();
  int port() const { return port_; }
  std::string base_url() const;

 private:
  std::shared_ptr<NodeService> service_;
  std::string host_;
  int port_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

// NodeClient over HTTP. Identity and key come from the registry entry;
// a response whose echoed key differs is rejected by the gateway.
class HttpNodeClient : public NodeClient {
 public:
  HttpNodeClient(std::string node_id, Bytes public_key, std::string base_url,
                 uint64_t timeout_ms = 5000);

  const std::string& node_id() const override { return node_id_; }
  const Bytes& public_key() const override { return public_key_; }
  NodeAttestation attest_call(const Query& query, uint64_t epoch) override;
  NodeAttestation attest_block_hash(uint64_t epoch) override;

  // Single-node retrieval endpoints used by the CLI, not by fan-out.
  RawResult get_raw(const Bytes& key);
  NodeInfo fetch_info();

 private:
  nlohmann::json request_json(const std::string& method, const std::string& path,
                              const nlohmann::json* body);

  std::string node_id_;
  Bytes public_key_;
  std::string base_url_;
  uint64_t timeout_ms_;
};

// One pinned HTTP client per registry entry.
std::vector<std::shared_ptr<NodeClient>> make_http_clients(const NodeRegistry& registry);

// Serves one Gateway. Routes:
//   POST /lsa/v1/aggregate/call        {"call","parameters"}
//   POST /lsa/v1/aggregate/block_hash  {}
//   GET  /lsa/v1/info
// insufficient_responses and epoch_desync surface as HTTP 503.
class GatewayHttpServer {
 public:
  GatewayHttpServer(std::shared_ptr<Gateway> gateway, std::string host, int port);
  ~GatewayHttpServer();

  void start();
  void stop();
  int port() const { return port_; }
  std::string base_url() const;

 private:
  std::shared_ptr<Gateway> gateway_;
  std::string host_;
  int port_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

// Client side of the gateway front, used by the CLI fetch path.
class HttpGatewayClient {
 public:
  explicit HttpGatewayClient(std::string base_url, uint64_t timeout_ms = 15000);

  AggregateAttestation aggregate_call(const Query& query);
  AggregateAttestation aggregate_block_hash();

 private:
  std::string base_url_;
  uint64_t timeout_ms_;
};

}  // namespace lsa::net
