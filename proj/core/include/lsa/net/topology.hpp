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

// Simulated multi-node deployment: n node services with deterministic
// seeded keys over replicated ledgers, one gateway, optional fault
// injection per node, optional HTTP serving.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include <lsa/net/gateway.hpp>
#include <lsa/net/http.hpp>
#include <lsa/net/node_service.hpp>
#include <lsa/trust_store.hpp>

namespace lsa::net {

struct FaultSpec {
  enum class Kind { kNone, kDown, kByzantineData, kClockSkew, kSlow };
  Kind kind = Kind::kNone;
  int64_t skew_s = 0;     // kClockSkew: added to the node clock
  uint64_t delay_ms = 0;  // kSlow: added to every node response
};

struct TopologyConfig {
  size_t node_count = 5;
  uint32_t threshold_k = 3;
  uint64_t epoch_duration_s = 60;
  uint64_t epoch_tolerance = 1;
  // Node i's key derives from sha256(master_seed ":" node_id); same seed,
  // same keys, across restarts.
  std::string master_seed = "lsa-dev-topology";
  std::vector<Writes> blocks;           // replayed into every replica
  std::map<std::string, FaultSpec> faults;
  GatewayPolicy policy;
  // Fixed logical time (unix seconds) for deterministic epochs; negative
  // selects the system clock.
  int64_t fixed_time_s = -1;
  std::string host = "127.0.0.1";
  int node_base_port = 0;  // node i listens on base+i; 0 picks free ports
  int gateway_port = 0;
};

// Config file shape:
// {"node_count", "threshold_k", "epoch_duration", "epoch_tolerance",
//  "master_seed", "block_stream": "<path>" | "blocks": [[[hex,hex]...]...],
//  "policy": {"per_node_timeout_ms", "min_responses"},
//  "faults": [{"kind": "DOWN"|"BYZANTINE_DATA"|"CLOCK_SKEW"|"SLOW",
//              "node_id", "seconds"?, "ms"?}...],
//  "host", "node_base_port", "gateway_port", "fixed_time"?}
// block_stream paths resolve relative to base_dir.
TopologyConfig topology_config_from_json(const nlohmann::json& j,
                                         const std::string& base_dir);
TopologyConfig load_topology_config(const std::string& path);

class Topology {
 public:
  explicit Topology(TopologyConfig config);
  ~Topology();

  const TopologyConfig& config() const { return config_; }
  const std::vector<std::shared_ptr<NodeService>>& services() const {
    return services_;
  }
  bool is_down(const std::string& node_id) const { return down_.count(node_id) > 0; }

  // In-process gateway over all nodes; down nodes refuse at the transport.
  Gateway& gateway() { return *gateway_; }

  // Trust anchor covering every topology key, threshold from config.
  TrustStore trust_store() const;

  // Advances every replica in lockstep.
  void apply_block(const Writes& writes);

  // HTTP deployment: one server per non-down node plus a gateway whose
  // clients go through HTTP with registry-pinned keys.
  void start_http();
  void stop_http();
  std::string gateway_url() const;  // requires start_http
  NodeRegistry registry() const;    // base_urls filled once HTTP is up

  // Writes trust_store.json and registry.json for clients and verifiers.
  void write_state_dir(const std::string& dir) const;

 private:
  TopologyConfig config_;
  std::vector<std::shared_ptr<NodeService>> services_;
  std::set<std::string> down_;
  std::shared_ptr<Gateway> gateway_;

  std::vector<std::unique_ptr<NodeHttpServer>> node_servers_;
  std::vector<std::string> node_urls_;
  std::shared_ptr<Gateway> http_gateway_;
  std::unique_ptr<GatewayHttpServer> gateway_server_;
};

}  // namespace lsa::net
