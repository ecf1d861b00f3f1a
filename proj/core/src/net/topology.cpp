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

#include <lsa/net/topology.hpp>

#include <filesystem>
#include <fstream>

#include <lsa/crypto/sha256.hpp>
#include <lsa/json_codec.hpp>

namespace lsa::net {

namespace {

std::string node_name(size_t index) { return "node-" + std::to_string(index + 1); }

FaultSpec fault_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  FaultSpec f;
  if (kind == "DOWN") {
    f.kind = FaultSpec::Kind::kDown;
  } else if (kind == "BYZANTINE_DATA") {
    f.kind = FaultSpec::Kind::kByzantineData;
  } else if (kind == "CLOCK_SKEW") {
    f.kind = FaultSpec::Kind::kClockSkew;
    f.skew_s = j.at("seconds").get<int64_t>();
  } else if (kind == "SLOW") {
    f.kind = FaultSpec::Kind::kSlow;
    f.delay_ms = j.at("ms").get<uint64_t>();
  } else {
    raise(Errc::bad_config, "unknown fault kind: " + kind);
  }
  return f;
}

}  // namespace

TopologyConfig topology_config_from_json(const nlohmann::json& j,
                                         const std::string& base_dir) {
  try {
    TopologyConfig c;
    c.node_count = j.value("node_count", c.node_count);
    c.threshold_k = j.value("threshold_k", c.threshold_k);
    c.epoch_duration_s = j.value("epoch_duration", c.epoch_duration_s);
    c.epoch_tolerance = j.value("epoch_tolerance", c.epoch_tolerance);
    c.master_seed = j.value("master_seed", c.master_seed);
    c.host = j.value("host", c.host);
    c.node_base_port = j.value("node_base_port", c.node_base_port);
    c.gateway_port = j.value("gateway_port", c.gateway_port);
    c.fixed_time_s = j.value("fixed_time", c.fixed_time_s);
    if (j.contains("policy")) {
      const auto& p = j.at("policy");
      c.policy.per_node_timeout_ms =
          p.value("per_node_timeout_ms", c.policy.per_node_timeout_ms);
      c.policy.min_responses = p.value("min_responses", c.policy.min_responses);
    }
    if (j.contains("blocks")) {
      for (const auto& block : j.at("blocks")) {
        Writes writes;
        for (const auto& w : block) {
          if (!w.is_array() || w.size() != 2)
            raise(Errc::bad_config, "block writes must be [key_hex, value_hex] pairs");
          writes.emplace_back(from_hex(w[0].get<std::string>()),
                              from_hex(w[1].get<std::string>()));
        }
        c.blocks.push_back(std::move(writes));
      }
    } else if (j.contains("block_stream")) {
      std::filesystem::path p = j.at("block_stream").get<std::string>();
      if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
      c.blocks = load_block_stream(p.string());
    }
    for (const auto& f : j.value("faults", nlohmann::json::array())) {
      const std::string id = f.at("node_id").get<std::string>();
      if (!c.faults.emplace(id, fault_from_json(f)).second)
        raise(Errc::bad_config, "multiple faults for " + id);
    }
    if (c.node_count == 0) raise(Errc::bad_config, "node_count must be positive");
    for (const auto& [id, fault] : c.faults) {
      bool known = false;
      for (size_t i = 0; i < c.node_count; ++i) known = known || node_name(i) == id;
      if (!known) raise(Errc::bad_config, "fault targets unknown node: " + id);
    }
    return c;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("topology config: ") + e.what());
  }
}

TopologyConfig load_topology_config(const std::string& path) {
  return topology_config_from_json(
      load_json_file(path), std::filesystem::path(path).parent_path().string());
}

Topology::Topology(TopologyConfig config) : config_(std::move(config)) {
  if (config_.node_count == 0) raise(Errc::bad_config, "node_count must be positive");
  if (config_.threshold_k < 1 || config_.threshold_k > config_.node_count)
    raise(Errc::bad_config, "threshold_k must be in [1, node_count]");

  const Clock base_clock = config_.fixed_time_s >= 0
                               ? Clock([t = config_.fixed_time_s] { return t; })
                               : system_clock();

  LedgerState state = LedgerState::genesis();
  for (const Writes& writes : config_.blocks) state = lsa::apply_block(state, writes);

  std::vector<std::shared_ptr<NodeClient>> clients;
  for (size_t i = 0; i < config_.node_count; ++i) {
    NodeConfig nc;
    nc.node_id = node_name(i);
    const crypto::Digest seed =
        crypto::sha256(to_bytes(config_.master_seed + ":" + nc.node_id));
    nc.key_pair = mcrypto::keygen(Bytes(seed.begin(), seed.end()));
    nc.epoch_duration_s = config_.epoch_duration_s;
    nc.epoch_tolerance = config_.epoch_tolerance;

    bool down = false;
    auto it = config_.faults.find(nc.node_id);
    if (it != config_.faults.end()) {
      switch (it->second.kind) {
        case FaultSpec::Kind::kNone:
          break;
        case FaultSpec::Kind::kDown:
          down = true;
          break;
        case FaultSpec::Kind::kByzantineData:
          nc.byzantine_data = true;
          break;
        case FaultSpec::Kind::kClockSkew:
          nc.clock_offset_s = it->second.skew_s;
          break;
        case FaultSpec::Kind::kSlow:
          nc.response_delay_ms = it->second.delay_ms;
          break;
      }
    }
    if (down) down_.insert(nc.node_id);

    auto service = std::make_shared<NodeService>(nc, state,
                                                 QueryRegistry::with_builtins(), base_clock);
    clients.push_back(std::make_shared<InProcessNodeClient>(service, down));
    services_.push_back(std::move(service));
  }

  GatewayConfig gc;
  gc.epoch_duration_s = config_.epoch_duration_s;
  gc.policy = config_.policy;
  gateway_ = std::make_shared<Gateway>(gc, std::move(clients), base_clock);
}

Topology::~Topology() { stop_http(); }

TrustStore Topology::trust_store() const {
  TrustStore ts;
  ts.threshold_k = config_.threshold_k;
  for (const auto& service : services_) {
    NodeInfo info = service->info();
    ts.entries.push_back({info.node_id, info.public_key, info.proof_of_possession});
  }
  return ts;
}

void Topology::apply_block(const Writes& writes) {
  for (const auto& service : services_) service->apply_block(writes);
}

void Topology::start_http() {
  if (gateway_server_) return;
  node_urls_.assign(services_.size(), std::string{});
  for (size_t i = 0; i < services_.size(); ++i) {
    // Down nodes get no server: their port refuses connections, which is
    // exactly what "down" means to an HTTP client.
    const int port = config_.node_base_port == 0
                         ? 0
                         : config_.node_base_port + static_cast<int>(i);
    if (down_.count(services_[i]->node_id())) {
      node_urls_[i] = "http://" + config_.host + ":" +
                      std::to_string(port == 0 ? 1 : port);
      node_servers_.push_back(nullptr);
      continue;
    }
    auto server = std::make_unique<NodeHttpServer>(services_[i], config_.host, port);
    server->start();
    node_urls_[i] = server->base_url();
    node_servers_.push_back(std::move(server));
  }

  NodeRegistry reg = registry();
  const Clock base_clock = config_.fixed_time_s >= 0
                               ? Clock([t = config_.fixed_time_s] { return t; })
                               : system_clock();
  GatewayConfig gc;
  gc.epoch_duration_s = config_.epoch_duration_s;
  gc.policy = config_.policy;
  http_gateway_ = std::make_shared<Gateway>(gc, make_http_clients(reg), base_clock);
  gateway_server_ = std::make_unique<GatewayHttpServer>(http_gateway_, config_.host,
                                                        config_.gateway_port);
  gateway_server_->start();
}

void Topology::stop_http() {
  if (gateway_server_) gateway_server_->stop();
  gateway_server_.reset();
  http_gateway_.reset();
  for (auto& server : node_servers_) {
    if (server) server->stop();
  }
  node_servers_.clear();
  node_urls_.clear();
}

std::string Topology::gateway_url() const {
  if (!gateway_server_) raise(Errc::bad_config, "topology HTTP is not running");
  return gateway_server_->base_url();
}

NodeRegistry Topology::registry() const {
  NodeRegistry reg;
  reg.policy = config_.policy;
  for (size_t i = 0; i < services_.size(); ++i) {
    RegistryEntry e;
    e.node_id = services_[i]->node_id();
    e.public_key = services_[i]->public_key();
    e.base_url = i < node_urls_.size() ? node_urls_[i] : std::string{};
    reg.nodes.push_back(std::move(e));
  }
  return reg;
}

void Topology::write_state_dir(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  const auto ts_path = std::filesystem::path(dir) / "trust_store.json";
  trust_store_save(trust_store(), ts_path.string());
  const auto reg_path = std::filesystem::path(dir) / "registry.json";
  std::ofstream out(reg_path);
  if (!out.good()) raise(Errc::io_error, "cannot write " + reg_path.string());
  out << node_registry_to_json(registry()).dump(2) << "\n";
}

}  // namespace lsa::net
