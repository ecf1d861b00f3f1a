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

#include <lsa/net/http.hpp>

#include <chrono>
#include <set>

#include <httplib.h>

#include <lsa/json_codec.hpp>

namespace lsa::net {

nlohmann::json query_to_json(const Query& query) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& [name, value] : query.parameters)
    params.push_back({name, to_hex(value)});
  return {{"call", query.call_name}, {"parameters", params}};
}

Query query_from_json(const nlohmann::json& j) {
  try {
    Query q;
    q.call_name = j.at("call").get<std::string>();
    for (const auto& p : j.value("parameters", nlohmann::json::array())) {
      if (!p.is_array() || p.size() != 2)
        raise(Errc::bad_config, "parameter entries must be [name, hex] pairs");
      q.parameters.emplace_back(p[0].get<std::string>(),
                                from_hex(p[1].get<std::string>()));
    }
    return q;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("query: ") + e.what());
  }
}

nlohmann::json node_registry_to_json(const NodeRegistry& registry) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const RegistryEntry& e : registry.nodes) {
    nodes.push_back({{"node_id", e.node_id},
                     {"base_url", e.base_url},
                     {"public_key", to_hex(e.public_key)}});
  }
  return {{"nodes", nodes},
          {"policy",
           {{"per_node_timeout_ms", registry.policy.per_node_timeout_ms},
            {"min_responses", registry.policy.min_responses}}}};
}

NodeRegistry node_registry_from_json(const nlohmann::json& j) {
  try {
    NodeRegistry reg;
    for (const auto& n : j.at("nodes")) {
      RegistryEntry e;
      e.node_id = n.at("node_id").get<std::string>();
      e.base_url = n.at("base_url").get<std::string>();
      e.public_key = from_hex(n.at("public_key").get<std::string>());
      if (e.public_key.size() != 48)
        raise(Errc::bad_config, "registry public keys must be 48 bytes");
      reg.nodes.push_back(std::move(e));
    }
    if (reg.nodes.empty()) raise(Errc::bad_config, "registry has no nodes");
    std::set<std::string> ids;
    std::set<Bytes> keys;
    for (const RegistryEntry& e : reg.nodes) {
      if (!ids.insert(e.node_id).second)
        raise(Errc::bad_config, "duplicate node_id: " + e.node_id);
      if (!keys.insert(e.public_key).second)
        raise(Errc::bad_config, "duplicate public key for node " + e.node_id);
    }
    if (j.contains("policy")) {
      const auto& p = j.at("policy");
      reg.policy.per_node_timeout_ms =
          p.value("per_node_timeout_ms", reg.policy.per_node_timeout_ms);
      reg.policy.min_responses = p.value("min_responses", reg.policy.min_responses);
    }
    return reg;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("registry: ") + e.what());
  }
}

NodeRegistry load_node_registry(const std::string& path) {
  return node_registry_from_json(load_json_file(path));
}

namespace {

// Every handler body runs under this guard so protocol errors become
// structured JSON instead of httplib's opaque 500.
template <typename F>
void guarded(httplib::Response& res, const NodeService* svc, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    nlohmann::json err = {{"error", errc_name(e.code())}, {"detail", e.what()}};
    if (e.code() == Errc::epoch_rejected && svc) err["local_epoch"] = svc->local_epoch();
    int status = 422;
    if (e.code() == Errc::insufficient_responses || e.code() == Errc::epoch_desync)
      status = 503;
    res.status = status;
    res.set_content(err.dump(), "application/json");
  } catch (const std::exception& e) {
    nlohmann::json err = {{"error", errc_name(Errc::net_error)}, {"detail", e.what()}};
    res.status = 500;
    res.set_content(err.dump(), "application/json");
  }
}

void reply_json(httplib::Response& res, const nlohmann::json& j) {
  res.status = 200;
  res.set_content(j.dump(), "application/json");
}

nlohmann::json parse_body(const httplib::Request& req) {
  try {
    return nlohmann::json::parse(req.body);
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("request body: ") + e.what());
  }
}

void start_server(httplib::Server& server, const std::string& host, int& port,
                  std::thread& thread) {
  if (port == 0) {
    port = server.bind_to_any_port(host);
    if (port < 0) raise(Errc::net_error, "cannot bind any port on " + host);
  } else if (!server.bind_to_port(host, port)) {
    raise(Errc::net_error, "cannot bind " + host + ":" + std::to_string(port));
  }
  thread = std::thread([&server] { server.listen_after_bind(); });
  server.wait_until_ready();
}

void stop_server(httplib::Server& server, std::thread& thread) {
  if (!thread.joinable()) return;
  server.stop();
  thread.join();
}

}  // namespace

NodeHttpServer::NodeHttpServer(std::shared_ptr<NodeService> service, std::string host,
                               int port)
    : service_(std::move(service)),
      host_(std::move(host)),
      port_(port),
      server_(std::make_unique<httplib::Server>()) {
  auto svc = service_;

  server_->Post("/lsa/v1/attest/call",
                [svc](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, svc.get(), [&] {
                    nlohmann::json body = parse_body(req);
                    Query query = query_from_json(body);
                    uint64_t epoch = body.at("epoch").get<uint64_t>();
                    reply_json(res,
                               node_attestation_to_json(svc->attest_call(query, epoch)));
                  });
                });

  server_->Post("/lsa/v1/attest/block_hash",
                [svc](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, svc.get(), [&] {
                    nlohmann::json body = parse_body(req);
                    uint64_t epoch = body.at("epoch").get<uint64_t>();
                    reply_json(res,
                               node_attestation_to_json(svc->attest_block_hash(epoch)));
                  });
                });

  server_->Get("/lsa/v1/raw/([0-9a-fA-F]*)",
               [svc](const httplib::Request& req, httplib::Response& res) {
                 guarded(res, svc.get(), [&] {
                   RawResult raw = svc->get_raw(from_hex(req.matches[1].str()));
                   reply_json(res, {{"value", to_hex(raw.value)},
                                    {"proof", merkle_proof_to_json(raw.proof)},
                                    {"block_number", raw.block_number}});
                 });
               });

  server_->Get("/lsa/v1/info",
               [svc](const httplib::Request&, httplib::Response& res) {
                 guarded(res, svc.get(), [&] {
                   NodeInfo info = svc->info();
                   reply_json(res, {{"node_id", info.node_id},
                                    {"public_key", to_hex(info.public_key)},
                                    {"proof_of_possession", to_hex(info.proof_of_possession)},
                                    {"epoch_duration", info.epoch_duration_s},
                                    {"block_number", info.block_number}});
                 });
               });
}

NodeHttpServer::~NodeHttpServer() { stop(); }

void NodeHttpServer::start() { start_server(*server_, host_, port_, thread_); }

void NodeHttpServer::stop() { stop_server(*server_, thread_); }

std::string NodeHttpServer::base_url() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

HttpNodeClient::HttpNodeClient(std::string node_id, Bytes public_key,
                               std::string base_url, uint64_t timeout_ms)
    : node_id_(std::move(node_id)),
      public_key_(std::move(public_key)),
      base_url_(std::move(base_url)),
      timeout_ms_(timeout_ms) {}

namespace {

// Decodes one HTTP result: 200 bodies parse as JSON, error bodies map back
// to the lsa::Error the server raised, transport failures become net_error.
nlohmann::json decode_result(const std::string& peer, const httplib::Result& result) {
  if (!result)
    raise(Errc::net_error, peer + ": " + httplib::to_string(result.error()));
  nlohmann::json body;
  try {
    body = nlohmann::json::parse(result->body);
  } catch (const std::exception&) {
    raise(Errc::net_error,
          peer + ": malformed response, HTTP " + std::to_string(result->status));
  }
  if (result->status == 200) return body;
  std::string name = body.value("error", std::string{});
  std::string detail = body.value("detail", std::string{});
  if (name.empty())
    raise(Errc::net_error, peer + ": HTTP " + std::to_string(result->status));
  if (body.contains("local_epoch"))
    detail += " (local_epoch " + std::to_string(body["local_epoch"].get<uint64_t>()) + ")";
  raise(errc_from_name(name), peer + ": " + detail);
}

nlohmann::json http_json(const std::string& base_url, uint64_t timeout_ms,
                         const std::string& peer, const std::string& method,
                         const std::string& path, const nlohmann::json* body) {
  // One client per request: httplib clients are not safe under the
  // concurrent fan-out, and desk-scale traffic does not need keep-alive.
  httplib::Client client(base_url);
  const auto timeout = std::chrono::milliseconds(timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Result result = method == "POST"
                               ? client.Post(path, body->dump(), "application/json")
                               : client.Get(path);
  return decode_result(peer, result);
}

}  // namespace

nlohmann::json HttpNodeClient::request_json(const std::string& method,
                                            const std::string& path,
                                            const nlohmann::json* body) {
  return http_json(base_url_, timeout_ms_, "node " + node_id_, method, path, body);
}

NodeAttestation HttpNodeClient::attest_call(const Query& query, uint64_t epoch) {
  nlohmann::json body = query_to_json(query);
  body["epoch"] = epoch;
  return node_attestation_from_json(request_json("POST", "/lsa/v1/attest/call", &body));
}

NodeAttestation HttpNodeClient::attest_block_hash(uint64_t epoch) {
  nlohmann::json body = {{"epoch", epoch}};
  return node_attestation_from_json(
      request_json("POST", "/lsa/v1/attest/block_hash", &body));
}

RawResult HttpNodeClient::get_raw(const Bytes& key) {
  nlohmann::json j = request_json("GET", "/lsa/v1/raw/" + to_hex(key), nullptr);
  try {
    RawResult raw;
    raw.value = from_hex(j.at("value").get<std::string>());
    raw.proof = merkle_proof_from_json(j.at("proof"));
    raw.block_number = j.at("block_number").get<uint64_t>();
    return raw;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::net_error, "node " + node_id_ + ": raw response: " + e.what());
  }
}

NodeInfo HttpNodeClient::fetch_info() {
  nlohmann::json j = request_json("GET", "/lsa/v1/info", nullptr);
  try {
    NodeInfo info;
    info.node_id = j.at("node_id").get<std::string>();
    info.public_key = from_hex(j.at("public_key").get<std::string>());
    info.proof_of_possession = from_hex(j.at("proof_of_possession").get<std::string>());
    info.epoch_duration_s = j.at("epoch_duration").get<uint64_t>();
    info.block_number = j.at("block_number").get<uint64_t>();
    return info;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::net_error, "node " + node_id_ + ": info response: " + e.what());
  }
}

std::vector<std::shared_ptr<NodeClient>> make_http_clients(const NodeRegistry& registry) {
  std::vector<std::shared_ptr<NodeClient>> clients;
  for (const RegistryEntry& e : registry.nodes) {
    // Client-side timeout sits above the gateway deadline so the gateway,
    // not the socket layer, decides when a node is late.
    clients.push_back(std::make_shared<HttpNodeClient>(
        e.node_id, e.public_key, e.base_url, registry.policy.per_node_timeout_ms * 2));
  }
  return clients;
}

GatewayHttpServer::GatewayHttpServer(std::shared_ptr<Gateway> gateway, std::string host,
                                     int port)
    : gateway_(std::move(gateway)),
      host_(std::move(host)),
      port_(port),
      server_(std::make_unique<httplib::Server>()) {
  auto gw = gateway_;

  server_->Post("/lsa/v1/aggregate/call",
                [gw](const httplib::Request& req, httplib::Response& res) {
                  guarded(res, nullptr, [&] {
                    Query query = query_from_json(parse_body(req));
                    reply_json(res,
                               aggregate_attestation_to_json(gw->aggregate_call(query)));
                  });
                });

  server_->Post("/lsa/v1/aggregate/block_hash",
                [gw](const httplib::Request&, httplib::Response& res) {
                  guarded(res, nullptr, [&] {
                    reply_json(res,
                               aggregate_attestation_to_json(gw->aggregate_block_hash()));
                  });
                });

  server_->Get("/lsa/v1/info",
               [gw](const httplib::Request&, httplib::Response& res) {
                 guarded(res, nullptr, [&] {
                   reply_json(res, {{"current_epoch", gw->current_epoch()},
                                    {"node_count", gw->node_count()},
                                    {"min_responses", gw->min_responses()}});
                 });
               });
}

GatewayHttpServer::~GatewayHttpServer() { stop(); }

void GatewayHttpServer::start() { start_server(*server_, host_, port_, thread_); }

void GatewayHttpServer::stop() { stop_server(*server_, thread_); }

std::string GatewayHttpServer::base_url() const {
  return "http://" + host_ + ":" + std::to_string(port_);
}

HttpGatewayClient::HttpGatewayClient(std::string base_url, uint64_t timeout_ms)
    : base_url_(std::move(base_url)), timeout_ms_(timeout_ms) {}

AggregateAttestation HttpGatewayClient::aggregate_call(const Query& query) {
  nlohmann::json body = query_to_json(query);
  return aggregate_attestation_from_json(http_json(
      base_url_, timeout_ms_, "gateway", "POST", "/lsa/v1/aggregate/call", &body));
}

AggregateAttestation HttpGatewayClient::aggregate_block_hash() {
  nlohmann::json body = nlohmann::json::object();
  return aggregate_attestation_from_json(http_json(
      base_url_, timeout_ms_, "gateway", "POST", "/lsa/v1/aggregate/block_hash", &body));
}

}  // namespace lsa::net
