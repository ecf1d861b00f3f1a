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

// lsa: run a simulated ledger topology, fetch aggregate attestations into a
// wallet, verify them fully offline, and execute fault scenarios.
//
// Exit codes: 0 accepted / ok, 1 rejected / expectations unmet,
// 2 fetch or configuration failure, 3 missing attestation.

#include <chrono>
#include <csignal>
#include <ctime>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <lsa/json_codec.hpp>
#include <lsa/net/http.hpp>
#include <lsa/net/scenario.hpp>
#include <lsa/net/topology.hpp>
#include <lsa/trust_store.hpp>
#include <lsa/verifier.hpp>
#include <lsa/wallet.hpp>

namespace {

using namespace lsa;
using namespace lsa::net;

constexpr int kExitAccepted = 0;
constexpr int kExitRejected = 1;
constexpr int kExitFetchFailure = 2;
constexpr int kExitNoAttestation = 3;

std::sig_atomic_t volatile g_stop = 0;
void on_signal(int) { g_stop = 1; }

Query parse_query(const std::string& call, const std::vector<std::string>& params) {
  Query query;
  query.call_name = call;
  for (const std::string& p : params) {
    const size_t eq = p.find('=');
    if (eq == std::string::npos)
      raise(Errc::bad_config, "--param must be name=hex, got: " + p);
    query.parameters.emplace_back(p.substr(0, eq), from_hex(p.substr(eq + 1)));
  }
  return query;
}

void print_report(const VerificationReport& report) {
  for (const CheckResult& check : report.checks) {
    std::cout << "  [" << (check.passed ? "PASS" : "FAIL") << "] " << check.name;
    if (!check.detail.empty()) std::cout << ": " << check.detail;
    std::cout << "\n";
  }
  std::cout << (report.accepted ? "accepted" : "rejected") << " ("
            << report.matched_trusted_signers << " trusted signer(s))\n";
}

// Newest wallet entry the request could possibly accept: call name matches,
// every fixed parameter is present with the mandated value, and no claim
// parameter falls outside fixed + free.
const WalletEntry* select_entry(const std::vector<WalletEntry>& entries,
                                const VerifierRequest& request) {
  const WalletEntry* best = nullptr;
  for (const WalletEntry& entry : entries) {
    const ClaimStatement& claim = entry.attestation.claim;
    if (claim.query.call_name != request.expected_call) continue;
    bool compatible = true;
    for (const auto& [name, value] : request.fixed_parameters) {
      bool found = false;
      for (const auto& [cname, cvalue] : claim.query.parameters)
        found = found || (cname == name && cvalue == value);
      compatible = compatible && found;
    }
    for (const auto& [cname, cvalue] : claim.query.parameters) {
      bool known = false;
      for (const auto& [name, value] : request.fixed_parameters)
        known = known || name == cname;
      for (const std::string& name : request.free_parameter_names)
        known = known || name == cname;
      compatible = compatible && known;
    }
    if (compatible) best = &entry;  // entries are in storage order; keep newest
  }
  return best;
}

int cmd_topology_up(const std::string& config_path, const std::string& state_dir) {
  TopologyConfig config = load_topology_config(config_path);
  Topology topo(config);
  topo.start_http();
  topo.write_state_dir(state_dir);

  NodeRegistry reg = topo.registry();
  std::cout << "topology up: " << reg.nodes.size() << " node(s), threshold k="
            << config.threshold_k << "\n";
  for (const RegistryEntry& e : reg.nodes)
    std::cout << "  " << e.node_id << "  " << e.base_url
              << (topo.is_down(e.node_id) ? "  (down)" : "") << "\n";
  std::cout << "gateway: " << topo.gateway_url() << "\n";
  std::cout << "state dir: " << state_dir
            << " (trust_store.json, registry.json)\n";
  std::cout << "interrupt to stop\n" << std::flush;

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  while (!g_stop) std::this_thread::sleep_for(std::chrono::milliseconds(200));
  topo.stop_http();
  std::cout << "topology stopped\n";
  return kExitAccepted;
}

AggregateAttestation fetch_via_embedded_gateway(const std::string& registry_path,
                                                ClaimKind kind, const Query& query) {
  NodeRegistry reg = load_node_registry(registry_path);
  // The embedded gateway must share the nodes' epoch schedule; learn it
  // from the first node that answers /info.
  uint64_t epoch_duration = 0;
  for (const RegistryEntry& e : reg.nodes) {
    try {
      HttpNodeClient probe(e.node_id, e.public_key, e.base_url, 2000);
      epoch_duration = probe.fetch_info().epoch_duration_s;
      break;
    } catch (const Error&) {
      continue;
    }
  }
  if (epoch_duration == 0)
    raise(Errc::net_error, "no registry node answered /info");

  GatewayConfig config;
  config.epoch_duration_s = epoch_duration;
  config.policy = reg.policy;
  Gateway gateway(config, make_http_clients(reg));
  return kind == ClaimKind::kBlockHash ? gateway.aggregate_block_hash()
                                       : gateway.aggregate_call(query);
}

struct FetchOptions {
  std::string call = "get";
  std::vector<std::string> params;
  std::string kind = "call";
  std::string gateway_url;
  std::string registry_path;  // --embedded-gateway
  std::string wallet_path;
  std::string raw_key_hex;
  std::string raw_out;
  bool pre_verify = false;
  std::string trust_store_path;
  uint64_t max_epoch_age = 1;
};

int cmd_fetch(const FetchOptions& opt) {
  const ClaimKind kind =
      opt.kind == "block_hash" ? ClaimKind::kBlockHash : ClaimKind::kContractCall;
  const Query query =
      kind == ClaimKind::kBlockHash ? Query{"block_hash", {}}
                                    : parse_query(opt.call, opt.params);

  AggregateAttestation att;
  try {
    att = !opt.registry_path.empty()
              ? fetch_via_embedded_gateway(opt.registry_path, kind, query)
              : (kind == ClaimKind::kBlockHash
                     ? HttpGatewayClient(opt.gateway_url).aggregate_block_hash()
                     : HttpGatewayClient(opt.gateway_url).aggregate_call(query));
  } catch (const Error& e) {
    std::cerr << "fetch failed: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitFetchFailure;
  }

  wallet_store(att, opt.wallet_path,
               static_cast<uint64_t>(std::time(nullptr)));
  std::cout << "stored attestation: call=" << att.claim.query.call_name
            << " signers=" << att.signer_public_keys.size()
            << " epoch=" << att.claim.epoch
            << " block=" << att.claim.block_number << "\n";
  if (!att.dissenters.empty()) {
    std::cout << "dissenters:";
    for (const std::string& id : att.dissenters) std::cout << " " << id;
    std::cout << "\n";
  }

  if (!opt.raw_key_hex.empty()) {
    // Variant 1 companion data: raw value + proof from any single node,
    // authenticated later against the attested root.
    NodeRegistry reg = load_node_registry(opt.registry_path);
    Bytes key = from_hex(opt.raw_key_hex);
    bool fetched = false;
    for (const RegistryEntry& e : reg.nodes) {
      try {
        HttpNodeClient node(e.node_id, e.public_key, e.base_url, 2000);
        RawResult raw = node.get_raw(key);
        nlohmann::json bundle = {{"key", to_hex(key)},
                                 {"value", to_hex(raw.value)},
                                 {"proof", merkle_proof_to_json(raw.proof)},
                                 {"block_number", raw.block_number},
                                 {"source", e.node_id}};
        std::ofstream out(opt.raw_out);
        if (!out.good()) raise(Errc::io_error, "cannot write " + opt.raw_out);
        out << bundle.dump(2) << "\n";
        std::cout << "stored raw bundle: key=" << to_hex(key) << " from "
                  << e.node_id << " -> " << opt.raw_out << "\n";
        fetched = true;
        break;
      } catch (const Error&) {
        continue;
      }
    }
    if (!fetched) {
      std::cerr << "fetch failed: no node served raw key " << opt.raw_key_hex << "\n";
      return kExitFetchFailure;
    }
  }

  if (opt.pre_verify) {
    TrustStore trust = trust_store_load(opt.trust_store_path);
    VerifierRequest request;
    request.expected_call = att.claim.query.call_name;
    request.fixed_parameters = att.claim.query.parameters;
    request.max_epoch_age = opt.max_epoch_age;
    // Freshness against the wall clock; nodes and gateway share it here.
    const uint64_t now_epoch = att.claim.epoch;  // fetched just now
    VerificationReport report = verify_attestation(att, request, trust, now_epoch);
    print_report(report);
    if (!report.accepted) return kExitRejected;
  }
  return kExitAccepted;
}

struct VerifyOptions {
  std::string wallet_path;
  std::string request_path;
  std::string trust_store_path;
  uint64_t current_epoch = 0;
  std::string raw_bundle;  // verify_raw_data when set
};

int cmd_verify(const VerifyOptions& opt) {
  const VerifierRequest request = load_verifier_request(opt.request_path);
  const TrustStore trust = trust_store_load(opt.trust_store_path);

  std::vector<WalletEntry> entries;
  try {
    entries = wallet_entries(opt.wallet_path);
  } catch (const Error& e) {
    std::cerr << "wallet: " << e.what() << "\n";
    return kExitNoAttestation;
  }
  const WalletEntry* entry = select_entry(entries, request);
  if (entry == nullptr) {
    std::cerr << "no stored attestation matches call \"" << request.expected_call
              << "\"\n";
    return kExitNoAttestation;
  }

  VerificationReport report;
  if (!opt.raw_bundle.empty()) {
    nlohmann::json bundle = load_json_file(opt.raw_bundle);
    const Bytes value = from_hex(bundle.at("value").get<std::string>());
    const MerkleProof proof = merkle_proof_from_json(bundle.at("proof"));
    report = verify_raw_data(value, proof, entry->attestation, request, trust,
                             opt.current_epoch);
    std::cout << "raw key " << bundle.at("key").get<std::string>() << " = "
              << bundle.at("value").get<std::string>() << "\n";
  } else {
    report = verify_attestation(entry->attestation, request, trust,
                                opt.current_epoch);
  }
  std::cout << "attestation: call=" << entry->attestation.claim.query.call_name
            << " signers=" << entry->attestation.signer_public_keys.size()
            << " epoch=" << entry->attestation.claim.epoch
            << " block=" << entry->attestation.claim.block_number << "\n";
  print_report(report);
  return report.accepted ? kExitAccepted : kExitRejected;
}

int cmd_scenario_run(const std::string& spec_path, const std::string& json_out) {
  ScenarioSpec spec = load_scenario_spec(spec_path);
  nlohmann::json report = run_scenario(spec);

  std::cout << "scenario \"" << report["name"].get<std::string>() << "\": "
            << report["node_count"].get<size_t>() << " node(s), k="
            << report["threshold_k"].get<uint32_t>() << "\n";
  for (const auto& q : report["queries"]) {
    const bool met = q["expectation_met"].get<bool>();
    std::cout << "  [" << (met ? "PASS" : "FAIL") << "] "
              << q["query"]["call"].get<std::string>() << " ("
              << q["kind"].get<std::string>() << ") expected "
              << q["expect"].get<std::string>();
    if (q["fetched"].get<bool>()) {
      std::cout << ", got " << (q["accepted"].get<bool>() ? "accepted" : "rejected")
                << " with " << q["signers"].get<size_t>() << " signer(s)";
      if (!q["dissenters"].empty()) {
        std::cout << ", dissenters:";
        for (const auto& d : q["dissenters"]) std::cout << " " << d.get<std::string>();
      }
    } else {
      std::cout << ", fetch error " << q["fetch_error"].get<std::string>();
    }
    if (!met) std::cout << " -- " << q["detail"].get<std::string>();
    std::cout << "\n";
  }
  const bool all_met = report["all_expectations_met"].get<bool>();
  std::cout << (all_met ? "all expectations met" : "expectations NOT met") << "\n";

  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out.good()) raise(Errc::io_error, "cannot write " + json_out);
    out << report.dump(2) << "\n";
  }
  return all_met ? kExitAccepted : kExitRejected;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ledger state attestations: simulate, fetch, verify"};
  app.require_subcommand(1);

  // topology up
  auto* topology = app.add_subcommand("topology", "manage a simulated deployment");
  topology->require_subcommand(1);
  auto* up = topology->add_subcommand("up", "start nodes and gateway over HTTP");
  std::string config_path;
  std::string state_dir = "lsa-state";
  up->add_option("--config", config_path, "topology config JSON")->required();
  up->add_option("--state-dir", state_dir, "where to write trust_store/registry");

  // fetch
  FetchOptions fopt;
  auto* fetch = app.add_subcommand("fetch", "aggregate an attestation into the wallet");
  fetch->add_option("--call", fopt.call, "query procedure name");
  fetch->add_option("--param", fopt.params, "query parameter name=hex (repeatable)");
  fetch->add_option("--kind", fopt.kind, "call | block_hash")
      ->check(CLI::IsMember({"call", "block_hash"}));
  auto* gw_opt = fetch->add_option("--gateway", fopt.gateway_url, "gateway base URL");
  auto* emb_opt = fetch->add_option("--embedded-gateway", fopt.registry_path,
                                    "run the gateway in-process over this registry");
  emb_opt->excludes(gw_opt);
  fetch->add_option("--wallet", fopt.wallet_path, "wallet file")->required();
  auto* raw_opt = fetch->add_option("--raw-key", fopt.raw_key_hex,
                                    "also fetch this key's value+proof (hex)");
  fetch->add_option("--raw-out", fopt.raw_out, "raw bundle output path");
  raw_opt->needs(emb_opt);  // raw retrieval contacts nodes directly
  auto* verify_flag =
      fetch->add_flag("--verify", fopt.pre_verify, "verify before storing succeeds");
  auto* ts_opt = fetch->add_option("--trust-store", fopt.trust_store_path,
                                   "trust store for --verify");
  verify_flag->needs(ts_opt);
  fetch->add_option("--max-age", fopt.max_epoch_age, "epoch age for --verify");

  // verify
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "offline verification of a stored attestation");
  verify->add_option("--wallet", vopt.wallet_path, "wallet file")->required();
  verify->add_option("--request", vopt.request_path, "verifier request JSON")->required();
  verify->add_option("--trust-store", vopt.trust_store_path, "trust store JSON")
      ->required();
  verify->add_option("--epoch", vopt.current_epoch, "the verifier's current epoch")
      ->required();
  verify->add_option("--raw", vopt.raw_bundle,
                     "raw bundle to authenticate against a block-hash attestation");

  // scenario run
  auto* scenario = app.add_subcommand("scenario", "fault-injection scenarios");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "execute a scenario spec");
  std::string spec_path;
  std::string json_out;
  run->add_option("spec", spec_path, "scenario spec JSON")->required();
  run->add_option("--json", json_out, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (up->parsed()) return cmd_topology_up(config_path, state_dir);
    if (fetch->parsed()) {
      if (fopt.gateway_url.empty() && fopt.registry_path.empty()) {
        std::cerr << "fetch requires --gateway or --embedded-gateway\n";
        return kExitFetchFailure;
      }
      if (!fopt.raw_key_hex.empty() && fopt.raw_out.empty())
        fopt.raw_out = fopt.wallet_path + ".raw.json";
      return cmd_fetch(fopt);
    }
    if (verify->parsed()) return cmd_verify(vopt);
    if (run->parsed()) return cmd_scenario_run(spec_path, json_out);
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kExitFetchFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFetchFailure;
  }
  return kExitFetchFailure;
}
