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

#include <lsa/net/scenario.hpp>

#include <filesystem>

#include <lsa/json_codec.hpp>
#include <lsa/verifier.hpp>

namespace lsa::net {

namespace {

const char* kExpectValues[] = {"accepted", "rejected", "insufficient_responses",
                               "epoch_desync"};

ScenarioQuery scenario_query_from_json(const nlohmann::json& j) {
  ScenarioQuery q;
  q.query = query_from_json(j);
  const std::string kind = j.value("kind", std::string("call"));
  if (kind == "call") {
    q.kind = ClaimKind::kContractCall;
  } else if (kind == "block_hash") {
    q.kind = ClaimKind::kBlockHash;
  } else {
    raise(Errc::bad_config, "query kind must be \"call\" or \"block_hash\"");
  }
  q.expect = j.value("expect", q.expect);
  bool known = false;
  for (const char* v : kExpectValues) known = known || q.expect == v;
  if (!known) raise(Errc::bad_config, "unknown expectation: " + q.expect);
  if (j.contains("expect_signers"))
    q.expect_signers = j.at("expect_signers").get<size_t>();
  if (j.contains("expect_dissenters"))
    q.expect_dissenters = j.at("expect_dissenters").get<std::vector<std::string>>();
  q.policy = j.value("policy", q.policy);
  if (j.contains("raw_key")) {
    q.raw_key = from_hex(j.at("raw_key").get<std::string>());
    if (q.kind != ClaimKind::kBlockHash)
      raise(Errc::bad_config, "raw_key requires kind \"block_hash\"");
    if (q.raw_key.empty()) raise(Errc::bad_config, "raw_key must not be empty");
  }
  return q;
}

}  // namespace

ScenarioSpec scenario_spec_from_json(const nlohmann::json& j,
                                     const std::string& base_dir) {
  try {
    ScenarioSpec spec;
    spec.name = j.value("name", std::string("scenario"));
    spec.topology = topology_config_from_json(j, base_dir);
    if (j.contains("verifier_params")) {
      const auto& vp = j.at("verifier_params");
      spec.topology.threshold_k = vp.value("k", spec.topology.threshold_k);
      spec.max_epoch_age = vp.value("max_epoch_age", spec.max_epoch_age);
    }
    // Scenarios must not depend on wall time; pin mid-epoch so skews map to
    // whole epochs without boundary effects.
    if (spec.topology.fixed_time_s < 0) {
      spec.topology.fixed_time_s = static_cast<int64_t>(
          1000 * spec.topology.epoch_duration_s + spec.topology.epoch_duration_s / 2);
    }
    for (const auto& q : j.value("queries", nlohmann::json::array()))
      spec.queries.push_back(scenario_query_from_json(q));
    if (spec.queries.empty()) raise(Errc::bad_config, "scenario has no queries");
    return spec;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::bad_config, std::string("scenario spec: ") + e.what());
  }
}

ScenarioSpec load_scenario_spec(const std::string& path) {
  return scenario_spec_from_json(
      load_json_file(path), std::filesystem::path(path).parent_path().string());
}

nlohmann::json run_scenario(const ScenarioSpec& spec) {
  Topology topo(spec.topology);
  const TrustStore trust = topo.trust_store();
  const uint64_t current_epoch = topo.gateway().current_epoch();

  nlohmann::json queries = nlohmann::json::array();
  bool all_met = true;

  for (const ScenarioQuery& sq : spec.queries) {
    nlohmann::json entry;
    entry["query"] = query_to_json(sq.query);
    entry["kind"] = sq.kind == ClaimKind::kBlockHash ? "block_hash" : "call";
    entry["expect"] = sq.expect;

    bool fetched = false;
    std::string fetch_error;
    AggregateAttestation att;
    try {
      att = sq.kind == ClaimKind::kBlockHash
                ? topo.gateway().aggregate_block_hash()
                : topo.gateway().aggregate_call(sq.query);
      fetched = true;
    } catch (const Error& e) {
      fetch_error = errc_name(e.code());
      entry["fetch_error"] = fetch_error;
      entry["fetch_detail"] = e.what();
    }
    entry["fetched"] = fetched;

    bool accepted = false;
    std::string detail;
    if (fetched) {
      entry["signers"] = att.signer_public_keys.size();
      entry["dissenters"] = att.dissenters;

      VerifierRequest request;
      request.expected_call =
          sq.kind == ClaimKind::kBlockHash ? "block_hash" : sq.query.call_name;
      request.fixed_parameters = sq.query.parameters;
      request.max_epoch_age = spec.max_epoch_age;
      if (!sq.policy.empty()) request.policy_check = make_named_policy(sq.policy);

      VerificationReport report;
      bool verified_something = true;
      if (!sq.raw_key.empty()) {
        std::shared_ptr<NodeService> source;
        for (const auto& service : topo.services()) {
          if (!topo.is_down(service->node_id())) {
            source = service;
            break;
          }
        }
        if (!source) {
          verified_something = false;
          detail = "no live node for raw retrieval";
        } else {
          RawResult raw = source->get_raw(sq.raw_key);
          report = verify_raw_data(raw.value, raw.proof, att, request, trust,
                                   current_epoch);
          entry["raw_value"] = to_hex(raw.value);
        }
      } else {
        report = verify_attestation(att, request, trust, current_epoch);
      }
      if (verified_something) {
        accepted = report.accepted;
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : report.checks)
          checks.push_back(
              {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        entry["checks"] = checks;
      }
      entry["accepted"] = accepted;
    }

    bool met;
    if (sq.expect == "accepted") {
      met = fetched && accepted;
      if (!met) detail = fetched ? "verification rejected" : "fetch failed: " + fetch_error;
    } else if (sq.expect == "rejected") {
      met = fetched && !accepted;
      if (!met) detail = fetched ? "verification accepted" : "fetch failed: " + fetch_error;
    } else {
      met = !fetched && fetch_error == sq.expect;
      if (!met)
        detail = fetched ? "fetch succeeded"
                         : "fetch failed with " + fetch_error + " instead";
    }
    if (met && fetched && sq.expect_signers &&
        *sq.expect_signers != att.signer_public_keys.size()) {
      met = false;
      detail = "expected " + std::to_string(*sq.expect_signers) + " signers, got " +
               std::to_string(att.signer_public_keys.size());
    }
    if (met && fetched && sq.expect_dissenters &&
        *sq.expect_dissenters != att.dissenters) {
      met = false;
      detail = "dissenter list mismatch";
    }
    entry["expectation_met"] = met;
    entry["detail"] = detail;
    all_met = all_met && met;
    queries.push_back(std::move(entry));
  }

  return {{"name", spec.name},
          {"node_count", spec.topology.node_count},
          {"threshold_k", spec.topology.threshold_k},
          {"current_epoch", current_epoch},
          {"all_expectations_met", all_met},
          {"queries", queries}};
}

}  // namespace lsa::net
