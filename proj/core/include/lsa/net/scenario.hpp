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

// Fault-injection scenarios: build a topology, run queries through the
// gateway and the offline verifier, and compare outcomes against declared
// expectations. Reports are deterministic for a fixed spec.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <lsa/net/topology.hpp>

namespace lsa::net {

struct ScenarioQuery {
  Query query;
  ClaimKind kind = ClaimKind::kContractCall;
  // accepted | rejected | insufficient_responses | epoch_desync
  std::string expect = "accepted";
  std::optional<size_t> expect_signers;
  std::optional<std::vector<std::string>> expect_dissenters;
  std::string policy;  // named verifier policy, empty accepts anything
  // Non-empty: fetch this key's raw value + proof from one live node and
  // authenticate it against the block-hash attestation (kind must be
  // block_hash).
  Bytes raw_key;
};

struct ScenarioSpec {
  std::string name;
  TopologyConfig topology;
  uint64_t max_epoch_age = 1;
  std::vector<ScenarioQuery> queries;
};

// Spec file shape:
// {"name", "node_count", "epoch_duration"?, "epoch_tolerance"?,
//  "master_seed"?, "block_stream" | "blocks", "faults": [...],
//  "policy": {...}?, "verifier_params": {"k", "max_epoch_age"},
//  "queries": [{"call", "parameters"?, "kind": "call"|"block_hash",
//               "expect", "expect_signers"?, "expect_dissenters"?,
//               "policy"?, "raw_key"?}...]}
// Scenarios run on a fixed logical clock unless the file sets "fixed_time".
ScenarioSpec scenario_spec_from_json(const nlohmann::json& j,
                                     const std::string& base_dir);
ScenarioSpec load_scenario_spec(const std::string& path);

// Report: {"name", "node_count", "all_expectations_met",
//          "queries": [{"query", "kind", "expect", "fetched",
//                       "fetch_error"?, "signers", "dissenters",
//                       "accepted", "checks", "expectation_met",
//                       "detail"}...]}
nlohmann::json run_scenario(const ScenarioSpec& spec);

}  // namespace lsa::net
