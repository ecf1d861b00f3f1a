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

// JSON wire/file shapes for claims and attestations. All byte fields are
// lowercase hex without prefix. Parsers throw Errc::wallet_format on
// structural problems so callers surface one consistent error class.

#include <json.hpp>

#include <lsa/attestation.hpp>
#include <lsa/ledger.hpp>
#include <lsa/verifier.hpp>

namespace lsa {

// Throws io_error when the file cannot be opened, bad_config on parse errors.
nlohmann::json load_json_file(const std::string& path);

nlohmann::json claim_to_json(const ClaimStatement& claim);
ClaimStatement claim_from_json(const nlohmann::json& j);

nlohmann::json node_attestation_to_json(const NodeAttestation& att);
NodeAttestation node_attestation_from_json(const nlohmann::json& j);

nlohmann::json aggregate_attestation_to_json(const AggregateAttestation& att);
AggregateAttestation aggregate_attestation_from_json(const nlohmann::json& j);

// {"key", "value", "leaf_index", "leaf_count", "siblings": [[hex, "LEFT"|"RIGHT"]...]}
nlohmann::json merkle_proof_to_json(const MerkleProof& proof);
MerkleProof merkle_proof_from_json(const nlohmann::json& j);

// Request files carry {"call", "fixed_parameters": [[name, hex]...],
// "free_parameters": [name...], "max_epoch_age"} and an optional "policy"
// name resolved through make_named_policy.
VerifierRequest verifier_request_from_json(const nlohmann::json& j);
VerifierRequest load_verifier_request(const std::string& path);

}  // namespace lsa
