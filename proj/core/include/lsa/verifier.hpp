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

// Fully offline attestation verification: pure functions of their inputs,
// no I/O, total (failures are report entries, never exceptions).

#include <functional>
#include <string>
#include <vector>

#include <lsa/attestation.hpp>
#include <lsa/ledger.hpp>
#include <lsa/trust_store.hpp>

namespace lsa {

// Predicate over (free-parameter values from the claim, claim data).
using PolicyCheck =
    std::function<bool(const std::vector<std::pair<std::string, Bytes>>&, const Bytes&)>;

struct VerifierRequest {
  std::string expected_call;
  std::vector<std::pair<std::string, Bytes>> fixed_parameters;
  std::vector<std::string> free_parameter_names;
  uint64_t max_epoch_age = 0;
  PolicyCheck policy_check;  // unset accepts anything
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  bool accepted = false;
  std::vector<CheckResult> checks;
  uint32_t matched_trusted_signers = 0;
};

// Runs every check and records each outcome (no short-circuiting):
//   signature        aggregate verifies over the claim's canonical bytes
//                    under the attestation's own signer set (duplicate or
//                    empty signer sets fail here)
//   threshold        >= k distinct signer keys are in the trust store
//   freshness        current_epoch - claim.epoch <= max_epoch_age
//   call-match       claim call equals expected_call
//   parameter-match  fixed parameters carry mandated values; no claim
//                    parameter outside fixed + free
//   policy           request.policy_check over free values and data
VerificationReport verify_attestation(const AggregateAttestation& att,
                                      const VerifierRequest& request,
                                      const TrustStore& trust_store,
                                      uint64_t current_epoch);

// Variant 1: authenticates a raw value against a block-hash attestation.
// Runs verify_attestation on the root attestation, then adds a merkle-proof
// check: verify_proof(proof, claim.data) and proof.value == value.
VerificationReport verify_raw_data(const Bytes& value, const MerkleProof& proof,
                                   const AggregateAttestation& root_attestation,
                                   const VerifierRequest& request,
                                   const TrustStore& trust_store, uint64_t current_epoch);

// Named policies for file/CLI use: "accept_any", "data_equals:<hex>",
// "data_is_zero_byte". Throws Errc::bad_config on unknown names.
PolicyCheck make_named_policy(const std::string& name);

}  // namespace lsa
