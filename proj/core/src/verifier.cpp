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

#include <lsa/verifier.hpp>

#include <algorithm>
#include <set>

#include <lsa/mcrypto.hpp>

namespace lsa {

namespace {

CheckResult check_signature(const AggregateAttestation& att) {
  CheckResult c{"signature", false, ""};
  if (att.signer_public_keys.empty()) {
    c.detail = "no signer public keys";
    return c;
  }
  std::set<Bytes> unique(att.signer_public_keys.begin(), att.signer_public_keys.end());
  if (unique.size() != att.signer_public_keys.size()) {
    // A duplicated key would also be double-counted by the threshold check.
    c.detail = "duplicate signer public keys";
    return c;
  }
  const Bytes message = encode_claim(att.claim);
  if (!mcrypto::verify_aggregate(att.signer_public_keys, message, att.aggregate_signature)) {
    c.detail = "aggregate signature does not verify over the claim";
    return c;
  }
  c.passed = true;
  c.detail = "aggregate verifies over " + std::to_string(att.signer_public_keys.size()) +
             " signer key(s)";
  return c;
}

CheckResult check_threshold(const AggregateAttestation& att, const TrustStore& trust_store,
                            uint32_t& matched_out) {
  std::set<Bytes> trusted;
  for (const auto& node : trust_store.entries) trusted.insert(node.public_key);
  std::set<Bytes> matched;
  for (const auto& pk : att.signer_public_keys) {
    if (trusted.count(pk) != 0) matched.insert(pk);
  }
  matched_out = static_cast<uint32_t>(matched.size());
  CheckResult c{"threshold", matched.size() >= trust_store.threshold_k, ""};
  c.detail = std::to_string(matched.size()) + " of " +
             std::to_string(att.signer_public_keys.size()) + " signer(s) trusted, k=" +
             std::to_string(trust_store.threshold_k);
  return c;
}

CheckResult check_freshness(const ClaimStatement& claim, uint64_t max_epoch_age,
                            uint64_t current_epoch) {
  // Pass iff current_epoch - claim.epoch <= max_epoch_age; epochs from the
  // future trivially satisfy the bound.
  const bool fresh =
      claim.epoch >= current_epoch || current_epoch - claim.epoch <= max_epoch_age;
  CheckResult c{"freshness", fresh, ""};
  c.detail = "claim epoch " + std::to_string(claim.epoch) + ", current " +
             std::to_string(current_epoch) + ", max age " + std::to_string(max_epoch_age);
  return c;
}

CheckResult check_call(const ClaimStatement& claim, const std::string& expected_call) {
  CheckResult c{"call-match", claim.query.call_name == expected_call, ""};
  if (c.passed) {
    c.detail = "call is \"" + expected_call + "\"";
  } else {
    c.detail = "claim call \"" + claim.query.call_name + "\" != expected \"" + expected_call +
               "\"";
  }
  return c;
}

CheckResult check_parameters(const ClaimStatement& claim, const VerifierRequest& request) {
  CheckResult c{"parameter-match", true, "parameters match the request"};
  auto fail = [&c](std::string detail) {
    c.passed = false;
    c.detail = std::move(detail);
  };
  // Every mandated parameter must be present with exactly the mandated
  // value; a name mandated twice with different values is unsatisfiable.
  for (const auto& [name, value] : request.fixed_parameters) {
    bool present = false;
    for (const auto& [cname, cvalue] : claim.query.parameters) {
      if (cname != name) continue;
      present = true;
      if (cvalue != value) {
        fail("parameter \"" + name + "\" does not carry the mandated value");
        return c;
      }
    }
    if (!present) {
      fail("mandated parameter \"" + name + "\" is absent from the claim");
      return c;
    }
  }
  // No claim parameter outside the allowed name set.
  for (const auto& [cname, cvalue] : claim.query.parameters) {
    const bool fixed = std::any_of(request.fixed_parameters.begin(),
                                   request.fixed_parameters.end(),
                                   [&](const auto& p) { return p.first == cname; });
    const bool free = std::find(request.free_parameter_names.begin(),
                                request.free_parameter_names.end(),
                                cname) != request.free_parameter_names.end();
    if (!fixed && !free) {
      fail("claim parameter \"" + cname + "\" is neither fixed nor free");
      return c;
    }
  }
  return c;
}

CheckResult check_policy(const ClaimStatement& claim, const VerifierRequest& request) {
  CheckResult c{"policy", false, ""};
  if (!request.policy_check) {
    c.passed = true;
    c.detail = "no policy configured";
    return c;
  }
  std::vector<std::pair<std::string, Bytes>> free_params;
  for (const auto& [name, value] : claim.query.parameters) {
    const bool free = std::find(request.free_parameter_names.begin(),
                                request.free_parameter_names.end(),
                                name) != request.free_parameter_names.end();
    if (free) free_params.emplace_back(name, value);
  }
  try {
    c.passed = request.policy_check(free_params, claim.data);
    c.detail = c.passed ? "policy accepted the data" : "policy rejected the data";
  } catch (const std::exception& e) {
    c.detail = std::string("policy raised: ") + e.what();
  }
  return c;
}

}  // namespace

VerificationReport verify_attestation(const AggregateAttestation& att,
                                      const VerifierRequest& request,
                                      const TrustStore& trust_store,
                                      uint64_t current_epoch) {
  VerificationReport report;
  report.checks.push_back(check_signature(att));
  report.checks.push_back(check_threshold(att, trust_store, report.matched_trusted_signers));
  report.checks.push_back(check_freshness(att.claim, request.max_epoch_age, current_epoch));
  report.checks.push_back(check_call(att.claim, request.expected_call));
  report.checks.push_back(check_parameters(att.claim, request));
  report.checks.push_back(check_policy(att.claim, request));
  report.accepted = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CheckResult& c) { return c.passed; });
  return report;
}

VerificationReport verify_raw_data(const Bytes& value, const MerkleProof& proof,
                                   const AggregateAttestation& root_attestation,
                                   const VerifierRequest& request,
                                   const TrustStore& trust_store, uint64_t current_epoch) {
  VerificationReport report =
      verify_attestation(root_attestation, request, trust_store, current_epoch);
  CheckResult c{"merkle-proof", false, ""};
  const Bytes& root_bytes = root_attestation.claim.data;
  if (root_attestation.claim.claim_kind != ClaimKind::kBlockHash) {
    c.detail = "attestation does not carry a block hash claim";
  } else if (root_bytes.size() != crypto::kSha256DigestSize) {
    c.detail = "attested root is not a 32-byte digest";
  } else if (proof.value != value) {
    c.detail = "proof commits to a different value";
  } else {
    Digest root;
    std::copy(root_bytes.begin(), root_bytes.end(), root.begin());
    if (verify_proof(proof, root)) {
      c.passed = true;
      c.detail = "value proven against the attested state root";
    } else {
      c.detail = "merkle path does not reproduce the attested root";
    }
  }
  report.accepted = report.accepted && c.passed;
  report.checks.push_back(std::move(c));
  return report;
}

PolicyCheck make_named_policy(const std::string& name) {
  if (name.empty() || name == "accept_any") {
    return [](const std::vector<std::pair<std::string, Bytes>>&, const Bytes&) {
      return true;
    };
  }
  const std::string equals_prefix = "data_equals:";
  if (name.rfind(equals_prefix, 0) == 0) {
    Bytes expected = from_hex(name.substr(equals_prefix.size()));
    return [expected = std::move(expected)](
               const std::vector<std::pair<std::string, Bytes>>&, const Bytes& data) {
      return data == expected;
    };
  }
  if (name == "data_is_zero_byte") {
    return [](const std::vector<std::pair<std::string, Bytes>>&, const Bytes& data) {
      return data == Bytes{0x00};
    };
  }
  throw Error(Errc::bad_config, "unknown policy \"" + name + "\"");
}

}  // namespace lsa
