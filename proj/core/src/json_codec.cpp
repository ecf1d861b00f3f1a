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

#include <lsa/json_codec.hpp>

#include <fstream>

namespace lsa {

namespace {

// Any structural problem in a parsed document surfaces as one error class
// (wallet_format for attestation material, bad_config for request files) so
// file loaders report corruption uniformly.
template <typename F>
auto guard_as(Errc errc, const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(errc, std::string(what) + ": " + e.what());
  }
}

template <typename F>
auto parse_guard(const char* what, F&& f) -> decltype(f()) {
  return guard_as(Errc::wallet_format, what, std::forward<F>(f));
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) raise(Errc::io_error, "cannot open file: " + path);
  return guard_as(Errc::bad_config, path.c_str(),
                  [&] { return nlohmann::json::parse(f); });
}

nlohmann::json claim_to_json(const ClaimStatement& claim) {
  nlohmann::json params = nlohmann::json::array();
  for (const auto& [name, value] : claim.query.parameters)
    params.push_back({name, to_hex(value)});
  return {
      {"claim_kind", claim_kind_name(claim.claim_kind)},
      {"call", claim.query.call_name},
      {"parameters", params},
      {"data", to_hex(claim.data)},
      {"block_number", claim.block_number},
      {"epoch", claim.epoch},
  };
}

ClaimStatement claim_from_json(const nlohmann::json& j) {
  return parse_guard("claim", [&] {
    ClaimStatement c;
    c.claim_kind = claim_kind_from_name(j.at("claim_kind").get<std::string>());
    c.query.call_name = j.at("call").get<std::string>();
    for (const auto& p : j.at("parameters")) {
      if (!p.is_array() || p.size() != 2)
        raise(Errc::wallet_format, "parameter entries must be [name, hex] pairs");
      c.query.parameters.emplace_back(p[0].get<std::string>(),
                                      from_hex(p[1].get<std::string>()));
    }
    c.data = from_hex(j.at("data").get<std::string>());
    c.block_number = j.at("block_number").get<uint64_t>();
    c.epoch = j.at("epoch").get<uint64_t>();
    return c;
  });
}

nlohmann::json node_attestation_to_json(const NodeAttestation& att) {
  return {
      {"claim", claim_to_json(att.claim)},
      {"signature", to_hex(att.signature)},
      {"public_key", to_hex(att.public_key)},
      {"node_id", att.node_id},
  };
}

NodeAttestation node_attestation_from_json(const nlohmann::json& j) {
  return parse_guard("node attestation", [&] {
    NodeAttestation att;
    att.claim = claim_from_json(j.at("claim"));
    att.signature = from_hex(j.at("signature").get<std::string>());
    att.public_key = from_hex(j.at("public_key").get<std::string>());
    att.node_id = j.at("node_id").get<std::string>();
    return att;
  });
}

nlohmann::json aggregate_attestation_to_json(const AggregateAttestation& att) {
  nlohmann::json keys = nlohmann::json::array();
  for (const Bytes& k : att.signer_public_keys) keys.push_back(to_hex(k));
  return {
      {"claim", claim_to_json(att.claim)},
      {"aggregate_signature", to_hex(att.aggregate_signature)},
      {"signer_public_keys", keys},
      {"dissenters", att.dissenters},
  };
}

AggregateAttestation aggregate_attestation_from_json(const nlohmann::json& j) {
  return parse_guard("aggregate attestation", [&] {
    AggregateAttestation att;
    att.claim = claim_from_json(j.at("claim"));
    att.aggregate_signature = from_hex(j.at("aggregate_signature").get<std::string>());
    for (const auto& k : j.at("signer_public_keys"))
      att.signer_public_keys.push_back(from_hex(k.get<std::string>()));
    att.dissenters = j.at("dissenters").get<std::vector<std::string>>();
    return att;
  });
}

nlohmann::json merkle_proof_to_json(const MerkleProof& proof) {
  nlohmann::json siblings = nlohmann::json::array();
  for (const auto& [digest, side] : proof.siblings)
    siblings.push_back({to_hex(digest.data(), digest.size()),
                        side == Side::kLeft ? "LEFT" : "RIGHT"});
  return {
      {"key", to_hex(proof.key)},
      {"value", to_hex(proof.value)},
      {"leaf_index", proof.leaf_index},
      {"leaf_count", proof.leaf_count},
      {"siblings", siblings},
  };
}

MerkleProof merkle_proof_from_json(const nlohmann::json& j) {
  return parse_guard("merkle proof", [&] {
    MerkleProof proof;
    proof.key = from_hex(j.at("key").get<std::string>());
    proof.value = from_hex(j.at("value").get<std::string>());
    proof.leaf_index = j.at("leaf_index").get<uint64_t>();
    proof.leaf_count = j.at("leaf_count").get<uint64_t>();
    for (const auto& s : j.at("siblings")) {
      if (!s.is_array() || s.size() != 2)
        raise(Errc::wallet_format, "siblings entries must be [hex, side] pairs");
      const Bytes digest_bytes = from_hex(s[0].get<std::string>());
      if (digest_bytes.size() != crypto::kSha256DigestSize)
        raise(Errc::wallet_format, "sibling digests must be 32 bytes");
      const std::string side = s[1].get<std::string>();
      if (side != "LEFT" && side != "RIGHT")
        raise(Errc::wallet_format, "sibling side must be LEFT or RIGHT");
      Digest d;
      std::copy(digest_bytes.begin(), digest_bytes.end(), d.begin());
      proof.siblings.emplace_back(d, side == "LEFT" ? Side::kLeft : Side::kRight);
    }
    return proof;
  });
}

VerifierRequest verifier_request_from_json(const nlohmann::json& j) {
  return guard_as(Errc::bad_config, "verifier request", [&] {
    VerifierRequest r;
    r.expected_call = j.at("call").get<std::string>();
    for (const auto& p : j.value("fixed_parameters", nlohmann::json::array())) {
      if (!p.is_array() || p.size() != 2)
        raise(Errc::wallet_format, "fixed_parameters entries must be [name, hex] pairs");
      r.fixed_parameters.emplace_back(p[0].get<std::string>(),
                                      from_hex(p[1].get<std::string>()));
    }
    for (const auto& n : j.value("free_parameters", nlohmann::json::array()))
      r.free_parameter_names.push_back(n.get<std::string>());
    r.max_epoch_age = j.at("max_epoch_age").get<uint64_t>();
    r.policy_check = make_named_policy(j.value("policy", std::string{}));
    return r;
  });
}

VerifierRequest load_verifier_request(const std::string& path) {
  return verifier_request_from_json(load_json_file(path));
}

}  // namespace lsa
