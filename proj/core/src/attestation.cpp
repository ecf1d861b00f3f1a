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

#include <lsa/attestation.hpp>

#include <limits>

namespace lsa {

namespace {

constexpr char kClaimTag[] = "LSA-CLAIM-V1";
constexpr size_t kClaimTagSize = sizeof(kClaimTag) - 1;
constexpr char kAttestationTag[] = "LSA-ATTEST-V1";
constexpr size_t kAttestationTagSize = sizeof(kAttestationTag) - 1;
constexpr size_t kCompressedKeySize = 48;

void put_var_string(Bytes& out, const std::string& s) {
  Bytes b(s.begin(), s.end());
  put_varbytes(out, b);
}

}  // namespace

const char* claim_kind_name(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::kBlockHash:
      return "BLOCK_HASH";
    case ClaimKind::kContractCall:
      return "CONTRACT_CALL";
  }
  raise(Errc::malformed_claim_kind, "unknown claim kind value");
}

ClaimKind claim_kind_from_name(const std::string& name) {
  if (name == "BLOCK_HASH") return ClaimKind::kBlockHash;
  if (name == "CONTRACT_CALL") return ClaimKind::kContractCall;
  raise(Errc::malformed_claim_kind, "unknown claim kind: " + name);
}

bool ClaimStatement::operator==(const ClaimStatement& o) const {
  return encode_claim(*this) == encode_claim(o);
}

Bytes encode_claim(const ClaimStatement& claim) {
  if (claim.query.call_name.size() > kMaxCallNameBytes)
    raise(Errc::encoding_overflow, "call_name exceeds 256 bytes");
  if (claim.query.parameters.size() > std::numeric_limits<uint16_t>::max())
    raise(Errc::encoding_overflow, "too many parameters");

  Bytes out;
  out.reserve(64 + claim.data.size());
  out.insert(out.end(), kClaimTag, kClaimTag + kClaimTagSize);
  out.push_back(static_cast<uint8_t>(claim.claim_kind));
  put_u64(out, claim.epoch);
  put_u64(out, claim.block_number);
  put_var_string(out, claim.query.call_name);
  put_u16(out, static_cast<uint16_t>(claim.query.parameters.size()));
  for (const auto& [name, value] : claim.query.parameters) {
    if (name.size() > std::numeric_limits<uint32_t>::max() / 2)
      raise(Errc::encoding_overflow, "parameter name too long");
    put_var_string(out, name);
    put_varbytes(out, value);
  }
  put_varbytes(out, claim.data);
  return out;
}

ClaimStatement decode_claim(const Bytes& in) {
  if (in.size() < kClaimTagSize ||
      !std::equal(kClaimTag, kClaimTag + kClaimTagSize, in.begin()))
    raise(Errc::malformed_claim_tag, "claim encoding lacks the LSA-CLAIM-V1 tag");

  ByteReader r(in);
  r.take(kClaimTagSize);
  uint8_t kind = r.u8();
  if (kind != static_cast<uint8_t>(ClaimKind::kBlockHash) &&
      kind != static_cast<uint8_t>(ClaimKind::kContractCall))
    raise(Errc::malformed_claim_kind, "unknown claim kind byte");

  ClaimStatement claim;
  claim.claim_kind = static_cast<ClaimKind>(kind);
  claim.epoch = r.u64();
  claim.block_number = r.u64();
  Bytes call = r.varbytes();
  claim.query.call_name.assign(call.begin(), call.end());
  uint16_t count = r.u16();
  claim.query.parameters.reserve(count);
  for (uint16_t i = 0; i < count; ++i) {
    Bytes name = r.varbytes();
    Bytes value = r.varbytes();
    claim.query.parameters.emplace_back(std::string(name.begin(), name.end()),
                                        std::move(value));
  }
  claim.data = r.varbytes();
  if (!r.done()) raise(Errc::malformed_claim_trailing, "trailing bytes after claim");
  return claim;
}

Bytes encode_attestation(const AggregateAttestation& att) {
  if (att.signer_public_keys.size() > std::numeric_limits<uint16_t>::max() ||
      att.dissenters.size() > std::numeric_limits<uint16_t>::max())
    raise(Errc::encoding_overflow, "too many signers or dissenters");

  Bytes out;
  out.insert(out.end(), kAttestationTag, kAttestationTag + kAttestationTagSize);
  put_varbytes(out, encode_claim(att.claim));
  put_varbytes(out, att.aggregate_signature);
  put_u16(out, static_cast<uint16_t>(att.signer_public_keys.size()));
  for (const Bytes& key : att.signer_public_keys) {
    if (key.size() != kCompressedKeySize)
      raise(Errc::encoding_overflow, "signer key must be 48 bytes");
    out.insert(out.end(), key.begin(), key.end());
  }
  put_u16(out, static_cast<uint16_t>(att.dissenters.size()));
  for (const std::string& id : att.dissenters) put_var_string(out, id);
  return out;
}

AggregateAttestation decode_attestation(const Bytes& in) {
  if (in.size() < kAttestationTagSize ||
      !std::equal(kAttestationTag, kAttestationTag + kAttestationTagSize, in.begin()))
    raise(Errc::malformed_claim_tag, "attestation encoding lacks the LSA-ATTEST-V1 tag");

  ByteReader r(in);
  r.take(kAttestationTagSize);
  AggregateAttestation att;
  att.claim = decode_claim(r.varbytes());
  att.aggregate_signature = r.varbytes();
  uint16_t keys = r.u16();
  att.signer_public_keys.reserve(keys);
  for (uint16_t i = 0; i < keys; ++i) att.signer_public_keys.push_back(r.take(kCompressedKeySize));
  uint16_t dissenters = r.u16();
  att.dissenters.reserve(dissenters);
  for (uint16_t i = 0; i < dissenters; ++i) {
    Bytes id = r.varbytes();
    att.dissenters.emplace_back(id.begin(), id.end());
  }
  if (!r.done()) raise(Errc::malformed_claim_trailing, "trailing bytes after attestation");
  return att;
}

}  // namespace lsa
