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

// Claim and attestation data model, the canonical byte encoding signatures
// are made over, and the JSON shapes shared by wallet, services, and CLI.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <lsa/support.hpp>

namespace lsa {

enum class ClaimKind : uint8_t {
  kBlockHash = 1,
  kContractCall = 2,
};

const char* claim_kind_name(ClaimKind kind);
ClaimKind claim_kind_from_name(const std::string& name);  // Errc::malformed_claim_kind

// A ledger query: call name plus ordered named parameters. Parameter order
// is significant and preserved; names must be unique within one query.
struct Query {
  std::string call_name;
  std::vector<std::pair<std::string, Bytes>> parameters;

  bool operator==(const Query& o) const {
    return call_name == o.call_name && parameters == o.parameters;
  }
};

// What a node asserts: a query result bound to a ledger height and an epoch.
// Two claims are equal iff their canonical encodings are byte-identical.
struct ClaimStatement {
  ClaimKind claim_kind = ClaimKind::kContractCall;
  Query query;
  Bytes data;
  uint64_t block_number = 0;
  uint64_t epoch = 0;

  bool operator==(const ClaimStatement& o) const;
};

struct NodeAttestation {
  ClaimStatement claim;
  Bytes signature;
  Bytes public_key;
  std::string node_id;
};

struct AggregateAttestation {
  ClaimStatement claim;
  Bytes aggregate_signature;
  std::vector<Bytes> signer_public_keys;
  std::vector<std::string> dissenters;
};

// Canonical signing encoding:
//   "LSA-CLAIM-V1" || kind(1) || epoch u64be || block_number u64be ||
//   varbytes(call_name) || count u16be || (varbytes(name) || varbytes(value))*
//   || varbytes(data)
// where varbytes(x) = u32be length || raw bytes. Injective over valid claims.
Bytes encode_claim(const ClaimStatement& claim);  // Errc::encoding_overflow

// Exact inverse of encode_claim on its image; rejects anything else with a
// distinct code per failure class (tag, truncation, trailing bytes, kind).
ClaimStatement decode_claim(const Bytes& in);

inline constexpr size_t kMaxCallNameBytes = 256;

// Compact envelope for persisting or shipping one aggregate attestation:
//   "LSA-ATTEST-V1" || varbytes(encode_claim) || varbytes(aggregate_signature)
//   || count u16be || 48-byte keys || count u16be || varbytes(node_id)*
Bytes encode_attestation(const AggregateAttestation& att);
AggregateAttestation decode_attestation(const Bytes& in);

}  // namespace lsa
