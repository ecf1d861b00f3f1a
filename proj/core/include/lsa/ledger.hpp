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

// Deterministic simulated permissioned ledger: an append-only block log
// over a key-value store, a sorted binary merkle tree authenticating it,
// and a registry of pure query procedures standing in for contract calls.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <lsa/attestation.hpp>
#include <lsa/crypto/sha256.hpp>
#include <lsa/support.hpp>

namespace lsa {

using Digest = crypto::Digest;
using Store = std::map<Bytes, Bytes>;  // keys in ascending lexicographic byte order
using Writes = std::vector<std::pair<Bytes, Bytes>>;

enum class Side : uint8_t { kLeft, kRight };

// Membership proof: fold the leaf digest through siblings to the root.
// side = kLeft means the sibling sits left of the running hash.
struct MerkleProof {
  Bytes key;
  Bytes value;
  uint64_t leaf_index = 0;
  std::vector<std::pair<Digest, Side>> siblings;
  uint64_t leaf_count = 0;
};

// Leaves are SHA-256(0x00 || varbytes(key) || varbytes(value)) over sorted
// keys; internal nodes SHA-256(0x01 || left || right); an odd node is
// promoted unchanged; the empty store hashes to SHA-256(0x02).
Digest merkle_root(const Store& store);
MerkleProof generate_proof(const Store& store, const Bytes& key);  // Errc::key_not_found
bool verify_proof(const MerkleProof& proof, const Digest& expected_root);

// One immutable snapshot per block; apply_block returns the successor.
struct LedgerState {
  Store store;
  uint64_t block_number = 0;
  Digest block_root{};
  std::vector<std::pair<uint64_t, Digest>> history;

  static LedgerState genesis();
};

// Applies writes in order (later duplicates win), increments block_number,
// recomputes the root, appends to history.
LedgerState apply_block(const LedgerState& state, const Writes& writes);

// Block stream file: one JSON object per line, {"writes": [["<hex>","<hex>"]...]}.
std::vector<Writes> load_block_stream(const std::string& path);

using QueryProcedure =
    std::function<Bytes(const LedgerState&, const std::vector<std::pair<std::string, Bytes>>&)>;

// Named deterministic procedures; the simulation's stand-in for contract
// functions. Thread-safe after construction.
class QueryRegistry {
 public:
  // Built-ins:
  //   get(key)                       -> stored value, empty bytes if absent
  //   revocation_status(credential_id) -> 0x01 if key "revoked:"||id exists, else 0x00
  //   list_root()                    -> the snapshot's 32-byte block root
  static QueryRegistry with_builtins();

  void register_procedure(const std::string& name, QueryProcedure body);

  // Errc::unknown_call for unregistered names; procedures raise
  // Errc::invalid_parameters for malformed parameter lists.
  Bytes execute(const LedgerState& state, const Query& query) const;

 private:
  std::map<std::string, QueryProcedure> procedures_;
};

}  // namespace lsa
