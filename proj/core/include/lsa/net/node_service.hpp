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

// Per-node attestation service: wraps one ledger replica, executes queries
// against immutable snapshots, and signs claim statements with the node key.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <lsa/attestation.hpp>
#include <lsa/ledger.hpp>
#include <lsa/mcrypto.hpp>

namespace lsa::net {

// Unix seconds; injectable so tests control epochs deterministically.
using Clock = std::function<int64_t()>;
Clock system_clock();

struct NodeConfig {
  std::string node_id;
  mcrypto::KeyPair key_pair;
  uint64_t epoch_duration_s = 60;   // > 0
  uint64_t epoch_tolerance = 1;     // |requested - local| accepted
  // Fault-injection knobs for the scenario harness. An honest deployment
  // leaves all three at their defaults.
  int64_t clock_offset_s = 0;       // skews the local epoch
  bool byzantine_data = false;      // tamper claim data before signing
  uint64_t response_delay_ms = 0;   // stall every attest/raw request
};

struct NodeInfo {
  std::string node_id;
  Bytes public_key;
  Bytes proof_of_possession;
  uint64_t epoch_duration_s = 0;
  uint64_t block_number = 0;
};

struct RawResult {
  Bytes value;
  MerkleProof proof;
  uint64_t block_number = 0;
};

class NodeService {
 public:
  NodeService(NodeConfig config, LedgerState state, QueryRegistry registry,
              Clock clock = {});

  const std::string& node_id() const { return config_.node_id; }
  Bytes public_key() const { return config_.key_pair.public_key.to_bytes(); }
  uint64_t local_epoch() const;

  // Signs ClaimStatement(kind, query, data, snapshot block, requested_epoch).
  // claim.epoch is always the requested epoch, never the local one; requests
  // outside |requested - local| <= epoch_tolerance raise epoch_rejected.
  NodeAttestation attest_call(const Query& query, uint64_t requested_epoch);

  // Block-hash claims are cached by (block_number, epoch): repeated requests
  // within one block and epoch return byte-identical attestations.
  NodeAttestation attest_block_hash(uint64_t requested_epoch);

  // Unsigned value plus inclusion proof against the current snapshot root;
  // the caller authenticates it with a separately attested block hash.
  RawResult get_raw(const Bytes& key) const;

  NodeInfo info() const;

  // Advances the replica to a new immutable snapshot.
  void apply_block(const Writes& writes);

 private:
  std::shared_ptr<const LedgerState> snapshot() const;
  void check_epoch(uint64_t requested_epoch) const;
  NodeAttestation sign_claim(const ClaimStatement& claim) const;
  void simulate_faults(Bytes& data) const;

  NodeConfig config_;
  QueryRegistry registry_;
  Clock clock_;

  mutable std::mutex mu_;
  std::shared_ptr<const LedgerState> state_;
  std::map<std::pair<uint64_t, uint64_t>, NodeAttestation> block_hash_cache_;
};

}  // namespace lsa::net
