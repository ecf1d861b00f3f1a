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

#include <lsa/net/node_service.hpp>

#include <chrono>
#include <thread>

namespace lsa::net {

Clock system_clock() {
  return [] {
    return std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
}

NodeService::NodeService(NodeConfig config, LedgerState state, QueryRegistry registry,
                         Clock clock)
    : config_(std::move(config)),
      registry_(std::move(registry)),
      clock_(clock ? std::move(clock) : system_clock()),
      state_(std::make_shared<const LedgerState>(std::move(state))) {
  if (config_.epoch_duration_s == 0)
    raise(Errc::bad_config, "epoch_duration_s must be positive");
  if (config_.node_id.empty()) raise(Errc::bad_config, "node_id must be non-empty");
}

std::shared_ptr<const LedgerState> NodeService::snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return state_;
}

uint64_t NodeService::local_epoch() const {
  const int64_t now = clock_() + config_.clock_offset_s;
  return now <= 0 ? 0 : static_cast<uint64_t>(now) / config_.epoch_duration_s;
}

void NodeService::check_epoch(uint64_t requested_epoch) const {
  const uint64_t local = local_epoch();
  const uint64_t diff =
      requested_epoch > local ? requested_epoch - local : local - requested_epoch;
  if (diff > config_.epoch_tolerance)
    raise(Errc::epoch_rejected, "requested epoch " + std::to_string(requested_epoch) +
                                    " outside tolerance of local epoch " +
                                    std::to_string(local));
}

void NodeService::simulate_faults(Bytes& data) const {
  if (config_.response_delay_ms > 0)
    std::this_thread::sleep_for(std::chrono::milliseconds(config_.response_delay_ms));
  if (config_.byzantine_data) {
    // Deterministic corruption; the node still signs what it returns.
    if (data.empty()) {
      data.push_back(0xff);
    } else {
      data[0] ^= 0xff;
    }
  }
}

NodeAttestation NodeService::sign_claim(const ClaimStatement& claim) const {
  NodeAttestation att;
  att.claim = claim;
  att.signature = mcrypto::sign(config_.key_pair.secret_key, encode_claim(claim)).to_bytes();
  att.public_key = config_.key_pair.public_key.to_bytes();
  att.node_id = config_.node_id;
  return att;
}

NodeAttestation NodeService::attest_call(const Query& query, uint64_t requested_epoch) {
  check_epoch(requested_epoch);
  const auto snap = snapshot();
  ClaimStatement claim;
  claim.claim_kind = ClaimKind::kContractCall;
  claim.query = query;
  claim.data = registry_.execute(*snap, query);
  claim.block_number = snap->block_number;
  claim.epoch = requested_epoch;
  simulate_faults(claim.data);
  return sign_claim(claim);
}

NodeAttestation NodeService::attest_block_hash(uint64_t requested_epoch) {
  check_epoch(requested_epoch);
  const auto snap = snapshot();
  const auto cache_key = std::make_pair(snap->block_number, requested_epoch);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = block_hash_cache_.find(cache_key);
    if (it != block_hash_cache_.end()) return it->second;
  }

  ClaimStatement claim;
  claim.claim_kind = ClaimKind::kBlockHash;
  claim.query.call_name = "block_hash";
  claim.data.assign(snap->block_root.begin(), snap->block_root.end());
  claim.block_number = snap->block_number;
  claim.epoch = requested_epoch;
  simulate_faults(claim.data);
  NodeAttestation att = sign_claim(claim);

  std::lock_guard<std::mutex> lock(mu_);
  return block_hash_cache_.emplace(cache_key, std::move(att)).first->second;
}

RawResult NodeService::get_raw(const Bytes& key) const {
  if (config_.response_delay_ms > 0)
    std::this_thread::sleep_for(std::chrono::milliseconds(config_.response_delay_ms));
  const auto snap = snapshot();
  RawResult out;
  out.proof = generate_proof(snap->store, key);
  out.value = out.proof.value;
  out.block_number = snap->block_number;
  return out;
}

NodeInfo NodeService::info() const {
  const auto snap = snapshot();
  NodeInfo i;
  i.node_id = config_.node_id;
  i.public_key = config_.key_pair.public_key.to_bytes();
  i.proof_of_possession = config_.key_pair.proof_of_possession.to_bytes();
  i.epoch_duration_s = config_.epoch_duration_s;
  i.block_number = snap->block_number;
  return i;
}

void NodeService::apply_block(const Writes& writes) {
  std::lock_guard<std::mutex> lock(mu_);
  state_ = std::make_shared<const LedgerState>(lsa::apply_block(*state_, writes));
  // Cached block-hash attestations refer to superseded blocks only.
  block_hash_cache_.clear();
}

}  // namespace lsa::net
