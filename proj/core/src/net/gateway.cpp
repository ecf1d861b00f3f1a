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

#include <lsa/net/gateway.hpp>

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <lsa/mcrypto.hpp>

namespace lsa::net {

InProcessNodeClient::InProcessNodeClient(std::shared_ptr<NodeService> service, bool down)
    : service_(std::move(service)),
      node_id_(service_->node_id()),
      public_key_(service_->public_key()),
      down_(down) {}

void InProcessNodeClient::check_up() const {
  if (down_) raise(Errc::net_error, "node " + node_id_ + " is unreachable");
}

NodeAttestation InProcessNodeClient::attest_call(const Query& query, uint64_t epoch) {
  check_up();
  return service_->attest_call(query, epoch);
}

NodeAttestation InProcessNodeClient::attest_block_hash(uint64_t epoch) {
  check_up();
  return service_->attest_block_hash(epoch);
}

AggregateAttestation aggregate_node_attestations(std::vector<NodeAttestation> attestations) {
  if (attestations.empty()) raise(Errc::empty_aggregate, "no attestations to aggregate");
  std::sort(attestations.begin(), attestations.end(),
            [](const NodeAttestation& a, const NodeAttestation& b) {
              return a.node_id < b.node_id;
            });

  const Bytes claim_bytes = encode_claim(attestations.front().claim);
  std::vector<mcrypto::Signature> sigs;
  AggregateAttestation out;
  out.claim = attestations.front().claim;
  for (const NodeAttestation& att : attestations) {
    if (encode_claim(att.claim) != claim_bytes)
      raise(Errc::claim_mismatch, "node " + att.node_id + " attests a different claim");
    if (!mcrypto::verify_single(att.public_key, claim_bytes, att.signature))
      raise(Errc::invalid_node_signature, "signature from node " + att.node_id);
    sigs.push_back(mcrypto::Signature::from_bytes(att.signature));
    out.signer_public_keys.push_back(att.public_key);
  }
  out.aggregate_signature = mcrypto::aggregate_signatures(sigs).to_bytes();
  return out;
}

Gateway::Gateway(GatewayConfig config, std::vector<std::shared_ptr<NodeClient>> nodes,
                 Clock clock)
    : config_(config), nodes_(std::move(nodes)), clock_(clock ? std::move(clock)
                                                              : system_clock()) {
  if (nodes_.empty()) raise(Errc::bad_config, "gateway requires at least one node");
  if (config_.epoch_duration_s == 0)
    raise(Errc::bad_config, "epoch_duration_s must be positive");
  std::set<std::string> ids;
  std::set<Bytes> keys;
  for (const auto& n : nodes_) {
    if (!ids.insert(n->node_id()).second)
      raise(Errc::bad_config, "duplicate node_id: " + n->node_id());
    if (!keys.insert(n->public_key()).second)
      raise(Errc::bad_config, "duplicate public key for node " + n->node_id());
  }
  if (config_.policy.min_responses > nodes_.size())
    raise(Errc::bad_config, "min_responses exceeds the number of nodes");
}

uint64_t Gateway::current_epoch() const {
  const int64_t now = clock_();
  return now <= 0 ? 0 : static_cast<uint64_t>(now) / config_.epoch_duration_s;
}

size_t Gateway::min_responses() const {
  if (config_.policy.min_responses > 0) return config_.policy.min_responses;
  return (2 * nodes_.size() + 2) / 3;  // ceil(2n/3)
}

namespace {

struct Outcome {
  enum class Status { kPending, kOk, kError } status = Status::kPending;
  NodeAttestation attestation;
  Errc code = Errc::net_error;
};

// Shared between the fan-out and its worker threads; workers may outlive
// the fan-out when a node is slower than the deadline, so the state is
// owned by shared_ptr and threads are detached.
struct FanOutState {
  std::mutex mu;
  std::condition_variable cv;
  std::vector<Outcome> outcomes;
  size_t settled = 0;
};

}  // namespace

AggregateAttestation Gateway::fan_out(ClaimKind kind, const Query& query) {
  const uint64_t epoch = current_epoch();
  const size_t n = nodes_.size();

  auto state = std::make_shared<FanOutState>();
  state->outcomes.resize(n);
  for (size_t i = 0; i < n; ++i) {
    std::thread([state, i, kind, query, epoch, client = nodes_[i]] {
      Outcome outcome;
      try {
        outcome.attestation = kind == ClaimKind::kBlockHash
                                  ? client->attest_block_hash(epoch)
                                  : client->attest_call(query, epoch);
        outcome.status = Outcome::Status::kOk;
      } catch (const Error& e) {
        outcome.status = Outcome::Status::kError;
        outcome.code = e.code();
      } catch (const std::exception&) {
        outcome.status = Outcome::Status::kError;
        outcome.code = Errc::net_error;
      }
      std::lock_guard<std::mutex> lock(state->mu);
      state->outcomes[i] = std::move(outcome);
      ++state->settled;
      state->cv.notify_all();
    }).detach();
  }

  std::vector<Outcome> outcomes;
  {
    std::unique_lock<std::mutex> lock(state->mu);
    state->cv.wait_for(lock, std::chrono::milliseconds(config_.policy.per_node_timeout_ms),
                       [&] { return state->settled == n; });
    outcomes = state->outcomes;  // pending entries are timeouts
  }

  // Verify every response against its registry-pinned key; group verified
  // responses by canonical claim bytes.
  std::map<Bytes, std::vector<size_t>> groups;
  std::vector<size_t> responders;
  size_t epoch_rejections = 0;
  std::vector<std::string> unreachable;
  for (size_t i = 0; i < n; ++i) {
    const Outcome& o = outcomes[i];
    if (o.status == Outcome::Status::kError && o.code == Errc::epoch_rejected)
      ++epoch_rejections;
    if (o.status != Outcome::Status::kOk) {
      unreachable.push_back(nodes_[i]->node_id());
      continue;
    }
    responders.push_back(i);
    const NodeAttestation& att = o.attestation;
    const bool key_matches = att.public_key == nodes_[i]->public_key() &&
                             att.node_id == nodes_[i]->node_id();
    if (!key_matches ||
        !mcrypto::verify_single(nodes_[i]->public_key(), encode_claim(att.claim),
                                att.signature))
      continue;  // responded, unverifiable: dissenter unless grouped
    groups[encode_claim(att.claim)].push_back(i);
  }

  if (epoch_rejections == n)
    raise(Errc::epoch_desync, "all " + std::to_string(n) +
                                  " nodes rejected gateway epoch " + std::to_string(epoch));

  // Only groups that answer the question asked are candidates: same kind,
  // same query, the gateway-chosen epoch. Everything else dissents.
  std::vector<std::vector<size_t>> candidates;
  for (const auto& [bytes, members] : groups) {
    const ClaimStatement& claim = outcomes[members.front()].attestation.claim;
    if (claim.claim_kind == kind && claim.query == query && claim.epoch == epoch)
      candidates.push_back(members);
  }

  auto smallest_id = [&](const std::vector<size_t>& members) {
    std::string best = nodes_[members.front()]->node_id();
    for (size_t i : members) best = std::min(best, nodes_[i]->node_id());
    return best;
  };
  const std::vector<size_t>* winner = nullptr;
  for (const auto& group : candidates) {
    if (!winner || group.size() > winner->size() ||
        (group.size() == winner->size() && smallest_id(group) < smallest_id(*winner)))
      winner = &group;
  }

  if (!winner || winner->size() < min_responses()) {
    std::string detail = "largest consistent group has " +
                         std::to_string(winner ? winner->size() : 0) + " of " +
                         std::to_string(min_responses()) + " required responses";
    if (!unreachable.empty()) {
      detail += "; unreachable:";
      for (const std::string& id : unreachable) detail += " " + id;
    }
    raise(Errc::insufficient_responses, detail);
  }

  std::vector<NodeAttestation> winning;
  std::set<size_t> winner_set(winner->begin(), winner->end());
  for (size_t i : *winner) winning.push_back(outcomes[i].attestation);

  AggregateAttestation out = aggregate_node_attestations(std::move(winning));
  for (size_t i : responders) {
    if (winner_set.count(i) == 0) out.dissenters.push_back(nodes_[i]->node_id());
  }
  std::sort(out.dissenters.begin(), out.dissenters.end());
  return out;
}

AggregateAttestation Gateway::aggregate_call(const Query& query) {
  return fan_out(ClaimKind::kContractCall, query);
}

AggregateAttestation Gateway::aggregate_block_hash() {
  Query query;
  query.call_name = "block_hash";
  return fan_out(ClaimKind::kBlockHash, query);
}

}  // namespace lsa::net
