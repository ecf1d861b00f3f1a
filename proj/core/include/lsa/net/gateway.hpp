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

// Gateway fan-out: query every registered node concurrently, verify and
// group the signed responses, aggregate the largest consistent group.

#include <memory>
#include <vector>

#include <lsa/attestation.hpp>
#include <lsa/net/node_service.hpp>

namespace lsa::net {

// Transport-neutral handle to one registered node. public_key() is the
// registry-pinned key; responses are verified against it, not against
// whatever key the response carries.
class NodeClient {
 public:
  virtual ~NodeClient() = default;
  virtual const std::string& node_id() const = 0;
  virtual const Bytes& public_key() const = 0;
  // Throw lsa::Error on any failure (epoch_rejected, net_error, ...).
  virtual NodeAttestation attest_call(const Query& query, uint64_t epoch) = 0;
  virtual NodeAttestation attest_block_hash(uint64_t epoch) = 0;
};

// Direct calls into an in-process NodeService; `down` simulates an
// unreachable node at the transport level.
class InProcessNodeClient : public NodeClient {
 public:
  InProcessNodeClient(std::shared_ptr<NodeService> service, bool down = false);

  const std::string& node_id() const override { return node_id_; }
  const Bytes& public_key() const override { return public_key_; }
  NodeAttestation attest_call(const Query& query, uint64_t epoch) override;
  NodeAttestation attest_block_hash(uint64_t epoch) override;

 private:
  void check_up() const;
  std::shared_ptr<NodeService> service_;
  std::string node_id_;
  Bytes public_key_;
  bool down_;
};

struct GatewayPolicy {
  uint64_t per_node_timeout_ms = 2000;
  // 0 selects the default quorum ceil(2n/3).
  size_t min_responses = 0;
};

struct GatewayConfig {
  uint64_t epoch_duration_s = 60;
  GatewayPolicy policy;
};

// Deterministic aggregation of individually verified node attestations.
// All claims must be byte-identical (claim_mismatch otherwise); every
// signature is re-verified (invalid_node_signature names the offender);
// output keys are ordered by ascending node_id regardless of input order.
AggregateAttestation aggregate_node_attestations(std::vector<NodeAttestation> attestations);

class Gateway {
 public:
  Gateway(GatewayConfig config, std::vector<std::shared_ptr<NodeClient>> nodes,
          Clock clock = {});

  uint64_t current_epoch() const;
  size_t node_count() const { return nodes_.size(); }
  size_t min_responses() const;

  // Fan out to all nodes with the gateway-chosen epoch, verify signatures
  // against registry keys, group by byte-identical claim, and aggregate the
  // largest group matching the request (ties: the group containing the
  // lexicographically smallest node_id). Dissenters are nodes that produced
  // a response with a different claim or an invalid signature; nodes that
  // timed out or errored are never dissenters.
  // Errors: insufficient_responses when the winning group is smaller than
  // min_responses; epoch_desync when every node rejected the chosen epoch.
  AggregateAttestation aggregate_call(const Query& query);
  AggregateAttestation aggregate_block_hash();

 private:
  AggregateAttestation fan_out(ClaimKind kind, const Query& query);

  GatewayConfig config_;
  std::vector<std::shared_ptr<NodeClient>> nodes_;
  Clock clock_;
};

}  // namespace lsa::net
