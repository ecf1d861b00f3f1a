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

// The verifier's trust anchor: node identities, their public keys, and the
// acceptance threshold k. Admission requires a verified proof of possession
// (rogue-key defense); stored proofs are re-checked on load when present.

#include <string>
#include <vector>

#include <lsa/support.hpp>

namespace lsa {

struct TrustedNode {
  std::string node_id;
  Bytes public_key;
  Bytes proof_of_possession;  // empty when the file omits it
};

struct TrustStore {
  uint32_t threshold_k = 1;
  std::vector<TrustedNode> entries;
};

// Throws Errc::trust_store_format on structural or invariant violations:
// threshold_k < 1, threshold_k > |entries|, duplicate node_ids, keys that
// are not valid group encodings, or a present-but-invalid proof of
// possession.
TrustStore trust_store_load(const std::string& path);

void trust_store_save(const TrustStore& ts, const std::string& path);

}  // namespace lsa
