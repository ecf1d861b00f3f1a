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

// The user's wallet: a JSON file of aggregate attestations keyed by their
// query. Single-writer by convention; callers serialize writes.

#include <string>
#include <vector>

#include <lsa/attestation.hpp>

namespace lsa {

struct WalletEntry {
  AggregateAttestation attestation;
  uint64_t stored_at = 0;  // unix seconds
};

// Appends to the wallet at `path`, creating the file if needed.
void wallet_store(const AggregateAttestation& att, const std::string& path,
                  uint64_t stored_at);

// Most recently stored attestation whose query matches exactly (call name
// and full parameter list). Missing file or no match:
// Errc::attestation_not_found; corrupt file: Errc::wallet_format.
AggregateAttestation wallet_load(const Query& query, const std::string& path);

// Every stored entry in storage order; a missing file is an empty wallet.
std::vector<WalletEntry> wallet_entries(const std::string& path);

}  // namespace lsa
