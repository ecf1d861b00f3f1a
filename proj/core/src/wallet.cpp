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

#include <lsa/wallet.hpp>

#include <filesystem>
#include <fstream>

#include <lsa/json_codec.hpp>

namespace lsa {

namespace {

nlohmann::json read_wallet_json(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) raise(Errc::io_error, "cannot open wallet: " + path);
  try {
    nlohmann::json j = nlohmann::json::parse(f);
    if (!j.is_object() || !j.contains("attestations") || !j["attestations"].is_array())
      raise(Errc::wallet_format, "wallet must be {\"attestations\": [...]}");
    return j;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    raise(Errc::wallet_format, std::string("wallet parse: ") + e.what());
  }
}

WalletEntry entry_from_json(const nlohmann::json& j) {
  WalletEntry e;
  e.attestation = aggregate_attestation_from_json(j);
  try {
    e.stored_at = j.at("stored_at").get<uint64_t>();
  } catch (const std::exception& ex) {
    raise(Errc::wallet_format, std::string("wallet entry: ") + ex.what());
  }
  return e;
}

}  // namespace

void wallet_store(const AggregateAttestation& att, const std::string& path,
                  uint64_t stored_at) {
  nlohmann::json j;
  if (std::filesystem::exists(path)) {
    j = read_wallet_json(path);
  } else {
    j = {{"attestations", nlohmann::json::array()}};
  }
  nlohmann::json entry = aggregate_attestation_to_json(att);
  entry["stored_at"] = stored_at;
  j["attestations"].push_back(std::move(entry));

  std::ofstream out(path, std::ios::trunc);
  if (!out.good()) raise(Errc::io_error, "cannot write wallet: " + path);
  out << j.dump(2) << '\n';
}

AggregateAttestation wallet_load(const Query& query, const std::string& path) {
  if (!std::filesystem::exists(path))
    raise(Errc::attestation_not_found, "wallet does not exist: " + path);
  nlohmann::json j = read_wallet_json(path);
  const auto& atts = j["attestations"];
  // Newest-first scan implements the most-recently-stored rule.
  for (auto it = atts.rbegin(); it != atts.rend(); ++it) {
    WalletEntry e = entry_from_json(*it);
    if (e.attestation.claim.query == query) return e.attestation;
  }
  raise(Errc::attestation_not_found, "no stored attestation matches the query");
}

std::vector<WalletEntry> wallet_entries(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  nlohmann::json j = read_wallet_json(path);
  std::vector<WalletEntry> out;
  for (const auto& e : j["attestations"]) out.push_back(entry_from_json(e));
  return out;
}

}  // namespace lsa
