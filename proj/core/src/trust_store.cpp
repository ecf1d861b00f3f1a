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

#include <lsa/trust_store.hpp>

#include <fstream>
#include <set>

#include <json.hpp>

#include <lsa/mcrypto.hpp>

namespace lsa {

TrustStore trust_store_load(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) raise(Errc::io_error, "cannot open trust store: " + path);

  nlohmann::json j;
  TrustStore ts;
  try {
    j = nlohmann::json::parse(f);
    ts.threshold_k = j.at("threshold_k").get<uint32_t>();
    for (const auto& n : j.at("nodes")) {
      TrustedNode node;
      node.node_id = n.at("node_id").get<std::string>();
      node.public_key = from_hex(n.at("public_key").get<std::string>());
      if (n.contains("proof_of_possession"))
        node.proof_of_possession = from_hex(n["proof_of_possession"].get<std::string>());
      ts.entries.push_back(std::move(node));
    }
  } catch (const Error& e) {
    raise(Errc::trust_store_format, e.what());
  } catch (const std::exception& e) {
    raise(Errc::trust_store_format, std::string("trust store parse: ") + e.what());
  }

  if (ts.threshold_k < 1) raise(Errc::trust_store_format, "threshold_k must be positive");
  if (ts.threshold_k > ts.entries.size())
    raise(Errc::trust_store_format, "threshold_k exceeds the number of trusted nodes");

  std::set<std::string> ids;
  for (const TrustedNode& n : ts.entries) {
    if (!ids.insert(n.node_id).second)
      raise(Errc::trust_store_format, "duplicate node_id: " + n.node_id);
    try {
      mcrypto::PublicKey::from_bytes(n.public_key);
    } catch (const Error&) {
      raise(Errc::trust_store_format, "invalid public key for node " + n.node_id);
    }
    if (!n.proof_of_possession.empty() &&
        !mcrypto::pop_verify(n.public_key, n.proof_of_possession))
      raise(Errc::trust_store_format, "proof of possession fails for node " + n.node_id);
  }
  return ts;
}

void trust_store_save(const TrustStore& ts, const std::string& path) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TrustedNode& n : ts.entries) {
    nlohmann::json e = {{"node_id", n.node_id}, {"public_key", to_hex(n.public_key)}};
    if (!n.proof_of_possession.empty())
      e["proof_of_possession"] = to_hex(n.proof_of_possession);
    nodes.push_back(std::move(e));
  }
  nlohmann::json j = {{"threshold_k", ts.threshold_k}, {"nodes", nodes}};
  std::ofstream out(path, std::ios::trunc);
  if (!out.good()) raise(Errc::io_error, "cannot write trust store: " + path);
  out << j.dump(2) << '\n';
}

}  // namespace lsa
