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

#include <lsa/ledger.hpp>

#include <fstream>

#include <json.hpp>

namespace lsa {

namespace {

Digest leaf_hash(const Bytes& key, const Bytes& value) {
  Bytes buf;
  buf.push_back(0x00);
  put_varbytes(buf, key);
  put_varbytes(buf, value);
  return crypto::sha256(buf);
}

Digest internal_hash(const Digest& left, const Digest& right) {
  Bytes buf;
  buf.reserve(65);
  buf.push_back(0x01);
  buf.insert(buf.end(), left.begin(), left.end());
  buf.insert(buf.end(), right.begin(), right.end());
  return crypto::sha256(buf);
}

Digest empty_root() {
  uint8_t b = 0x02;
  return crypto::sha256(&b, 1);
}

std::vector<Digest> leaf_level(const Store& store) {
  std::vector<Digest> leaves;
  leaves.reserve(store.size());
  for (const auto& [k, v] : store) leaves.push_back(leaf_hash(k, v));
  return leaves;
}

}  // namespace

Digest merkle_root(const Store& store) {
  if (store.empty()) return empty_root();
  std::vector<Digest> level = leaf_level(store);
  while (level.size() > 1) {
    std::vector<Digest> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(internal_hash(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(level.back());  // promote odd node
    level = std::move(next);
  }
  return level[0];
}

MerkleProof generate_proof(const Store& store, const Bytes& key) {
  auto it = store.find(key);
  if (it == store.end()) raise(Errc::key_not_found, "no such key: " + to_hex(key));

  MerkleProof proof;
  proof.key = key;
  proof.value = it->second;
  proof.leaf_count = store.size();
  proof.leaf_index = static_cast<uint64_t>(std::distance(store.begin(), it));

  std::vector<Digest> level = leaf_level(store);
  size_t pos = proof.leaf_index;
  while (level.size() > 1) {
    bool promoted = level.size() % 2 == 1 && pos == level.size() - 1;
    if (!promoted) {
      if (pos % 2 == 0) {
        proof.siblings.emplace_back(level[pos + 1], Side::kRight);
      } else {
        proof.siblings.emplace_back(level[pos - 1], Side::kLeft);
      }
    }
    std::vector<Digest> next;
    next.reserve((level.size() + 1) / 2);
    for (size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(internal_hash(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
    pos /= 2;
  }
  return proof;
}

bool verify_proof(const MerkleProof& proof, const Digest& expected_root) {
  Digest h = leaf_hash(proof.key, proof.value);
  for (const auto& [sibling, side] : proof.siblings)
    h = side == Side::kLeft ? internal_hash(sibling, h) : internal_hash(h, sibling);
  return h == expected_root;
}

LedgerState LedgerState::genesis() {
  LedgerState s;
  s.block_root = merkle_root(s.store);
  s.history.emplace_back(s.block_number, s.block_root);
  return s;
}

LedgerState apply_block(const LedgerState& state, const Writes& writes) {
  LedgerState next = state;
  for (const auto& [k, v] : writes) next.store[k] = v;
  next.block_number += 1;
  next.block_root = merkle_root(next.store);
  next.history.emplace_back(next.block_number, next.block_root);
  return next;
}

std::vector<Writes> load_block_stream(const std::string& path) {
  std::ifstream f(path);
  if (!f.good()) raise(Errc::io_error, "cannot open block stream: " + path);
  std::vector<Writes> blocks;
  std::string line;
  size_t line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      Writes writes;
      for (const auto& w : j.at("writes")) {
        if (!w.is_array() || w.size() != 2)
          raise(Errc::bad_config, "write entries must be [key, value] hex pairs");
        writes.emplace_back(from_hex(w[0].get<std::string>()),
                            from_hex(w[1].get<std::string>()));
      }
      blocks.push_back(std::move(writes));
    } catch (const Error& e) {
      // Keep the original code, add the offending line for diagnostics.
      throw Error(e.code(), "block stream line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception& e) {
      raise(Errc::bad_config,
            "block stream line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return blocks;
}

namespace {

const Bytes& require_param(const std::vector<std::pair<std::string, Bytes>>& params,
                           const std::string& name, size_t expected_count) {
  if (params.size() != expected_count)
    raise(Errc::invalid_parameters, "expected exactly " + std::to_string(expected_count) +
                                        " parameter(s)");
  for (const auto& [n, v] : params)
    if (n == name) return v;
  raise(Errc::invalid_parameters, "missing parameter: " + name);
}

}  // namespace

QueryRegistry QueryRegistry::with_builtins() {
  QueryRegistry r;
  r.register_procedure("get", [](const LedgerState& s, const auto& params) -> Bytes {
    const Bytes& key = require_param(params, "key", 1);
    auto it = s.store.find(key);
    return it == s.store.end() ? Bytes{} : it->second;
  });
  r.register_procedure("revocation_status", [](const LedgerState& s, const auto& params) -> Bytes {
    const Bytes& id = require_param(params, "credential_id", 1);
    Bytes key = to_bytes("revoked:");
    key.insert(key.end(), id.begin(), id.end());
    return {s.store.count(key) ? uint8_t{0x01} : uint8_t{0x00}};
  });
  r.register_procedure("list_root", [](const LedgerState& s, const auto& params) -> Bytes {
    if (!params.empty()) raise(Errc::invalid_parameters, "list_root takes no parameters");
    return Bytes(s.block_root.begin(), s.block_root.end());
  });
  return r;
}

void QueryRegistry::register_procedure(const std::string& name, QueryProcedure body) {
  procedures_[name] = std::move(body);
}

Bytes QueryRegistry::execute(const LedgerState& state, const Query& query) const {
  auto it = procedures_.find(query.call_name);
  if (it == procedures_.end()) raise(Errc::unknown_call, "no procedure: " + query.call_name);
  return it->second(state, query.parameters);
}

}  // namespace lsa
