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

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include <doctest.h>

#include <lsa/ledger.hpp>

#include "golden.hpp"

namespace {

using lsa::Bytes;
using lsa::Digest;
using lsa::testing::load_golden;
using lsa::testing::TestRng;

Digest digest_from_hex(const std::string& hex) {
  const Bytes b = lsa::from_hex(hex);
  REQUIRE(b.size() == lsa::crypto::kSha256DigestSize);
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

std::string hex_of(const Digest& d) { return lsa::to_hex(d.data(), d.size()); }

lsa::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const lsa::Error& e) {
    return e.code();
  }
  FAIL("expected an lsa::Error");
  return lsa::Errc::io_error;
}

lsa::MerkleProof proof_from_vector(const nlohmann::json& v) {
  lsa::MerkleProof p;
  p.key = lsa::from_hex(v.at("key").get<std::string>());
  p.value = lsa::from_hex(v.at("value").get<std::string>());
  p.leaf_index = v.at("leaf_index").get<uint64_t>();
  p.leaf_count = v.at("leaf_count").get<uint64_t>();
  for (const auto& s : v.at("siblings")) {
    const std::string side = s[1].get<std::string>();
    REQUIRE((side == "LEFT" || side == "RIGHT"));
    p.siblings.emplace_back(digest_from_hex(s[0].get<std::string>()),
                            side == "LEFT" ? lsa::Side::kLeft : lsa::Side::kRight);
  }
  return p;
}

void check_proof_equal(const lsa::MerkleProof& got, const lsa::MerkleProof& want) {
  CHECK(got.key == want.key);
  CHECK(got.value == want.value);
  CHECK(got.leaf_index == want.leaf_index);
  CHECK(got.leaf_count == want.leaf_count);
  REQUIRE(got.siblings.size() == want.siblings.size());
  for (size_t i = 0; i < got.siblings.size(); ++i) {
    CHECK(got.siblings[i].first == want.siblings[i].first);
    CHECK(got.siblings[i].second == want.siblings[i].second);
  }
}

}  // namespace

TEST_CASE("merkle roots match the frozen vectors") {
  const auto vectors = load_golden("merkle_vectors.json");

  CHECK(hex_of(lsa::merkle_root({})) == vectors.at("empty_root").get<std::string>());

  const auto& single = vectors.at("single");
  lsa::Store one;
  one[lsa::from_hex(single.at("key").get<std::string>())] =
      lsa::from_hex(single.at("value").get<std::string>());
  CHECK(hex_of(lsa::merkle_root(one)) == single.at("root").get<std::string>());

  lsa::Store abc;
  abc[Bytes{'a'}] = Bytes{'1'};
  abc[Bytes{'b'}] = Bytes{'2'};
  abc[Bytes{'c'}] = Bytes{'3'};
  CHECK(hex_of(lsa::merkle_root(abc)) == vectors.at("abc_root").get<std::string>());
}

TEST_CASE("proofs over the abc store match the vectors and verify") {
  const auto vectors = load_golden("merkle_vectors.json");
  lsa::Store abc;
  abc[Bytes{'a'}] = Bytes{'1'};
  abc[Bytes{'b'}] = Bytes{'2'};
  abc[Bytes{'c'}] = Bytes{'3'};
  const Digest root = lsa::merkle_root(abc);

  for (const auto& v : vectors.at("abc_proofs")) {
    const lsa::MerkleProof want = proof_from_vector(v);
    const lsa::MerkleProof got = lsa::generate_proof(abc, want.key);
    check_proof_equal(got, want);
    CHECK(lsa::verify_proof(got, root));
  }
}

TEST_CASE("seven-leaf proofs cover odd promotion") {
  const auto vectors = load_golden("merkle_vectors.json");
  lsa::Store store;
  for (uint8_t i = 0; i < 7; ++i) store[Bytes{i}] = Bytes{uint8_t(i * 3 % 251), i};
  const Digest root = lsa::merkle_root(store);
  CHECK(hex_of(root) == vectors.at("seven_root").get<std::string>());

  for (const auto& v : vectors.at("seven_proofs")) {
    const lsa::MerkleProof want = proof_from_vector(v);
    const lsa::MerkleProof got = lsa::generate_proof(store, want.key);
    check_proof_equal(got, want);
    CHECK(lsa::verify_proof(got, root));
  }
}

TEST_CASE("tampered proofs fail verification") {
  lsa::Store store;
  for (uint8_t i = 0; i < 5; ++i) store[Bytes{i}] = Bytes{uint8_t(i + 100)};
  const Digest root = lsa::merkle_root(store);
  const lsa::MerkleProof good = lsa::generate_proof(store, Bytes{2});
  REQUIRE(lsa::verify_proof(good, root));

  lsa::MerkleProof bad = good;
  bad.value = Bytes{0x00};
  CHECK_FALSE(lsa::verify_proof(bad, root));

  bad = good;
  bad.key = Bytes{3};
  CHECK_FALSE(lsa::verify_proof(bad, root));

  bad = good;
  REQUIRE_FALSE(bad.siblings.empty());
  bad.siblings[0].first[0] ^= 0x01;
  CHECK_FALSE(lsa::verify_proof(bad, root));

  bad = good;
  bad.siblings[0].second =
      bad.siblings[0].second == lsa::Side::kLeft ? lsa::Side::kRight : lsa::Side::kLeft;
  CHECK_FALSE(lsa::verify_proof(bad, root));

  Digest other_root = root;
  other_root[31] ^= 0x01;
  CHECK_FALSE(lsa::verify_proof(good, other_root));

  CHECK(code_of([&] { lsa::generate_proof(store, Bytes{9}); }) == lsa::Errc::key_not_found);
}

TEST_CASE("every key in stores of size 1..64 proves against the root") {
  TestRng rng(0x6d65'726b);
  for (size_t n : {1, 2, 3, 4, 5, 8, 13, 31, 32, 33, 64}) {
    lsa::Store store;
    while (store.size() < n) store[rng.bytes(1 + rng.next() % 8)] = rng.bytes(rng.next() % 16);
    const Digest root = lsa::merkle_root(store);
    uint64_t index = 0;
    for (const auto& [key, value] : store) {
      const lsa::MerkleProof proof = lsa::generate_proof(store, key);
      CHECK(proof.leaf_index == index++);
      CHECK(proof.leaf_count == store.size());
      CHECK(proof.value == value);
      CHECK(lsa::verify_proof(proof, root));
    }
  }
}

TEST_CASE("block replay reproduces the frozen root sequence") {
  const auto vectors = load_golden("merkle_vectors.json");
  lsa::LedgerState state = lsa::LedgerState::genesis();
  CHECK(state.block_number == 0);
  CHECK(hex_of(state.block_root) == vectors.at("empty_root").get<std::string>());
  REQUIRE(state.history.size() == 1);
  CHECK(state.history[0].first == 0);

  for (const auto& block : vectors.at("replay")) {
    lsa::Writes writes;
    for (const auto& w : block.at("writes"))
      writes.emplace_back(lsa::from_hex(w[0].get<std::string>()),
                          lsa::from_hex(w[1].get<std::string>()));
    state = lsa::apply_block(state, writes);
    CHECK(state.block_number == block.at("block_number").get<uint64_t>());
    CHECK(hex_of(state.block_root) == block.at("root").get<std::string>());
  }
  // History keeps one entry per block including genesis.
  CHECK(state.history.size() == 1 + vectors.at("replay").size());
  CHECK(state.history.back().first == state.block_number);
}

TEST_CASE("apply_block is pure and the last write to a key wins") {
  lsa::LedgerState genesis = lsa::LedgerState::genesis();
  const lsa::Writes writes = {{Bytes{'k'}, Bytes{'1'}}, {Bytes{'k'}, Bytes{'2'}}};
  const lsa::LedgerState next = lsa::apply_block(genesis, writes);
  CHECK(next.store.at(Bytes{'k'}) == Bytes{'2'});
  CHECK(next.block_number == 1);
  CHECK(genesis.block_number == 0);
  CHECK(genesis.store.empty());

  // Write order across distinct keys does not change the committed root.
  const lsa::Writes ab = {{Bytes{'a'}, Bytes{'1'}}, {Bytes{'b'}, Bytes{'2'}}};
  const lsa::Writes ba = {{Bytes{'b'}, Bytes{'2'}}, {Bytes{'a'}, Bytes{'1'}}};
  CHECK(lsa::apply_block(genesis, ab).block_root == lsa::apply_block(genesis, ba).block_root);
}

TEST_CASE("block streams parse line by line") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path =
      (dir / ("lsa-blocks-" + std::to_string(::getpid()) + ".jsonl")).string();

  {
    std::ofstream f(path, std::ios::trunc);
    f << R"({"writes": [["61", "31"], ["62", "32"]]})" << "\n";
    f << "\n";
    f << "   \n";
    f << R"({"writes": []})" << "\n";
    f << R"({"writes": [["61", "33"]]})" << "\n";
  }
  const std::vector<lsa::Writes> blocks = lsa::load_block_stream(path);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].size() == 2);
  CHECK(blocks[1].empty());
  CHECK(blocks[2] == lsa::Writes{{Bytes{'a'}, Bytes{'3'}}});

  SUBCASE("bad lines are rejected with their line number") {
    std::ofstream f(path, std::ios::app);
    f << "{\"writes\": 5}\n";
    f.close();
    try {
      lsa::load_block_stream(path);
      FAIL("expected bad_config");
    } catch (const lsa::Error& e) {
      CHECK(e.code() == lsa::Errc::bad_config);
      CHECK(std::string(e.what()).find("line 6") != std::string::npos);
    }
  }
  SUBCASE("missing file is io_error") {
    CHECK(code_of([&] { lsa::load_block_stream(path + ".absent"); }) == lsa::Errc::io_error);
  }
  std::filesystem::remove(path);
}

TEST_CASE("builtin query procedures") {
  lsa::LedgerState state = lsa::LedgerState::genesis();
  state = lsa::apply_block(state, {{Bytes{'a'}, Bytes{'1'}},
                                   {lsa::to_bytes("revoked:cred-1"), Bytes{0x01}}});
  const lsa::QueryRegistry registry = lsa::QueryRegistry::with_builtins();

  SUBCASE("get returns the stored value, empty when absent") {
    CHECK(registry.execute(state, {"get", {{"key", Bytes{'a'}}}}) == Bytes{'1'});
    CHECK(registry.execute(state, {"get", {{"key", Bytes{'z'}}}}) == Bytes{});
  }
  SUBCASE("revocation_status is one status byte") {
    CHECK(registry.execute(state, {"revocation_status",
                                   {{"credential_id", lsa::to_bytes("cred-1")}}}) ==
          Bytes{0x01});
    CHECK(registry.execute(state, {"revocation_status",
                                   {{"credential_id", lsa::to_bytes("cred-2")}}}) ==
          Bytes{0x00});
  }
  SUBCASE("list_root returns the committed root") {
    const Bytes root = registry.execute(state, {"list_root", {}});
    CHECK(root == Bytes(state.block_root.begin(), state.block_root.end()));
    CHECK(code_of([&] {
            registry.execute(state, {"list_root", {{"key", Bytes{'a'}}}});
          }) == lsa::Errc::invalid_parameters);
  }
  SUBCASE("parameter shape is enforced") {
    CHECK(code_of([&] { registry.execute(state, {"get", {}}); }) ==
          lsa::Errc::invalid_parameters);
    CHECK(code_of([&] {
            registry.execute(state, {"get", {{"key", Bytes{'a'}}, {"key", Bytes{'b'}}}});
          }) == lsa::Errc::invalid_parameters);
    CHECK(code_of([&] { registry.execute(state, {"get", {{"nope", Bytes{'a'}}}}); }) ==
          lsa::Errc::invalid_parameters);
  }
  SUBCASE("unknown calls are rejected") {
    CHECK(code_of([&] { registry.execute(state, {"no_such_call", {}}); }) ==
          lsa::Errc::unknown_call);
  }
  SUBCASE("custom procedures can be registered") {
    lsa::QueryRegistry r = lsa::QueryRegistry::with_builtins();
    r.register_procedure("block_number", [](const lsa::LedgerState& s, const auto&) {
      Bytes out;
      lsa::put_u64(out, s.block_number);
      return out;
    });
    Bytes expected;
    lsa::put_u64(expected, 1);
    CHECK(r.execute(state, {"block_number", {}}) == expected);
  }
}
