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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lsa/attestation.hpp"
#include "lsa/crypto/hash_to_curve.hpp"
#include "lsa/crypto/pairing.hpp"
#include "lsa/crypto/sha256.hpp"
#include "lsa/ledger.hpp"
#include "lsa/mcrypto.hpp"

namespace {

using lsa::Bytes;

Bytes message_bytes(size_t n) {
  Bytes msg(n);
  for (size_t i = 0; i < n; ++i) msg[i] = static_cast<uint8_t>(i * 31 + 7);
  return msg;
}

std::vector<lsa::mcrypto::KeyPair> fixture_keys(size_t n) {
  std::vector<lsa::mcrypto::KeyPair> keys;
  keys.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    keys.push_back(lsa::mcrypto::keygen(Bytes(32, static_cast<uint8_t>(i + 1))));
  }
  return keys;
}

lsa::Store fixture_store(size_t entries) {
  lsa::Store store;
  for (size_t i = 0; i < entries; ++i) {
    Bytes key = lsa::to_bytes("key-" + std::to_string(i));
    store[key] = lsa::to_bytes("value-" + std::to_string(i));
  }
  return store;
}

lsa::ClaimStatement fixture_claim() {
  lsa::ClaimStatement claim;
  claim.claim_kind = lsa::ClaimKind::kContractCall;
  claim.epoch = 1000;
  claim.block_number = 42;
  claim.query.call_name = "revocation_status";
  claim.query.parameters = {{"credential_id", lsa::to_bytes("cred-12345")}};
  claim.data = message_bytes(64);
  return claim;
}

void Sha256_1KiB(benchmark::State& state) {
  Bytes msg = message_bytes(1024);
  for (auto _ : state) {
    auto digest = lsa::crypto::sha256(msg);
    benchmark::DoNotOptimize(digest);
  }
}
BENCHMARK(Sha256_1KiB);

void HashToCurveG2(benchmark::State& state) {
  Bytes msg = message_bytes(64);
  for (auto _ : state) {
    auto point = lsa::crypto::hash_to_curve_g2(msg, lsa::crypto::kDstSignature);
    benchmark::DoNotOptimize(point);
  }
}
BENCHMARK(HashToCurveG2)->Unit(benchmark::kMicrosecond);

void Pairing(benchmark::State& state) {
  const auto& p = lsa::crypto::g1_generator();
  const auto& q = lsa::crypto::g2_generator();
  for (auto _ : state) {
    auto value = lsa::crypto::pairing(p, q);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(Pairing)->Unit(benchmark::kMillisecond);

void Keygen(benchmark::State& state) {
  Bytes seed(32, 0x5a);
  for (auto _ : state) {
    auto kp = lsa::mcrypto::keygen(seed);
    benchmark::DoNotOptimize(kp);
  }
}
BENCHMARK(Keygen)->Unit(benchmark::kMillisecond);

void Sign(benchmark::State& state) {
  auto keys = fixture_keys(1);
  Bytes msg = lsa::encode_claim(fixture_claim());
  for (auto _ : state) {
    auto sig = lsa::mcrypto::sign(keys[0].secret_key, msg);
    benchmark::DoNotOptimize(sig);
  }
}
BENCHMARK(Sign)->Unit(benchmark::kMillisecond);

void VerifySingle(benchmark::State& state) {
  auto keys = fixture_keys(1);
  Bytes msg = lsa::encode_claim(fixture_claim());
  auto sig = lsa::mcrypto::sign(keys[0].secret_key, msg);
  for (auto _ : state) {
    bool ok = lsa::mcrypto::verify_single(keys[0].public_key, msg, sig);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(VerifySingle)->Unit(benchmark::kMillisecond);

void AggregateSignatures(benchmark::State& state) {
  auto keys = fixture_keys(static_cast<size_t>(state.range(0)));
  Bytes msg = lsa::encode_claim(fixture_claim());
  std::vector<lsa::mcrypto::Signature> sigs;
  sigs.reserve(keys.size());
  for (const auto& kp : keys) sigs.push_back(lsa::mcrypto::sign(kp.secret_key, msg));
  for (auto _ : state) {
    auto agg = lsa::mcrypto::aggregate_signatures(sigs);
    benchmark::DoNotOptimize(agg);
  }
}
BENCHMARK(AggregateSignatures)->Arg(5)->Arg(20)->Unit(benchmark::kMicrosecond);

void VerifyAggregate(benchmark::State& state) {
  auto keys = fixture_keys(static_cast<size_t>(state.range(0)));
  Bytes msg = lsa::encode_claim(fixture_claim());
  std::vector<lsa::mcrypto::Signature> sigs;
  std::vector<lsa::mcrypto::PublicKey> pks;
  for (const auto& kp : keys) {
    sigs.push_back(lsa::mcrypto::sign(kp.secret_key, msg));
    pks.push_back(kp.public_key);
  }
  auto agg = lsa::mcrypto::aggregate_signatures(sigs);
  for (auto _ : state) {
    bool ok = lsa::mcrypto::verify_aggregate(pks, msg, agg);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(VerifyAggregate)->Arg(1)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void PopVerify(benchmark::State& state) {
  auto keys = fixture_keys(1);
  for (auto _ : state) {
    bool ok = lsa::mcrypto::pop_verify(keys[0].public_key, keys[0].proof_of_possession);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(PopVerify)->Unit(benchmark::kMillisecond);

void EncodeClaim(benchmark::State& state) {
  auto claim = fixture_claim();
  for (auto _ : state) {
    auto bytes = lsa::encode_claim(claim);
    benchmark::DoNotOptimize(bytes);
  }
}
BENCHMARK(EncodeClaim);

void DecodeClaim(benchmark::State& state) {
  auto bytes = lsa::encode_claim(fixture_claim());
  for (auto _ : state) {
    auto claim = lsa::decode_claim(bytes);
    benchmark::DoNotOptimize(claim);
  }
}
BENCHMARK(DecodeClaim);

void MerkleRoot(benchmark::State& state) {
  auto store = fixture_store(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    auto root = lsa::merkle_root(store);
    benchmark::DoNotOptimize(root);
  }
}
BENCHMARK(MerkleRoot)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void GenerateProof(benchmark::State& state) {
  auto store = fixture_store(static_cast<size_t>(state.range(0)));
  Bytes key = lsa::to_bytes("key-0");
  for (auto _ : state) {
    auto proof = lsa::generate_proof(store, key);
    benchmark::DoNotOptimize(proof);
  }
}
BENCHMARK(GenerateProof)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void VerifyMerkleProof(benchmark::State& state) {
  auto store = fixture_store(64);
  auto root = lsa::merkle_root(store);
  auto proof = lsa::generate_proof(store, lsa::to_bytes("key-0"));
  for (auto _ : state) {
    bool ok = lsa::verify_proof(proof, root);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(VerifyMerkleProof);

}  // namespace

BENCHMARK_MAIN();
