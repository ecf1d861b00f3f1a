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

// Multi-signature scheme over BLS12-381: minimal-public-key ciphersuite
// (48-byte public keys in G1, 96-byte signatures in G2) with proof of
// possession. All signers sign the same message; aggregation is the plain
// group sum, which is safe against rogue keys only because admission to a
// trust store requires a verified proof of possession.

#include <vector>

#include <lsa/crypto/curve.hpp>
#include <lsa/support.hpp>

namespace lsa::mcrypto {

inline constexpr size_t kSeedSize = 32;
inline constexpr size_t kPublicKeySize = crypto::kG1CompressedSize;
inline constexpr size_t kSignatureSize = crypto::kG2CompressedSize;

struct SecretKey {
  crypto::Scalar scalar;

  Bytes to_bytes() const;
  // Throws Errc::bad_point_encoding on wrong length or value >= group order.
  static SecretKey from_bytes(const Bytes& in);
};

struct PublicKey {
  crypto::G1Affine point;

  Bytes to_bytes() const;
  // Throws Errc::bad_point_encoding on malformed input.
  static PublicKey from_bytes(const Bytes& in);
  bool operator==(const PublicKey& o) const { return point == o.point; }
};

struct Signature {
  crypto::G2Affine point;

  Bytes to_bytes() const;
  // Throws Errc::bad_point_encoding on malformed input.
  static Signature from_bytes(const Bytes& in);
  bool operator==(const Signature& o) const { return point == o.point; }
};

struct KeyPair {
  SecretKey secret_key;
  PublicKey public_key;
  Signature proof_of_possession;
};

// Deterministic key derivation from a 32-byte seed; the derived scalar is
// never zero (re-derives internally). Throws Errc::bad_config on short seed.
KeyPair keygen(const Bytes& seed);

// The scalar-derivation step of keygen, without the group operations.
SecretKey derive_secret_key(const Bytes& seed);

// Deterministic signature over hash-to-curve of the message.
Signature sign(const SecretKey& sk, const Bytes& message);

bool verify_single(const PublicKey& pk, const Bytes& message, const Signature& sig);

// Group sum of the signature elements; order-independent.
// Throws Errc::empty_aggregate on an empty list.
Signature aggregate_signatures(const std::vector<Signature>& sigs);

// True iff `aggregate` is the sum of signatures by exactly the given key
// set over the one common message.
bool verify_aggregate(const std::vector<PublicKey>& pks, const Bytes& message,
                      const Signature& aggregate);

// Proof of possession: a signature over the public key's own encoding under
// a dedicated domain separation tag.
Signature pop_prove(const SecretKey& sk, const PublicKey& pk);
bool pop_verify(const PublicKey& pk, const Signature& pop);

// Byte-level variants, total: malformed encodings yield false, never throw.
bool verify_single(const Bytes& pk, const Bytes& message, const Bytes& sig);
bool verify_aggregate(const std::vector<Bytes>& pks, const Bytes& message,
                      const Bytes& aggregate);
bool pop_verify(const Bytes& pk, const Bytes& pop);

}  // namespace lsa::mcrypto
