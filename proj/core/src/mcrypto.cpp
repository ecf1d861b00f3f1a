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

#include <lsa/mcrypto.hpp>

#include <lsa/crypto/hash_to_curve.hpp>
#include <lsa/crypto/pairing.hpp>
#include <lsa/crypto/sha256.hpp>

namespace lsa::mcrypto {

using namespace lsa::crypto;

Bytes SecretKey::to_bytes() const {
  Bytes out(32);
  scalar_to_bytes(out.data(), scalar);
  return out;
}

SecretKey SecretKey::from_bytes(const Bytes& in) {
  if (in.size() != 32) raise(Errc::bad_point_encoding, "secret key must be 32 bytes");
  Scalar s = scalar_from_bytes_reduce(in.data(), in.size());
  Bytes canonical(32);
  scalar_to_bytes(canonical.data(), s);
  if (canonical != in) raise(Errc::bad_point_encoding, "secret key not canonical");
  return {s};
}

Bytes PublicKey::to_bytes() const { return g1_compress(point); }

PublicKey PublicKey::from_bytes(const Bytes& in) {
  auto p = g1_decompress(in);
  if (!p) raise(Errc::bad_point_encoding, "malformed public key");
  return {*p};
}

Bytes Signature::to_bytes() const { return g2_compress(point); }

Signature Signature::from_bytes(const Bytes& in) {
  auto p = g2_decompress(in);
  if (!p) raise(Errc::bad_point_encoding, "malformed signature");
  return {*p};
}

SecretKey derive_secret_key(const Bytes& seed) {
  if (seed.size() < kSeedSize) raise(Errc::bad_config, "keygen seed must be at least 32 bytes");
  static const Bytes kSalt = to_bytes("BLS-SIG-KEYGEN-SALT-");
  constexpr size_t kScalarBytes = 48;

  Bytes ikm = seed;
  ikm.push_back(0x00);
  Bytes info = {0x00, kScalarBytes};

  Bytes salt = kSalt;
  Scalar sk{};
  do {
    Digest d = sha256(salt);
    salt.assign(d.begin(), d.end());
    Digest prk = hkdf_extract(salt, ikm);
    Bytes okm = hkdf_expand(prk, info, kScalarBytes);
    sk = scalar_from_bytes_reduce(okm.data(), okm.size());
  } while (sk.is_zero());
  return {sk};
}

KeyPair keygen(const Bytes& seed) {
  KeyPair kp;
  kp.secret_key = derive_secret_key(seed);
  kp.public_key = {g1_to_affine(g1_mul(g1_to_jac(g1_generator()), kp.secret_key.scalar))};
  kp.proof_of_possession = pop_prove(kp.secret_key, kp.public_key);
  return kp;
}

Signature sign(const SecretKey& sk, const Bytes& message) {
  G2Affine h = hash_to_curve_g2(message, kDstSignature);
  return {g2_to_affine(g2_mul(g2_to_jac(h), sk.scalar))};
}

namespace {

// e(pk, H(m)) == e(G1, sig), checked as e(pk, H(m)) * e(-G1, sig) == 1.
bool check_pairing_equation(const G1Affine& pk, const G2Affine& h, const G2Affine& sig) {
  if (pk.infinity) return false;
  return pairing_check({{pk, h}, {g1_neg(g1_generator()), sig}});
}

}  // namespace

bool verify_single(const PublicKey& pk, const Bytes& message, const Signature& sig) {
  G2Affine h = hash_to_curve_g2(message, kDstSignature);
  return check_pairing_equation(pk.point, h, sig.point);
}

Signature aggregate_signatures(const std::vector<Signature>& sigs) {
  if (sigs.empty()) raise(Errc::empty_aggregate, "cannot aggregate zero signatures");
  G2Jac acc = G2Jac::identity();
  for (const Signature& s : sigs) acc = g2_add(acc, g2_to_jac(s.point));
  return {g2_to_affine(acc)};
}

bool verify_aggregate(const std::vector<PublicKey>& pks, const Bytes& message,
                      const Signature& aggregate) {
  if (pks.empty()) return false;
  G1Jac apk = G1Jac::identity();
  for (const PublicKey& pk : pks) {
    if (pk.point.infinity) return false;
    apk = g1_add(apk, g1_to_jac(pk.point));
  }
  G2Affine h = hash_to_curve_g2(message, kDstSignature);
  return check_pairing_equation(g1_to_affine(apk), h, aggregate.point);
}

Signature pop_prove(const SecretKey& sk, const PublicKey& pk) {
  G2Affine h = hash_to_curve_g2(pk.to_bytes(), kDstProofOfPossession);
  return {g2_to_affine(g2_mul(g2_to_jac(h), sk.scalar))};
}

bool pop_verify(const PublicKey& pk, const Signature& pop) {
  G2Affine h = hash_to_curve_g2(pk.to_bytes(), kDstProofOfPossession);
  return check_pairing_equation(pk.point, h, pop.point);
}

bool verify_single(const Bytes& pk, const Bytes& message, const Bytes& sig) {
  auto p = g1_decompress(pk);
  auto s = g2_decompress(sig);
  if (!p || !s) return false;
  return verify_single(PublicKey{*p}, message, Signature{*s});
}

bool verify_aggregate(const std::vector<Bytes>& pks, const Bytes& message,
                      const Bytes& aggregate) {
  std::vector<PublicKey> keys;
  keys.reserve(pks.size());
  for (const Bytes& b : pks) {
    auto p = g1_decompress(b);
    if (!p) return false;
    keys.push_back({*p});
  }
  auto s = g2_decompress(aggregate);
  if (!s) return false;
  return verify_aggregate(keys, message, Signature{*s});
}

bool pop_verify(const Bytes& pk, const Bytes& pop) {
  auto p = g1_decompress(pk);
  auto s = g2_decompress(pop);
  if (!p || !s) return false;
  return pop_verify(PublicKey{*p}, Signature{*s});
}

}  // namespace lsa::mcrypto
