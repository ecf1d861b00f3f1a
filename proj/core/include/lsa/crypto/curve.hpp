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

// G1: y^2 = x^3 + 4 over Fp. G2: y^2 = x^3 + 4(u+1) over Fp2 (the sextic
// twist carrying the order-r subgroup used for signatures).
//
// Serialization is the common compressed big-endian form: 48 bytes for G1,
// 96 bytes for G2 (x.c1 || x.c0), top three bits of the first byte being
// compressed / infinity / lexicographically-largest-y flags.

#include <optional>

#include <lsa/crypto/fields.hpp>
#include <lsa/support.hpp>

namespace lsa::crypto {

inline constexpr size_t kG1CompressedSize = 48;
inline constexpr size_t kG2CompressedSize = 96;

struct G1Affine {
  Fp x, y;
  bool infinity = true;

  static G1Affine identity() { return {}; }
  bool operator==(const G1Affine& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

struct G2Affine {
  Fp2 x, y;
  bool infinity = true;

  static G2Affine identity() { return {}; }
  bool operator==(const G2Affine& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

// Jacobian coordinates (x = X/Z^2, y = Y/Z^3); Z = 0 encodes infinity.
struct G1Jac {
  Fp X, Y, Z;
  static G1Jac identity() { return {Fp::one(), Fp::one(), Fp::zero()}; }
  bool is_identity() const { return Z.is_zero(); }
};

struct G2Jac {
  Fp2 X, Y, Z;
  static G2Jac identity() { return {Fp2::one(), Fp2::one(), Fp2::zero()}; }
  bool is_identity() const { return Z.is_zero(); }
};

// Conventional group generators (decompressed from their standard encodings
// at first use; subgroup membership is revalidated by the test suite).
const G1Affine& g1_generator();
const G2Affine& g2_generator();

G1Jac g1_to_jac(const G1Affine& p);
G2Jac g2_to_jac(const G2Affine& p);
G1Affine g1_to_affine(const G1Jac& p);
G2Affine g2_to_affine(const G2Jac& p);

G1Jac g1_dbl(const G1Jac& p);
G2Jac g2_dbl(const G2Jac& p);
G1Jac g1_add(const G1Jac& p, const G1Jac& q);
G2Jac g2_add(const G2Jac& p, const G2Jac& q);
G1Jac g1_neg(const G1Jac& p);
G2Jac g2_neg(const G2Jac& p);
inline G1Affine g1_neg(const G1Affine& p) { return p.infinity ? p : G1Affine{p.x, -p.y, false}; }
inline G2Affine g2_neg(const G2Affine& p) { return p.infinity ? p : G2Affine{p.x, -p.y, false}; }

template <size_t N>
G1Jac g1_mul(const G1Jac& p, const wide::Limbs<N>& k) {
  G1Jac acc = G1Jac::identity();
  for (size_t i = wide::bit_length(k); i-- > 0;) {
    acc = g1_dbl(acc);
    if (wide::bit(k, i)) acc = g1_add(acc, p);
  }
  return acc;
}

template <size_t N>
G2Jac g2_mul(const G2Jac& p, const wide::Limbs<N>& k) {
  G2Jac acc = G2Jac::identity();
  for (size_t i = wide::bit_length(k); i-- > 0;) {
    acc = g2_dbl(acc);
    if (wide::bit(k, i)) acc = g2_add(acc, p);
  }
  return acc;
}

inline G1Jac g1_mul(const G1Jac& p, const Scalar& s) { return g1_mul(p, s.l); }
inline G2Jac g2_mul(const G2Jac& p, const Scalar& s) { return g2_mul(p, s.l); }

// True iff the point lies in the order-r subgroup (identity included).
bool g1_in_subgroup(const G1Affine& p);
bool g2_in_subgroup(const G2Affine& p);

bool g1_on_curve(const G1Affine& p);
bool g2_on_curve(const G2Affine& p);

// Multiplies by the twist cofactor, mapping any curve point into the
// order-r subgroup (hash-to-curve's final step).
G2Jac g2_clear_cofactor(const G2Jac& p);

// Compressed serialization. Deserialization enforces canonical field
// elements, curve membership, canonical infinity encoding, and (by
// default) subgroup membership; any violation yields nullopt.
Bytes g1_compress(const G1Affine& p);
Bytes g2_compress(const G2Affine& p);
std::optional<G1Affine> g1_decompress(const Bytes& in, bool subgroup_check = true);
std::optional<G2Affine> g2_decompress(const Bytes& in, bool subgroup_check = true);

}  // namespace lsa::crypto
