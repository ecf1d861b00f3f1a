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

#include <lsa/crypto/curve.hpp>

namespace lsa::crypto {

namespace {

// Compressed encodings of the conventional generators. The twist cofactor
// has no closed form as compact as the curve family polynomials, so it is
// pinned too; both are property-checked by the test suite (order, subgroup).
constexpr char kG1GenHex[] =
    "97f1d3a73197d7942695638c4fa9ac0fc3688c4f9774b905a14e3a3f171bac58"
    "6c55e83ff97a1aeffb3af00adb22c6bb";
constexpr char kG2GenHex[] =
    "93e02b6052719f607dacd3a088274f65596bd0d09920b61ab5da61bbdc7f5049"
    "334cf11213945d57e5ac7d055d042b7e024aa2b2f08f0a91260805272dc51051"
    "c6e47ad4fa403b02b4510b647ae3d1770bac0326a805bbefd48056c8c121bdb8";
constexpr char kH2Hex[] =
    "05d543a95414e7f1091d50792876a202cd91de4547085abaa68a205b2e5a7ddf"
    "a628f1cb4d9e82ef21537e293a6691ae1616ec6e786f0c70cf1c38e31c7238e5";

Fp fp_b() { return fp_from_u64(4); }

Fp2 fp2_b() { return fp2_mul_by_xi(Fp2{fp_from_u64(4), Fp::zero()}); }

wide::Limbs<8> parse_h2() {
  Bytes raw = from_hex(kH2Hex);
  wide::Limbs<8> out{};
  for (size_t i = 0; i < 8; ++i) {
    uint64_t limb = 0;
    for (int j = 0; j < 8; ++j) limb = limb << 8 | raw[8 * i + j];
    out[7 - i] = limb;
  }
  return out;
}

}  // namespace

const G1Affine& g1_generator() {
  static const G1Affine gen = *g1_decompress(from_hex(kG1GenHex));
  return gen;
}

const G2Affine& g2_generator() {
  static const G2Affine gen = *g2_decompress(from_hex(kG2GenHex));
  return gen;
}

G1Jac g1_to_jac(const G1Affine& p) {
  if (p.infinity) return G1Jac::identity();
  return {p.x, p.y, Fp::one()};
}

G2Jac g2_to_jac(const G2Affine& p) {
  if (p.infinity) return G2Jac::identity();
  return {p.x, p.y, Fp2::one()};
}

G1Affine g1_to_affine(const G1Jac& p) {
  if (p.is_identity()) return G1Affine::identity();
  Fp zinv = fp_inv(p.Z);
  Fp zinv2 = fp_sqr(zinv);
  return {p.X * zinv2, p.Y * zinv2 * zinv, false};
}

G2Affine g2_to_affine(const G2Jac& p) {
  if (p.is_identity()) return G2Affine::identity();
  Fp2 zinv = fp2_inv(p.Z);
  Fp2 zinv2 = fp2_sqr(zinv);
  return {p.X * zinv2, p.Y * zinv2 * zinv, false};
}

// Doubling and addition specialized for a = 0 short Weierstrass curves,
// in Jacobian coordinates. Shapes are identical for both fields; kept as
// templates to avoid divergence.
namespace {

template <class Jac, class F>
Jac jac_dbl(const Jac& p) {
  if (p.is_identity()) return p;
  F a = p.X * p.X;
  F b = p.Y * p.Y;
  F c = b * b;
  F d = (p.X + b) * (p.X + b) - a - c;
  d = d + d;
  F e = a + a + a;
  F f = e * e;
  F x3 = f - (d + d);
  F c8 = c + c;
  c8 = c8 + c8;
  c8 = c8 + c8;
  F y3 = e * (d - x3) - c8;
  F z3 = p.Y * p.Z;
  z3 = z3 + z3;
  return {x3, y3, z3};
}

template <class Jac, class F>
Jac jac_add(const Jac& p, const Jac& q) {
  if (p.is_identity()) return q;
  if (q.is_identity()) return p;
  F z1z1 = p.Z * p.Z;
  F z2z2 = q.Z * q.Z;
  F u1 = p.X * z2z2;
  F u2 = q.X * z1z1;
  F s1 = p.Y * q.Z * z2z2;
  F s2 = q.Y * p.Z * z1z1;
  if (u1 == u2) {
    if (s1 == s2) return jac_dbl<Jac, F>(p);
    return Jac::identity();
  }
  F h = u2 - u1;
  F i = h + h;
  i = i * i;
  F j = h * i;
  F r = s2 - s1;
  r = r + r;
  F v = u1 * i;
  F x3 = r * r - j - (v + v);
  F s1j = s1 * j;
  F y3 = r * (v - x3) - (s1j + s1j);
  F z3 = ((p.Z + q.Z) * (p.Z + q.Z) - z1z1 - z2z2) * h;
  return {x3, y3, z3};
}

}  // namespace

G1Jac g1_dbl(const G1Jac& p) { return jac_dbl<G1Jac, Fp>(p); }
G2Jac g2_dbl(const G2Jac& p) { return jac_dbl<G2Jac, Fp2>(p); }
G1Jac g1_add(const G1Jac& p, const G1Jac& q) { return jac_add<G1Jac, Fp>(p, q); }
G2Jac g2_add(const G2Jac& p, const G2Jac& q) { return jac_add<G2Jac, Fp2>(p, q); }
G1Jac g1_neg(const G1Jac& p) { return {p.X, -p.Y, p.Z}; }
G2Jac g2_neg(const G2Jac& p) { return {p.X, -p.Y, p.Z}; }

bool g1_on_curve(const G1Affine& p) {
  if (p.infinity) return true;
  return fp_sqr(p.y) == p.x * fp_sqr(p.x) + fp_b();
}

bool g2_on_curve(const G2Affine& p) {
  if (p.infinity) return true;
  return fp2_sqr(p.y) == p.x * fp2_sqr(p.x) + fp2_b();
}

bool g1_in_subgroup(const G1Affine& p) {
  if (p.infinity) return true;
  return g1_mul(g1_to_jac(p), params::kR).is_identity();
}

bool g2_in_subgroup(const G2Affine& p) {
  if (p.infinity) return true;
  return g2_mul(g2_to_jac(p), params::kR).is_identity();
}

G2Jac g2_clear_cofactor(const G2Jac& p) {
  static const wide::Limbs<8> h2 = parse_h2();
  return g2_mul(p, h2);
}

// --------------------------------------------------------------------------
// Serialization
// --------------------------------------------------------------------------

namespace {

constexpr uint8_t kFlagCompressed = 0x80;
constexpr uint8_t kFlagInfinity = 0x40;
constexpr uint8_t kFlagYLargest = 0x20;

}  // namespace

Bytes g1_compress(const G1Affine& p) {
  Bytes out(kG1CompressedSize, 0);
  if (p.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  fp_to_bytes(out.data(), p.x);
  out[0] |= kFlagCompressed;
  if (fp_is_lexicographically_largest(p.y)) out[0] |= kFlagYLargest;
  return out;
}

Bytes g2_compress(const G2Affine& p) {
  Bytes out(kG2CompressedSize, 0);
  if (p.infinity) {
    out[0] = kFlagCompressed | kFlagInfinity;
    return out;
  }
  fp_to_bytes(out.data(), p.x.c1);
  fp_to_bytes(out.data() + 48, p.x.c0);
  out[0] |= kFlagCompressed;
  if (fp2_is_lexicographically_largest(p.y)) out[0] |= kFlagYLargest;
  return out;
}

std::optional<G1Affine> g1_decompress(const Bytes& in, bool subgroup_check) {
  if (in.size() != kG1CompressedSize) return std::nullopt;
  uint8_t flags = in[0];
  if ((flags & kFlagCompressed) == 0) return std::nullopt;
  Bytes body = in;
  body[0] &= 0x1f;
  if (flags & kFlagInfinity) {
    if (flags & kFlagYLargest) return std::nullopt;
    for (uint8_t b : body)
      if (b != 0) return std::nullopt;
    return G1Affine::identity();
  }
  Fp x;
  if (!fp_from_bytes(x, body.data())) return std::nullopt;
  Fp rhs = x * fp_sqr(x) + fp_b();
  Fp y = fp_sqrt_candidate(rhs);
  if (fp_sqr(y) != rhs) return std::nullopt;
  bool want_largest = (flags & kFlagYLargest) != 0;
  if (fp_is_lexicographically_largest(y) != want_largest) y = -y;
  G1Affine p{x, y, false};
  if (subgroup_check && !g1_in_subgroup(p)) return std::nullopt;
  return p;
}

std::optional<G2Affine> g2_decompress(const Bytes& in, bool subgroup_check) {
  if (in.size() != kG2CompressedSize) return std::nullopt;
  uint8_t flags = in[0];
  if ((flags & kFlagCompressed) == 0) return std::nullopt;
  Bytes body = in;
  body[0] &= 0x1f;
  if (flags & kFlagInfinity) {
    if (flags & kFlagYLargest) return std::nullopt;
    for (uint8_t b : body)
      if (b != 0) return std::nullopt;
    return G2Affine::identity();
  }
  Fp xc1, xc0;
  if (!fp_from_bytes(xc1, body.data())) return std::nullopt;
  if (!fp_from_bytes(xc0, body.data() + 48)) return std::nullopt;
  Fp2 x{xc0, xc1};
  Fp2 rhs = x * fp2_sqr(x) + fp2_b();
  Fp2 y;
  if (!fp2_sqrt(y, rhs)) return std::nullopt;
  bool want_largest = (flags & kFlagYLargest) != 0;
  if (fp2_is_lexicographically_largest(y) != want_largest) y = -y;
  G2Affine p{x, y, false};
  if (subgroup_check && !g2_in_subgroup(p)) return std::nullopt;
  return p;
}

}  // namespace lsa::crypto
