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

#include <lsa/crypto/hash_to_curve.hpp>
#include <lsa/crypto/sha256.hpp>

#include <cassert>

namespace lsa::crypto {

Bytes expand_message_xmd(const Bytes& msg, const Bytes& dst, size_t len_bytes) {
  assert(!dst.empty() && dst.size() <= 255);
  assert(len_bytes > 0 && len_bytes <= 255 * kSha256DigestSize);
  size_t ell = (len_bytes + kSha256DigestSize - 1) / kSha256DigestSize;

  Bytes dst_prime = dst;
  dst_prime.push_back(static_cast<uint8_t>(dst.size()));

  Sha256 h0;
  uint8_t z_pad[kSha256BlockSize] = {};
  h0.update(z_pad, sizeof z_pad);
  h0.update(msg);
  uint8_t l_i_b[3] = {static_cast<uint8_t>(len_bytes >> 8), static_cast<uint8_t>(len_bytes), 0};
  h0.update(l_i_b, 3);
  h0.update(dst_prime);
  Digest b0 = h0.finish();

  Bytes out;
  out.reserve(ell * kSha256DigestSize);
  Digest prev;
  for (size_t i = 1; i <= ell; ++i) {
    Sha256 hi;
    if (i == 1) {
      hi.update(b0.data(), b0.size());
    } else {
      uint8_t x[kSha256DigestSize];
      for (size_t j = 0; j < kSha256DigestSize; ++j) x[j] = b0[j] ^ prev[j];
      hi.update(x, sizeof x);
    }
    uint8_t idx = static_cast<uint8_t>(i);
    hi.update(&idx, 1);
    hi.update(dst_prime);
    prev = hi.finish();
    out.insert(out.end(), prev.begin(), prev.end());
  }
  out.resize(len_bytes);
  return out;
}

std::vector<Fp2> hash_to_field_fp2(const Bytes& msg, const Bytes& dst, size_t count) {
  constexpr size_t kL = 64;  // ceil((381 + 128) / 8)
  Bytes uniform = expand_message_xmd(msg, dst, count * 2 * kL);
  std::vector<Fp2> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    Fp c0 = fp_from_bytes_reduce(uniform.data() + 2 * i * kL, kL);
    Fp c1 = fp_from_bytes_reduce(uniform.data() + (2 * i + 1) * kL, kL);
    out.push_back(Fp2{c0, c1});
  }
  return out;
}

namespace {

Fp2 curve_g(const Fp2& x) {
  static const Fp2 b = fp2_mul_by_xi(Fp2{fp_from_u64(4), Fp::zero()});
  return x * fp2_sqr(x) + b;
}

// Z and the derived map constants. Z = -1 satisfies the generic-map
// criteria for this curve (g(Z) != 0, -(3Z^2)/(4 g(Z)) a nonzero square,
// g(-Z/2) a square); the test suite re-checks them.
struct SvdwParams {
  Fp2 z;
  Fp2 c1, c2, c3, c4;
};

const SvdwParams& svdw_params() {
  static const SvdwParams params = [] {
    SvdwParams s;
    s.z = Fp2{-Fp::one(), Fp::zero()};
    s.c1 = curve_g(s.z);
    const Fp inv2 = fp_inv(fp_from_u64(2));
    s.c2 = fp2_scale(-s.z, inv2);
    Fp2 three_z2 = fp2_scale(fp2_sqr(s.z), fp_from_u64(3));
    bool ok = fp2_sqrt(s.c3, -(s.c1 * three_z2));
    assert(ok);
    (void)ok;
    if (fp2_sgn0(s.c3) == 1) s.c3 = -s.c3;
    s.c4 = fp2_scale(-s.c1, fp_from_u64(4)) * fp2_inv(three_z2);
    return s;
  }();
  return params;
}

Fp2 inv0(const Fp2& a) { return fp2_inv(a); }  // fp_inv(0) = 0, so inv0(0) = 0

}  // namespace

G2Affine map_to_curve_svdw(const Fp2& u) {
  const SvdwParams& s = svdw_params();
  Fp2 tv1 = fp2_sqr(u) * s.c1;
  Fp2 tv2 = Fp2::one() + tv1;
  tv1 = Fp2::one() - tv1;
  Fp2 tv3 = inv0(tv1 * tv2);
  Fp2 tv4 = u * tv1 * tv3 * s.c3;
  Fp2 x1 = s.c2 - tv4;
  Fp2 x;
  if (fp2_is_square(curve_g(x1))) {
    x = x1;
  } else {
    Fp2 x2 = s.c2 + tv4;
    if (fp2_is_square(curve_g(x2))) {
      x = x2;
    } else {
      x = s.z + s.c4 * fp2_sqr(fp2_sqr(tv2) * tv3);
    }
  }
  Fp2 y;
  bool ok = fp2_sqrt(y, curve_g(x));
  assert(ok);
  (void)ok;
  if (fp2_sgn0(u) != fp2_sgn0(y)) y = -y;
  return {x, y, false};
}

G2Affine hash_to_curve_g2(const Bytes& msg, const Bytes& dst) {
  std::vector<Fp2> u = hash_to_field_fp2(msg, dst, 2);
  G2Affine q0 = map_to_curve_svdw(u[0]);
  G2Affine q1 = map_to_curve_svdw(u[1]);
  G2Jac sum = g2_add(g2_to_jac(q0), g2_to_jac(q1));
  return g2_to_affine(g2_clear_cofactor(sum));
}

}  // namespace lsa::crypto
