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

#include <lsa/crypto/fields.hpp>

namespace lsa::crypto {

using wide::Limbs;

namespace {

// u/2 mod p assuming u < p; p odd so odd u gets the (u+p)/2 branch.
void half_mod_p(Limbs<6>& u) {
  if (u[0] & 1) {
    uint64_t carry = wide::add(u, u, params::kP);
    u = wide::shr1(u);
    u[5] |= carry << 63;
  } else {
    u = wide::shr1(u);
  }
}

void sub_mod_p(Limbs<6>& out, const Limbs<6>& a, const Limbs<6>& b) {
  if (wide::sub(out, a, b) != 0) wide::add(out, out, params::kP);
}

}  // namespace

Fp fp_inv(const Fp& x) {
  if (x.is_zero()) return Fp::zero();
  // Binary extended GCD on the canonical value. Invariants: a = u * x0,
  // b = v * x0 (mod p); terminates with gcd(a, b) = 1 in a or b.
  Limbs<6> a = fp_to_canonical(x);
  Limbs<6> b = params::kP;
  Limbs<6> u{1, 0, 0, 0, 0, 0};
  Limbs<6> v{};
  Limbs<6> one{1, 0, 0, 0, 0, 0};
  while (a != one && b != one) {
    while ((a[0] & 1) == 0) {
      a = wide::shr1(a);
      half_mod_p(u);
    }
    while ((b[0] & 1) == 0) {
      b = wide::shr1(b);
      half_mod_p(v);
    }
    if (wide::geq(a, b)) {
      wide::sub(a, a, b);
      sub_mod_p(u, u, v);
    } else {
      wide::sub(b, b, a);
      sub_mod_p(v, v, u);
    }
  }
  return fp_from_canonical(a == one ? u : v);
}

bool fp_is_lexicographically_largest(const Fp& a) {
  Limbs<6> canon = fp_to_canonical(a);
  return !wide::geq(params::kPm1Half, canon);
}

void fp_to_bytes(uint8_t out[48], const Fp& a) {
  Limbs<6> canon = fp_to_canonical(a);
  for (size_t i = 0; i < 6; ++i) {
    uint64_t limb = canon[5 - i];
    for (int j = 0; j < 8; ++j) out[8 * i + j] = static_cast<uint8_t>(limb >> (56 - 8 * j));
  }
}

bool fp_from_bytes(Fp& out, const uint8_t in[48]) {
  Limbs<6> v{};
  for (size_t i = 0; i < 6; ++i) {
    uint64_t limb = 0;
    for (int j = 0; j < 8; ++j) limb = limb << 8 | in[8 * i + j];
    v[5 - i] = limb;
  }
  if (wide::geq(v, params::kP)) return false;
  out = fp_from_canonical(v);
  return true;
}

Fp fp_from_bytes_reduce(const uint8_t* data, size_t len) {
  Limbs<6> acc{};
  for (size_t i = 0; i < len; ++i) {
    for (int bitpos = 7; bitpos >= 0; --bitpos) {
      uint64_t carry = wide::add(acc, acc, acc);
      acc[0] |= (data[i] >> bitpos) & 1;
      if (carry != 0 || wide::geq(acc, params::kP)) {
        Limbs<6> t{};
        wide::sub(t, acc, params::kP);
        acc = t;
      }
    }
  }
  return fp_from_canonical(acc);
}

// ---------------------------------------------------------------------------
// Fp2
// ---------------------------------------------------------------------------

Fp2 fp2_inv(const Fp2& a) {
  // 1/(c0 + c1 u) = (c0 - c1 u) / (c0^2 + c1^2).
  Fp norm = fp_sqr(a.c0) + fp_sqr(a.c1);
  Fp ninv = fp_inv(norm);
  return {a.c0 * ninv, -(a.c1 * ninv)};
}

bool fp2_is_square(const Fp2& a) {
  // a^((p^2-1)/2) = norm(a)^((p-1)/2).
  if (a.is_zero()) return true;
  return fp_is_square(fp_sqr(a.c0) + fp_sqr(a.c1));
}

bool fp2_sqrt(Fp2& out, const Fp2& a) {
  static const Fp kInv2 = fp_inv(fp_from_u64(2));
  if (a.is_zero()) {
    out = Fp2::zero();
    return true;
  }
  if (a.c1.is_zero()) {
    Fp s = fp_sqrt_candidate(a.c0);
    if (fp_sqr(s) == a.c0) {
      out = {s, Fp::zero()};
      return true;
    }
    // -1 is a non-residue (p = 3 mod 4), so -c0 must be square: (s u)^2 = -s^2.
    Fp s2 = fp_sqrt_candidate(-a.c0);
    if (fp_sqr(s2) != -a.c0) return false;
    out = {Fp::zero(), s2};
    return true;
  }
  Fp norm = fp_sqr(a.c0) + fp_sqr(a.c1);
  Fp n = fp_sqrt_candidate(norm);
  if (fp_sqr(n) != norm) return false;
  Fp t = (a.c0 + n) * kInv2;
  Fp x0 = fp_sqrt_candidate(t);
  if (fp_sqr(x0) != t) {
    t = (a.c0 - n) * kInv2;
    x0 = fp_sqrt_candidate(t);
    if (fp_sqr(x0) != t) return false;
  }
  Fp x1 = a.c1 * fp_inv(fp_dbl(x0));
  Fp2 cand{x0, x1};
  if (fp2_sqr(cand) != a) return false;
  out = cand;
  return true;
}

bool fp2_is_lexicographically_largest(const Fp2& a) {
  if (!a.c1.is_zero()) return fp_is_lexicographically_largest(a.c1);
  return fp_is_lexicographically_largest(a.c0);
}

// ---------------------------------------------------------------------------
// Fp6
// ---------------------------------------------------------------------------

Fp6 operator*(const Fp6& a, const Fp6& b) {
  Fp2 t0 = a.c0 * b.c0;
  Fp2 t1 = a.c1 * b.c1;
  Fp2 t2 = a.c2 * b.c2;
  Fp2 s01 = (a.c0 + a.c1) * (b.c0 + b.c1);
  Fp2 s02 = (a.c0 + a.c2) * (b.c0 + b.c2);
  Fp2 s12 = (a.c1 + a.c2) * (b.c1 + b.c2);
  return {
      t0 + fp2_mul_by_xi(s12 - t1 - t2),
      s01 - t0 - t1 + fp2_mul_by_xi(t2),
      s02 - t0 - t2 + t1,
  };
}

Fp6 fp6_sqr(const Fp6& a) {
  Fp2 s0 = fp2_sqr(a.c0);
  Fp2 s1 = fp2_dbl(a.c0 * a.c1);
  Fp2 s2 = fp2_sqr(a.c0 - a.c1 + a.c2);
  Fp2 s3 = fp2_dbl(a.c1 * a.c2);
  Fp2 s4 = fp2_sqr(a.c2);
  return {
      s0 + fp2_mul_by_xi(s3),
      s1 + fp2_mul_by_xi(s4),
      s1 + s2 + s3 - s0 - s4,
  };
}

Fp6 fp6_inv(const Fp6& a) {
  Fp2 t0 = fp2_sqr(a.c0) - fp2_mul_by_xi(a.c1 * a.c2);
  Fp2 t1 = fp2_mul_by_xi(fp2_sqr(a.c2)) - a.c0 * a.c1;
  Fp2 t2 = fp2_sqr(a.c1) - a.c0 * a.c2;
  Fp2 norm = a.c0 * t0 + fp2_mul_by_xi(a.c2 * t1) + fp2_mul_by_xi(a.c1 * t2);
  Fp2 ninv = fp2_inv(norm);
  return {t0 * ninv, t1 * ninv, t2 * ninv};
}

Fp6 fp6_mul_by_c1c2(const Fp6& a, const Fp2& b1, const Fp2& b2) {
  // (a0 + a1 v + a2 v^2)(b1 v + b2 v^2) with v^3 = xi.
  return {
      fp2_mul_by_xi(a.c1 * b2 + a.c2 * b1),
      a.c0 * b1 + fp2_mul_by_xi(a.c2 * b2),
      a.c0 * b2 + a.c1 * b1,
  };
}

// ---------------------------------------------------------------------------
// Fp12
// ---------------------------------------------------------------------------

Fp12 operator*(const Fp12& a, const Fp12& b) {
  Fp6 t0 = a.c0 * b.c0;
  Fp6 t1 = a.c1 * b.c1;
  Fp6 t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
  return {t0 + fp6_mul_by_v(t1), t2 - t0 - t1};
}

Fp12 fp12_sqr(const Fp12& a) {
  Fp6 t = a.c0 * a.c1;
  Fp6 c0 = (a.c0 + a.c1) * (a.c0 + fp6_mul_by_v(a.c1)) - t - fp6_mul_by_v(t);
  return {c0, t + t};
}

Fp12 fp12_inv(const Fp12& a) {
  Fp6 t = fp6_inv(fp6_sqr(a.c0) - fp6_mul_by_v(fp6_sqr(a.c1)));
  return {a.c0 * t, -(a.c1 * t)};
}

namespace {

// Frobenius coefficients gamma1[k] = xi^(k(p-1)/6) for the w-basis; computed
// once at first use rather than quoted.
struct FrobTables {
  Fp2 g1[6];
  Fp2 g2[6];
};

const FrobTables& frob_tables() {
  static const FrobTables tables = [] {
    FrobTables t;
    Fp2 g = fp2_pow(Fp2::xi(), params::kPm1Sixth);
    t.g1[0] = Fp2::one();
    for (int i = 1; i < 6; ++i) t.g1[i] = t.g1[i - 1] * g;
    for (int i = 0; i < 6; ++i) t.g2[i] = t.g1[i] * fp2_conj(t.g1[i]);
    return t;
  }();
  return tables;
}

// w-basis view: coefficient of w^k for f = (c0.c0 + c0.c1 v + c0.c2 v^2)
// + (c1.c0 + c1.c1 v + c1.c2 v^2) w, with w^2 = v.
inline void to_wbasis(const Fp12& f, Fp2 e[6]) {
  e[0] = f.c0.c0;
  e[1] = f.c1.c0;
  e[2] = f.c0.c1;
  e[3] = f.c1.c1;
  e[4] = f.c0.c2;
  e[5] = f.c1.c2;
}

inline Fp12 from_wbasis(const Fp2 e[6]) {
  return {{e[0], e[2], e[4]}, {e[1], e[3], e[5]}};
}

}  // namespace

Fp12 fp12_frobenius(const Fp12& a) {
  const FrobTables& t = frob_tables();
  Fp2 e[6];
  to_wbasis(a, e);
  for (int k = 0; k < 6; ++k) e[k] = fp2_conj(e[k]) * t.g1[k];
  return from_wbasis(e);
}

Fp12 fp12_frobenius2(const Fp12& a) {
  const FrobTables& t = frob_tables();
  Fp2 e[6];
  to_wbasis(a, e);
  for (int k = 0; k < 6; ++k) e[k] = e[k] * t.g2[k];
  return from_wbasis(e);
}

Fp12 fp12_mul_by_line(const Fp12& f, const Fp2& c0, const Fp2& c3, const Fp2& c5) {
  // line = c0 + c3 w^3 + c5 w^5 = (c0, 0, 0) + (0, c3, c5) w.
  Fp6 a_l1 = fp6_mul_by_c1c2(f.c0, c3, c5);
  Fp6 b_l1 = fp6_mul_by_c1c2(f.c1, c3, c5);
  return {
      fp6_scale(f.c0, c0) + fp6_mul_by_v(b_l1),
      a_l1 + fp6_scale(f.c1, c0),
  };
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

Scalar scalar_from_bytes_reduce(const uint8_t* data, size_t len) {
  Limbs<4> acc{};
  for (size_t i = 0; i < len; ++i) {
    for (int bitpos = 7; bitpos >= 0; --bitpos) {
      uint64_t carry = wide::add(acc, acc, acc);
      acc[0] |= (data[i] >> bitpos) & 1;
      if (carry != 0 || wide::geq(acc, params::kR)) {
        Limbs<4> t{};
        wide::sub(t, acc, params::kR);
        acc = t;
      }
    }
  }
  return Scalar{acc};
}

void scalar_to_bytes(uint8_t out[32], const Scalar& s) {
  for (size_t i = 0; i < 4; ++i) {
    uint64_t limb = s.l[3 - i];
    for (int j = 0; j < 8; ++j) out[8 * i + j] = static_cast<uint8_t>(limb >> (56 - 8 * j));
  }
}

}  // namespace lsa::crypto
