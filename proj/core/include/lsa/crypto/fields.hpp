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

// BLS12-381 field tower: Fp -> Fp2 = Fp[u]/(u^2+1) -> Fp6 = Fp2[v]/(v^3-xi)
// -> Fp12 = Fp6[w]/(w^2-v), with xi = u+1. All large constants (p, r, the
// Montgomery parameters, pow exponents, the G1 cofactor) are computed at
// compile time from the single 64-bit curve parameter z, so no multi-limb
// constant in this file can silently be wrong on its own.

#include <array>
#include <cstdint>

#include <lsa/support.hpp>

namespace lsa::crypto {

// Curve parameter z = -kZAbs. Everything else derives from it:
//   r = z^4 - z^2 + 1, p = (z-1)^2 * r / 3 + z, G1 cofactor = (z-1)^2 / 3.
inline constexpr uint64_t kZAbs = 0xd201000000010000ULL;

namespace wide {

using u128 = unsigned __int128;

template <size_t N>
using Limbs = std::array<uint64_t, N>;

template <size_t N, size_t M>
constexpr Limbs<N + M> mul(const Limbs<N>& a, const Limbs<M>& b) {
  Limbs<N + M> out{};
  for (size_t i = 0; i < N; ++i) {
    u128 carry = 0;
    for (size_t j = 0; j < M; ++j) {
      u128 cur = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    out[i + M] = static_cast<uint64_t>(carry);
  }
  return out;
}

// out = a - b, returns borrow. Usable in constexpr and at runtime.
template <size_t N>
constexpr uint64_t sub(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  u128 borrow = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 cur = static_cast<u128>(a[i]) - b[i] - borrow;
    out[i] = static_cast<uint64_t>(cur);
    borrow = (cur >> 64) & 1;
  }
  return static_cast<uint64_t>(borrow);
}

template <size_t N>
constexpr uint64_t add(Limbs<N>& out, const Limbs<N>& a, const Limbs<N>& b) {
  u128 carry = 0;
  for (size_t i = 0; i < N; ++i) {
    u128 cur = static_cast<u128>(a[i]) + b[i] + carry;
    out[i] = static_cast<uint64_t>(cur);
    carry = cur >> 64;
  }
  return static_cast<uint64_t>(carry);
}

template <size_t N>
constexpr bool geq(const Limbs<N>& a, const Limbs<N>& b) {
  for (size_t i = N; i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return true;
}

template <size_t N>
constexpr bool is_zero(const Limbs<N>& a) {
  for (size_t i = 0; i < N; ++i)
    if (a[i] != 0) return false;
  return true;
}

// Exact division by a small divisor (remainder must be zero).
template <size_t N>
constexpr Limbs<N> div_exact(const Limbs<N>& a, uint64_t d) {
  Limbs<N> out{};
  u128 rem = 0;
  for (size_t i = N; i-- > 0;) {
    u128 cur = rem << 64 | a[i];
    out[i] = static_cast<uint64_t>(cur / d);
    rem = cur % d;
  }
  return out;
}

template <size_t N>
constexpr Limbs<N> shr1(const Limbs<N>& a) {
  Limbs<N> out{};
  for (size_t i = 0; i < N; ++i) {
    out[i] = a[i] >> 1;
    if (i + 1 < N) out[i] |= a[i + 1] << 63;
  }
  return out;
}

template <size_t N, size_t M>
constexpr Limbs<N> truncate(const Limbs<M>& a) {
  static_assert(N <= M);
  Limbs<N> out{};
  for (size_t i = 0; i < N; ++i) out[i] = a[i];
  return out;
}

template <size_t N>
constexpr size_t bit_length(const Limbs<N>& a) {
  for (size_t i = N; i-- > 0;) {
    if (a[i] == 0) continue;
    uint64_t v = a[i];
    size_t bits = 0;
    while (v != 0) {
      v >>= 1;
      ++bits;
    }
    return i * 64 + bits;
  }
  return 0;
}

template <size_t N>
constexpr bool bit(const Limbs<N>& a, size_t i) {
  return (a[i / 64] >> (i % 64)) & 1;
}

}  // namespace wide

namespace params {

using wide::Limbs;

// r = z^4 - z^2 + 1 (255 bits).
constexpr Limbs<4> compute_r() {
  Limbs<1> z{kZAbs};
  Limbs<2> z2 = wide::mul(z, z);
  Limbs<4> z4 = wide::mul(z2, z2);
  Limbs<4> r{};
  Limbs<4> z2w = wide::truncate<4>(wide::mul(z2, Limbs<2>{1, 0}));
  wide::sub(r, z4, z2w);
  Limbs<4> one{1, 0, 0, 0};
  wide::add(r, r, one);
  return r;
}

inline constexpr Limbs<4> kR = compute_r();

// p = (|z|+1)^2 * r / 3 - |z| (381 bits); z is negative so p = (z-1)^2 r/3 + z.
constexpr Limbs<6> compute_p() {
  Limbs<1> zp1{kZAbs + 1};
  Limbs<2> zp1sq = wide::mul(zp1, zp1);
  Limbs<6> prod = wide::mul(zp1sq, kR);
  Limbs<6> q = wide::div_exact(prod, 3);
  Limbs<6> z6{kZAbs, 0, 0, 0, 0, 0};
  Limbs<6> p{};
  wide::sub(p, q, z6);
  return p;
}

inline constexpr Limbs<6> kP = compute_p();

// G1 cofactor (z-1)^2 / 3 (126 bits).
constexpr Limbs<2> compute_h1() {
  Limbs<1> zp1{kZAbs + 1};
  Limbs<2> zp1sq = wide::mul(zp1, zp1);
  return wide::div_exact(zp1sq, 3);
}

inline constexpr Limbs<2> kH1 = compute_h1();

// -p^-1 mod 2^64 (Newton iteration doubles correct low bits each round).
constexpr uint64_t compute_pinv() {
  uint64_t x = 1;
  for (int i = 0; i < 6; ++i) x *= 2 - kP[0] * x;
  return ~x + 1;
}

inline constexpr uint64_t kPInv = compute_pinv();

// 2^(64*k) mod p by repeated modular doubling of 1.
constexpr Limbs<6> compute_pow2_mod_p(size_t bits) {
  Limbs<6> x{1, 0, 0, 0, 0, 0};
  for (size_t i = 0; i < bits; ++i) {
    uint64_t carry = wide::add(x, x, x);
    if (carry != 0 || wide::geq(x, kP)) {
      Limbs<6> t{};
      wide::sub(t, x, kP);
      x = t;
    }
  }
  return x;
}

inline constexpr Limbs<6> kMontOne = compute_pow2_mod_p(384);  // R mod p
inline constexpr Limbs<6> kR2 = compute_pow2_mod_p(768);       // R^2 mod p

constexpr Limbs<6> compute_p_minus(uint64_t d, uint64_t shift) {
  Limbs<6> x = kP;
  Limbs<6> dd{d, 0, 0, 0, 0, 0};
  wide::sub(x, x, dd);
  for (uint64_t i = 0; i < shift; ++i) x = wide::shr1(x);
  return x;
}

inline constexpr Limbs<6> kPm1Half = compute_p_minus(1, 1);  // (p-1)/2, Euler criterion
inline constexpr Limbs<6> kPm3Quarter = compute_p_minus(3, 2);  // (p-3)/4
inline constexpr Limbs<6> kPm1Sixth = wide::div_exact(compute_p_minus(1, 1), 3);  // (p-1)/6

// (p+1)/4, sqrt exponent for p = 3 mod 4; p+1 overflows 6 limbs by nothing
// (p < 2^382), so add then shift is safe.
constexpr Limbs<6> compute_pp1_quarter() {
  Limbs<6> x = kP;
  Limbs<6> one{1, 0, 0, 0, 0, 0};
  wide::add(x, x, one);
  x = wide::shr1(x);
  x = wide::shr1(x);
  return x;
}

inline constexpr Limbs<6> kPp1Quarter = compute_pp1_quarter();

}  // namespace params

// ---------------------------------------------------------------------------
// Fp, Montgomery form, 6 limbs little-endian.
// ---------------------------------------------------------------------------

struct Fp {
  wide::Limbs<6> l{};

  static Fp zero() { return Fp{}; }
  static Fp one() { return Fp{params::kMontOne}; }

  bool is_zero() const { return wide::is_zero(l); }
  bool operator==(const Fp& o) const { return l == o.l; }
  bool operator!=(const Fp& o) const { return l != o.l; }
};

namespace detail {

using wide::u128;

// CIOS Montgomery multiplication. For a, b < p the result is < p.
inline void mont_mul(wide::Limbs<6>& out, const wide::Limbs<6>& a, const wide::Limbs<6>& b) {
  const auto& p = params::kP;
  uint64_t t[8] = {};
  for (size_t i = 0; i < 6; ++i) {
    u128 carry = 0;
    for (size_t j = 0; j < 6; ++j) {
      u128 cur = static_cast<u128>(a[i]) * b[j] + t[j] + carry;
      t[j] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    u128 cur = static_cast<u128>(t[6]) + carry;
    t[6] = static_cast<uint64_t>(cur);
    t[7] = static_cast<uint64_t>(cur >> 64);

    uint64_t m = t[0] * params::kPInv;
    carry = (static_cast<u128>(m) * p[0] + t[0]) >> 64;
    for (size_t j = 1; j < 6; ++j) {
      cur = static_cast<u128>(m) * p[j] + t[j] + carry;
      t[j - 1] = static_cast<uint64_t>(cur);
      carry = cur >> 64;
    }
    cur = static_cast<u128>(t[6]) + carry;
    t[5] = static_cast<uint64_t>(cur);
    t[6] = t[7] + static_cast<uint64_t>(cur >> 64);
    t[7] = 0;
  }
  wide::Limbs<6> r{t[0], t[1], t[2], t[3], t[4], t[5]};
  if (t[6] != 0 || wide::geq(r, p)) {
    wide::Limbs<6> s{};
    wide::sub(s, r, p);
    r = s;
  }
  out = r;
}

inline void mont_reduce(wide::Limbs<6>& out, const wide::Limbs<6>& a) {
  wide::Limbs<6> one{1, 0, 0, 0, 0, 0};
  mont_mul(out, a, one);
}

}  // namespace detail

inline Fp operator*(const Fp& a, const Fp& b) {
  Fp r;
  detail::mont_mul(r.l, a.l, b.l);
  return r;
}

inline Fp operator+(const Fp& a, const Fp& b) {
  Fp r;
  uint64_t carry = wide::add(r.l, a.l, b.l);
  if (carry != 0 || wide::geq(r.l, params::kP)) {
    wide::Limbs<6> t{};
    wide::sub(t, r.l, params::kP);
    r.l = t;
  }
  return r;
}

inline Fp operator-(const Fp& a, const Fp& b) {
  Fp r;
  uint64_t borrow = wide::sub(r.l, a.l, b.l);
  if (borrow != 0) wide::add(r.l, r.l, params::kP);
  return r;
}

inline Fp operator-(const Fp& a) {
  if (a.is_zero()) return a;
  Fp r;
  wide::sub(r.l, params::kP, a.l);
  return r;
}

inline Fp fp_sqr(const Fp& a) { return a * a; }
inline Fp fp_dbl(const Fp& a) { return a + a; }

inline Fp fp_from_u64(uint64_t v) {
  Fp r{wide::Limbs<6>{v, 0, 0, 0, 0, 0}};
  detail::mont_mul(r.l, r.l, params::kR2);
  return r;
}

// Montgomery -> canonical little-endian limbs.
inline wide::Limbs<6> fp_to_canonical(const Fp& a) {
  wide::Limbs<6> out;
  detail::mont_reduce(out, a.l);
  return out;
}

// Canonical limbs (< p) -> Montgomery.
inline Fp fp_from_canonical(const wide::Limbs<6>& v) {
  Fp r{v};
  detail::mont_mul(r.l, r.l, params::kR2);
  return r;
}

template <size_t N>
inline Fp fp_pow(const Fp& a, const wide::Limbs<N>& e) {
  Fp result = Fp::one();
  size_t bits = wide::bit_length(e);
  for (size_t i = bits; i-- > 0;) {
    result = result * result;
    if (wide::bit(e, i)) result = result * a;
  }
  return result;
}

// Binary extended GCD inversion (variable-time; nothing secret is inverted).
Fp fp_inv(const Fp& a);

// a^((p+1)/4); caller must square-check (returns garbage for non-residues).
inline Fp fp_sqrt_candidate(const Fp& a) { return fp_pow(a, params::kPp1Quarter); }

inline bool fp_is_square(const Fp& a) {
  if (a.is_zero()) return true;
  return fp_pow(a, params::kPm1Half) == Fp::one();
}

// True if canonical value > (p-1)/2 (the lexicographically larger of y, -y).
bool fp_is_lexicographically_largest(const Fp& a);

// Canonical value's low bit (RFC 9380 sgn0 building block).
inline int fp_sgn0(const Fp& a) { return static_cast<int>(fp_to_canonical(a)[0] & 1); }

// 48-byte big-endian canonical serialization.
void fp_to_bytes(uint8_t out[48], const Fp& a);
// Rejects values >= p.
bool fp_from_bytes(Fp& out, const uint8_t in[48]);

// Arbitrary-length big-endian bytes reduced mod p (for hash_to_field).
Fp fp_from_bytes_reduce(const uint8_t* data, size_t len);

// ---------------------------------------------------------------------------
// Fp2 = Fp[u]/(u^2 + 1)
// ---------------------------------------------------------------------------

struct Fp2 {
  Fp c0, c1;

  static Fp2 zero() { return {}; }
  static Fp2 one() { return {Fp::one(), Fp::zero()}; }
  // xi = u + 1, the sextic non-residue the tower is built on.
  static Fp2 xi() { return {Fp::one(), Fp::one()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const Fp2& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp2& o) const { return !(*this == o); }
};

inline Fp2 operator+(const Fp2& a, const Fp2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
inline Fp2 operator-(const Fp2& a, const Fp2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
inline Fp2 operator-(const Fp2& a) { return {-a.c0, -a.c1}; }

inline Fp2 operator*(const Fp2& a, const Fp2& b) {
  // Karatsuba over u^2 = -1.
  Fp t0 = a.c0 * b.c0;
  Fp t1 = a.c1 * b.c1;
  Fp t2 = (a.c0 + a.c1) * (b.c0 + b.c1);
  return {t0 - t1, t2 - t0 - t1};
}

inline Fp2 fp2_sqr(const Fp2& a) {
  // (c0 + c1 u)^2 = (c0+c1)(c0-c1) + 2 c0 c1 u.
  Fp t0 = (a.c0 + a.c1) * (a.c0 - a.c1);
  Fp t1 = fp_dbl(a.c0 * a.c1);
  return {t0, t1};
}

inline Fp2 fp2_scale(const Fp2& a, const Fp& k) { return {a.c0 * k, a.c1 * k}; }
inline Fp2 fp2_dbl(const Fp2& a) { return a + a; }
inline Fp2 fp2_conj(const Fp2& a) { return {a.c0, -a.c1}; }

// Multiply by xi = 1 + u: (c0 - c1) + (c0 + c1) u.
inline Fp2 fp2_mul_by_xi(const Fp2& a) { return {a.c0 - a.c1, a.c0 + a.c1}; }

Fp2 fp2_inv(const Fp2& a);

template <size_t N>
inline Fp2 fp2_pow(const Fp2& a, const wide::Limbs<N>& e) {
  Fp2 result = Fp2::one();
  size_t bits = wide::bit_length(e);
  for (size_t i = bits; i-- > 0;) {
    result = fp2_sqr(result);
    if (wide::bit(e, i)) result = result * a;
  }
  return result;
}

bool fp2_is_square(const Fp2& a);
// Returns false if a is a non-residue; on success out^2 = a. The returned
// root is deterministic (fixed choice), callers adjust sign as needed.
bool fp2_sqrt(Fp2& out, const Fp2& a);

// RFC 9380 sgn0 for degree-2 extensions.
inline int fp2_sgn0(const Fp2& a) {
  int s0 = fp_sgn0(a.c0);
  int z0 = a.c0.is_zero() ? 1 : 0;
  int s1 = fp_sgn0(a.c1);
  return s0 | (z0 & s1);
}

bool fp2_is_lexicographically_largest(const Fp2& a);

// ---------------------------------------------------------------------------
// Fp6 = Fp2[v]/(v^3 - xi)
// ---------------------------------------------------------------------------

struct Fp6 {
  Fp2 c0, c1, c2;

  static Fp6 zero() { return {}; }
  static Fp6 one() { return {Fp2::one(), Fp2::zero(), Fp2::zero()}; }

  bool is_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
  bool operator==(const Fp6& o) const { return c0 == o.c0 && c1 == o.c1 && c2 == o.c2; }
  bool operator!=(const Fp6& o) const { return !(*this == o); }
};

inline Fp6 operator+(const Fp6& a, const Fp6& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
inline Fp6 operator-(const Fp6& a, const Fp6& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
inline Fp6 operator-(const Fp6& a) { return {-a.c0, -a.c1, -a.c2}; }

Fp6 operator*(const Fp6& a, const Fp6& b);
Fp6 fp6_sqr(const Fp6& a);
Fp6 fp6_inv(const Fp6& a);

// Multiply by v: (c0, c1, c2) -> (xi*c2, c0, c1).
inline Fp6 fp6_mul_by_v(const Fp6& a) { return {fp2_mul_by_xi(a.c2), a.c0, a.c1}; }

// Sparse products used by the pairing's line evaluation.
inline Fp6 fp6_scale(const Fp6& a, const Fp2& k) { return {a.c0 * k, a.c1 * k, a.c2 * k}; }
Fp6 fp6_mul_by_c1c2(const Fp6& a, const Fp2& b1, const Fp2& b2);

// ---------------------------------------------------------------------------
// Fp12 = Fp6[w]/(w^2 - v)
// ---------------------------------------------------------------------------

struct Fp12 {
  Fp6 c0, c1;

  static Fp12 zero() { return {}; }
  static Fp12 one() { return {Fp6::one(), Fp6::zero()}; }

  bool operator==(const Fp12& o) const { return c0 == o.c0 && c1 == o.c1; }
  bool operator!=(const Fp12& o) const { return !(*this == o); }
};

Fp12 operator*(const Fp12& a, const Fp12& b);
Fp12 fp12_sqr(const Fp12& a);
Fp12 fp12_inv(const Fp12& a);

// Conjugation over Fp6 = x^(p^6); the inverse on the cyclotomic subgroup.
inline Fp12 fp12_conj(const Fp12& a) { return {a.c0, -a.c1}; }

// Frobenius x -> x^(p^k) for k = 1, 2.
Fp12 fp12_frobenius(const Fp12& a);
Fp12 fp12_frobenius2(const Fp12& a);

// Product with the sparse line element c0 + c3 w^3 + c5 w^5 (Fp2
// coefficients in the w-basis; w^0 lives in c0.c0, w^3 in c1.c1, w^5 in
// c1.c2).
Fp12 fp12_mul_by_line(const Fp12& f, const Fp2& c0, const Fp2& c3, const Fp2& c5);

// ---------------------------------------------------------------------------
// Scalars mod r
// ---------------------------------------------------------------------------

struct Scalar {
  wide::Limbs<4> l{};  // canonical (not Montgomery), < r

  static Scalar zero() { return {}; }
  bool is_zero() const { return wide::is_zero(l); }
  bool operator==(const Scalar& o) const { return l == o.l; }
};

// Big-endian bytes of any length reduced mod r.
Scalar scalar_from_bytes_reduce(const uint8_t* data, size_t len);
// 32-byte big-endian encoding (canonical).
void scalar_to_bytes(uint8_t out[32], const Scalar& s);

}  // namespace lsa::crypto
