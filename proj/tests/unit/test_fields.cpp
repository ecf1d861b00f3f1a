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

#include <doctest.h>

#include <lsa/crypto/fields.hpp>

#include "golden.hpp"

using namespace lsa;
using namespace lsa::crypto;

namespace {

template <size_t N>
std::string limbs_hex(const wide::Limbs<N>& l) {
  Bytes b(N * 8);
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < 8; ++j) b[(N - 1 - i) * 8 + j] = uint8_t(l[i] >> (56 - 8 * j));
  std::string h = to_hex(b);
  size_t pos = h.find_first_not_of('0');
  return pos == std::string::npos ? "0" : h.substr(pos);
}

std::string strip_zeros(std::string s) {
  size_t pos = s.find_first_not_of('0');
  return pos == std::string::npos ? "0" : s.substr(pos);
}

Fp random_fp(testing::TestRng& rng) {
  Bytes b = rng.bytes(64);
  return fp_from_bytes_reduce(b.data(), b.size());
}

Fp2 random_fp2(testing::TestRng& rng) { return {random_fp(rng), random_fp(rng)}; }

Fp6 random_fp6(testing::TestRng& rng) {
  return {random_fp2(rng), random_fp2(rng), random_fp2(rng)};
}

Fp12 random_fp12(testing::TestRng& rng) { return {random_fp6(rng), random_fp6(rng)}; }

std::string fp_hex(const Fp& a) {
  uint8_t b[48];
  fp_to_bytes(b, a);
  return to_hex(b, 48);
}

template <size_t N>
Fp12 fp12_pow(const Fp12& a, const wide::Limbs<N>& e) {
  Fp12 acc = Fp12::one();
  for (size_t i = wide::bit_length(e); i-- > 0;) {
    acc = fp12_sqr(acc);
    if (wide::bit(e, i)) acc = acc * a;
  }
  return acc;
}

}  // namespace

TEST_CASE("field parameters match frozen oracle values") {
  auto g = testing::load_golden("bls_params.json");
  CHECK(limbs_hex(params::kP) == g["p"].get<std::string>());
  CHECK(limbs_hex(params::kR) == g["r"].get<std::string>());
  CHECK(limbs_hex(params::kH1) == strip_zeros(g["h1_cofactor"].get<std::string>()));
  CHECK(kZAbs == 15132376222941642752ULL);
}

TEST_CASE("montgomery representation round-trips") {
  CHECK(fp_from_u64(1) == Fp::one());
  CHECK(fp_from_u64(0) == Fp::zero());
  auto canon = fp_to_canonical(Fp::one());
  CHECK(canon[0] == 1);
  for (size_t i = 1; i < 6; ++i) CHECK(canon[i] == 0);

  testing::TestRng rng(1);
  for (int i = 0; i < 50; ++i) {
    Fp a = random_fp(rng);
    uint8_t b[48];
    fp_to_bytes(b, a);
    Fp back;
    REQUIRE(fp_from_bytes(back, b));
    CHECK(back == a);
  }
}

TEST_CASE("fp_from_bytes rejects values >= p") {
  Bytes p_bytes = from_hex(
      "1a0111ea397fe69a4b1ba7b6434bacd764774b84f38512bf"
      "6730d2a0f6b0f6241eabfffeb153ffffb9feffffffffaaab");
  Fp out;
  CHECK_FALSE(fp_from_bytes(out, p_bytes.data()));
  Bytes ff(48, 0xff);
  CHECK_FALSE(fp_from_bytes(out, ff.data()));
  p_bytes.back() -= 1;  // p - 1 is canonical
  CHECK(fp_from_bytes(out, p_bytes.data()));
  CHECK(out == -Fp::one());
}

TEST_CASE("fp arithmetic laws") {
  testing::TestRng rng(2);
  for (int i = 0; i < 25; ++i) {
    Fp a = random_fp(rng), b = random_fp(rng), c = random_fp(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Fp::zero());
    CHECK(a + (-a) == Fp::zero());
    CHECK(fp_sqr(a) == a * a);
    CHECK(fp_dbl(a) == a + a);
    if (!a.is_zero()) CHECK(a * fp_inv(a) == Fp::one());
  }
  CHECK(fp_inv(Fp::zero()) == Fp::zero());
  CHECK(fp_inv(Fp::one()) == Fp::one());
}

TEST_CASE("fp exponentiation and square roots") {
  testing::TestRng rng(3);
  wide::Limbs<1> three{3};
  for (int i = 0; i < 10; ++i) {
    Fp a = random_fp(rng);
    CHECK(fp_pow(a, three) == a * a * a);
    Fp sq = fp_sqr(a);
    CHECK(fp_is_square(sq));
    Fp root = fp_sqrt_candidate(sq);
    CHECK((root == a || root == -a));
  }
  // p = 3 mod 4, so -1 is a non-residue.
  CHECK_FALSE(fp_is_square(-Fp::one()));
  CHECK(fp_is_square(Fp::zero()));
}

TEST_CASE("fp sign and lexicographic order") {
  CHECK(fp_sgn0(Fp::zero()) == 0);
  CHECK(fp_sgn0(Fp::one()) == 1);
  CHECK_FALSE(fp_is_lexicographically_largest(Fp::zero()));
  CHECK_FALSE(fp_is_lexicographically_largest(Fp::one()));
  CHECK(fp_is_lexicographically_largest(-Fp::one()));
}

TEST_CASE("fp2 arithmetic laws") {
  testing::TestRng rng(4);
  for (int i = 0; i < 25; ++i) {
    Fp2 a = random_fp2(rng), b = random_fp2(rng), c = random_fp2(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(fp2_sqr(a) == a * a);
    if (!(a == Fp2::zero())) CHECK(a * fp2_inv(a) == Fp2::one());
    CHECK(fp2_mul_by_xi(a) == a * Fp2::xi());
    CHECK(fp2_conj(a) * a == Fp2{a.c0 * a.c0 + a.c1 * a.c1, Fp::zero()});
  }
}

TEST_CASE("fp2 square roots and squareness") {
  testing::TestRng rng(5);
  int nonsquares = 0;
  for (int i = 0; i < 20; ++i) {
    Fp2 a = random_fp2(rng);
    Fp2 sq = fp2_sqr(a);
    CHECK(fp2_is_square(sq));
    Fp2 root;
    REQUIRE(fp2_sqrt(root, sq));
    CHECK((root == a || root == -a));
    if (!fp2_is_square(a)) ++nonsquares;
  }
  CHECK(nonsquares > 0);  // about half of random elements
  Fp2 r;
  CHECK(fp2_sqrt(r, Fp2::zero()));
  CHECK(r == Fp2::zero());
}

TEST_CASE("fp2 sgn0 matches lexicographic little-endian convention") {
  CHECK(fp2_sgn0(Fp2::zero()) == 0);
  CHECK(fp2_sgn0(Fp2::one()) == 1);
  CHECK(fp2_sgn0(Fp2{Fp::zero(), Fp::one()}) == 1);
  CHECK(fp2_sgn0(Fp2{fp_from_u64(2), Fp::one()}) == 0);
}

TEST_CASE("fp6 and fp12 arithmetic laws") {
  testing::TestRng rng(6);
  for (int i = 0; i < 8; ++i) {
    Fp6 a = random_fp6(rng), b = random_fp6(rng);
    CHECK(a * b == b * a);
    CHECK(fp6_sqr(a) == a * a);
    CHECK(a * fp6_inv(a) == Fp6::one());
    Fp6 v{Fp2::zero(), Fp2::one(), Fp2::zero()};
    CHECK(fp6_mul_by_v(a) == a * v);

    Fp12 f = random_fp12(rng), h = random_fp12(rng);
    CHECK(f * h == h * f);
    CHECK(fp12_sqr(f) == f * f);
    CHECK(f * fp12_inv(f) == Fp12::one());
    CHECK(fp12_conj(fp12_conj(f)) == f);
  }
}

TEST_CASE("sparse line multiplication equals full multiplication") {
  testing::TestRng rng(7);
  for (int i = 0; i < 8; ++i) {
    Fp12 f = random_fp12(rng);
    Fp2 c0 = random_fp2(rng), c3 = random_fp2(rng), c5 = random_fp2(rng);
    // Line element c0 + c3 w^3 + c5 w^5 in the w-basis.
    Fp12 line{Fp6{c0, Fp2::zero(), Fp2::zero()}, Fp6{Fp2::zero(), c3, c5}};
    CHECK(fp12_mul_by_line(f, c0, c3, c5) == f * line);
  }
}

TEST_CASE("frobenius endomorphism equals p-th power") {
  testing::TestRng rng(8);
  for (int i = 0; i < 3; ++i) {
    Fp12 f = random_fp12(rng);
    CHECK(fp12_frobenius(f) == fp12_pow(f, params::kP));
    CHECK(fp12_frobenius2(f) == fp12_frobenius(fp12_frobenius(f)));
  }
}

TEST_CASE("scalar reduction mod group order") {
  Bytes r_bytes = from_hex("73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001");
  CHECK(scalar_from_bytes_reduce(r_bytes.data(), r_bytes.size()).is_zero());

  Bytes r_minus1 = r_bytes;
  r_minus1.back() = 0x00;
  Scalar s = scalar_from_bytes_reduce(r_minus1.data(), r_minus1.size());
  uint8_t out[32];
  scalar_to_bytes(out, s);
  CHECK(to_hex(out, 32) == to_hex(r_minus1));

  Bytes one(32, 0);
  one.back() = 1;
  Scalar s1 = scalar_from_bytes_reduce(one.data(), one.size());
  CHECK_FALSE(s1.is_zero());
  scalar_to_bytes(out, s1);
  CHECK(to_hex(out, 32) == to_hex(one));
}
