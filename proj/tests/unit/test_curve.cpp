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

#include <lsa/crypto/curve.hpp>

#include "golden.hpp"

using namespace lsa;
using namespace lsa::crypto;

namespace {

G1Jac g1_small(uint64_t k) { return g1_mul(g1_to_jac(g1_generator()), wide::Limbs<1>{k}); }
G2Jac g2_small(uint64_t k) { return g2_mul(g2_to_jac(g2_generator()), wide::Limbs<1>{k}); }

}  // namespace

TEST_CASE("generators match frozen encodings") {
  auto g = testing::load_golden("bls_params.json");
  CHECK(to_hex(g1_compress(g1_generator())) == g["g1_generator"].get<std::string>());
  CHECK(to_hex(g2_compress(g2_generator())) == g["g2_generator"].get<std::string>());
  CHECK(g1_on_curve(g1_generator()));
  CHECK(g2_on_curve(g2_generator()));
  CHECK(g1_in_subgroup(g1_generator()));
  CHECK(g2_in_subgroup(g2_generator()));
}

TEST_CASE("group laws hold on generator multiples") {
  G1Jac p = g1_small(3), q = g1_small(5), r = g1_small(11);
  CHECK(g1_to_affine(g1_add(p, q)) == g1_to_affine(g1_add(q, p)));
  CHECK(g1_to_affine(g1_add(g1_add(p, q), r)) == g1_to_affine(g1_add(p, g1_add(q, r))));
  CHECK(g1_to_affine(g1_add(p, q)) == g1_to_affine(g1_small(8)));
  CHECK(g1_to_affine(g1_add(p, p)) == g1_to_affine(g1_dbl(p)));
  CHECK(g1_add(p, g1_neg(p)).is_identity());
  CHECK(g1_to_affine(g1_add(p, G1Jac::identity())) == g1_to_affine(p));

  G2Jac p2 = g2_small(3), q2 = g2_small(5);
  CHECK(g2_to_affine(g2_add(p2, q2)) == g2_to_affine(g2_small(8)));
  CHECK(g2_to_affine(g2_add(p2, p2)) == g2_to_affine(g2_dbl(p2)));
  CHECK(g2_add(p2, g2_neg(p2)).is_identity());
}

TEST_CASE("scalar multiplication by the group order yields identity") {
  CHECK(g1_mul(g1_to_jac(g1_generator()), params::kR).is_identity());
  CHECK(g2_mul(g2_to_jac(g2_generator()), params::kR).is_identity());
  CHECK(g1_mul(g1_small(7), params::kR).is_identity());
}

TEST_CASE("scalar multiplication distributes") {
  Scalar a = scalar_from_bytes_reduce(testing::TestRng(10).bytes(32).data(), 32);
  G1Jac g = g1_to_jac(g1_generator());
  G1Jac left = g1_mul(g, a);
  // (a+1) G = a G + G
  G1Jac right = g1_add(left, g);
  wide::Limbs<4> a1{};
  wide::add(a1, a.l, wide::Limbs<4>{1});  // a < r - 1 with overwhelming probability
  CHECK(g1_to_affine(g1_mul(g, a1)) == g1_to_affine(right));
}

TEST_CASE("compression round-trips") {
  for (uint64_t k : {1ULL, 2ULL, 3ULL, 17ULL, 12345ULL}) {
    G1Affine p = g1_to_affine(g1_small(k));
    Bytes enc = g1_compress(p);
    CHECK(enc.size() == kG1CompressedSize);
    auto back = g1_decompress(enc);
    REQUIRE(back.has_value());
    CHECK(*back == p);

    G1Affine m = g1_neg(p);
    auto back_m = g1_decompress(g1_compress(m));
    REQUIRE(back_m.has_value());
    CHECK(*back_m == m);

    G2Affine p2 = g2_to_affine(g2_small(k));
    Bytes enc2 = g2_compress(p2);
    CHECK(enc2.size() == kG2CompressedSize);
    auto back2 = g2_decompress(enc2);
    REQUIRE(back2.has_value());
    CHECK(*back2 == p2);
    auto back2_m = g2_decompress(g2_compress(g2_neg(p2)));
    REQUIRE(back2_m.has_value());
    CHECK(*back2_m == g2_neg(p2));
  }
}

TEST_CASE("identity encodes to the canonical infinity encoding") {
  Bytes inf1 = g1_compress(G1Affine::identity());
  CHECK(to_hex(inf1) == "c0" + std::string(94, '0'));
  auto back = g1_decompress(inf1);
  REQUIRE(back.has_value());
  CHECK(back->infinity);

  Bytes inf2 = g2_compress(G2Affine::identity());
  CHECK(to_hex(inf2) == "c0" + std::string(190, '0'));
  auto back2 = g2_decompress(inf2);
  REQUIRE(back2.has_value());
  CHECK(back2->infinity);
}

TEST_CASE("malformed encodings are rejected") {
  auto g = testing::load_golden("bls_vectors.json");
  const auto& bad = g["bad_encodings"];
  for (auto name : {"g1_not_in_subgroup", "g1_x_ge_p", "g1_uncompressed_flag_clear",
                    "g1_infinity_nonzero_body", "g1_infinity_sort_flag", "g1_not_on_curve_x"}) {
    Bytes enc = from_hex(bad[name].get<std::string>());
    CHECK_FALSE(g1_decompress(enc).has_value());
  }
  for (auto name : {"g2_not_in_subgroup", "g2_zero_bytes"}) {
    Bytes enc = from_hex(bad[name].get<std::string>());
    CHECK_FALSE(g2_decompress(enc).has_value());
  }
  CHECK_FALSE(g1_decompress(Bytes(47, 0)).has_value());
  CHECK_FALSE(g1_decompress(Bytes(49, 0)).has_value());
  CHECK_FALSE(g2_decompress(Bytes{}).has_value());

  // Non-subgroup points pass with the check disabled, proving the rejection
  // above comes from the subgroup test and not from curve membership.
  Bytes ns = from_hex(bad["g1_not_in_subgroup"].get<std::string>());
  auto loose = g1_decompress(ns, /*subgroup_check=*/false);
  REQUIRE(loose.has_value());
  CHECK(g1_on_curve(*loose));
  CHECK_FALSE(g1_in_subgroup(*loose));
}

TEST_CASE("cofactor clearing lands points in the subgroup") {
  auto g = testing::load_golden("bls_vectors.json");
  Bytes ns = from_hex(g["bad_encodings"]["g2_not_in_subgroup"].get<std::string>());
  auto p = g2_decompress(ns, /*subgroup_check=*/false);
  REQUIRE(p.has_value());
  CHECK_FALSE(g2_in_subgroup(*p));
  G2Affine cleared = g2_to_affine(g2_clear_cofactor(g2_to_jac(*p)));
  CHECK(g2_on_curve(cleared));
  CHECK(g2_in_subgroup(cleared));
}
