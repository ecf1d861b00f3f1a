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

#include <lsa/crypto/pairing.hpp>

namespace lsa::crypto {

namespace {

// One line evaluation, already scaled by xi (an Fp2 factor the final
// exponentiation kills). With the untwist (x, y) -> (x xi^-1 w^4,
// y xi^-1 w^3) and twist-side slope m through T = (tx, ty), the line at
// P = (px, py) collapses to
//   xi*py + (m*tx - ty) w^3 + (-m*px) w^5.
struct Line {
  Fp2 c0, c3, c5;
};

Line line_at(const Fp2& m, const Fp2& tx, const Fp2& ty, const Fp& px, const Fp& py) {
  return {
      fp2_mul_by_xi(Fp2{py, Fp::zero()}),
      m * tx - ty,
      -fp2_scale(m, px),
  };
}

// Miller loop state advances on affine twist coordinates; slopes need one
// Fp2 inversion per step, which profiles fine at this scale.
struct MillerState {
  Fp2 tx, ty;
};

Fp12 miller_step_dbl(Fp12 f, MillerState& s, const Fp& px, const Fp& py) {
  Fp2 m = fp2_scale(fp2_sqr(s.tx), fp_from_u64(3)) * fp2_inv(fp2_dbl(s.ty));
  Line l = line_at(m, s.tx, s.ty, px, py);
  Fp2 x3 = fp2_sqr(m) - fp2_dbl(s.tx);
  Fp2 y3 = m * (s.tx - x3) - s.ty;
  s = {x3, y3};
  return fp12_mul_by_line(f, l.c0, l.c3, l.c5);
}

Fp12 miller_step_add(Fp12 f, MillerState& s, const Fp2& qx, const Fp2& qy, const Fp& px,
                     const Fp& py) {
  Fp2 m = (s.ty - qy) * fp2_inv(s.tx - qx);
  Line l = line_at(m, s.tx, s.ty, px, py);
  Fp2 x3 = fp2_sqr(m) - s.tx - qx;
  Fp2 y3 = m * (s.tx - x3) - s.ty;
  s = {x3, y3};
  return fp12_mul_by_line(f, l.c0, l.c3, l.c5);
}

Fp12 cyc_pow_abs_z(const Fp12& x) {
  Fp12 result = Fp12::one();
  for (int i = 63; i >= 0; --i) {
    result = fp12_sqr(result);
    if ((kZAbs >> i) & 1) result = result * x;
  }
  return result;
}

// x^(z-1) on the cyclotomic subgroup; z - 1 = -(|z| + 1).
Fp12 cyc_pow_z_minus_1(const Fp12& x) {
  constexpr uint64_t e = kZAbs + 1;
  Fp12 result = Fp12::one();
  for (int i = 63; i >= 0; --i) {
    result = fp12_sqr(result);
    if ((e >> i) & 1) result = result * x;
  }
  return fp12_conj(result);
}

// x^z = conj(x^|z|) on the cyclotomic subgroup.
Fp12 cyc_pow_z(const Fp12& x) { return fp12_conj(cyc_pow_abs_z(x)); }

}  // namespace

Fp12 miller_loop(const G1Affine& p, const G2Affine& q) {
  if (p.infinity || q.infinity) return Fp12::one();
  MillerState s{q.x, q.y};
  Fp12 f = Fp12::one();
  // MSB of |z| is consumed by initializing T = Q.
  for (int i = 62; i >= 0; --i) {
    f = fp12_sqr(f);
    f = miller_step_dbl(f, s, p.x, p.y);
    if ((kZAbs >> i) & 1) f = miller_step_add(f, s, q.x, q.y, p.x, p.y);
  }
  // z < 0: f_{z} = conj(f_{|z|}) up to factors the final exponentiation kills.
  return fp12_conj(f);
}

Fp12 final_exponentiation(const Fp12& f) {
  // Easy part: f^((p^6-1)(p^2+1)).
  Fp12 t = fp12_conj(f) * fp12_inv(f);
  Fp12 m = fp12_frobenius2(t) * t;

  // Hard part on the cyclotomic element m: m^(3h) via
  // (z-1)^2 (z+p) (z^2+p^2-1) + 3.
  Fp12 y1 = cyc_pow_z_minus_1(cyc_pow_z_minus_1(m));
  Fp12 y2 = cyc_pow_z(y1) * fp12_frobenius(y1);
  Fp12 y3 = cyc_pow_z(cyc_pow_z(y2)) * fp12_frobenius2(y2) * fp12_conj(y2);
  return y3 * fp12_sqr(m) * m;
}

bool pairing_check(const std::vector<std::pair<G1Affine, G2Affine>>& pairs) {
  Fp12 acc = Fp12::one();
  for (const auto& [p, q] : pairs) acc = acc * miller_loop(p, q);
  return final_exponentiation(acc) == Fp12::one();
}

}  // namespace lsa::crypto
