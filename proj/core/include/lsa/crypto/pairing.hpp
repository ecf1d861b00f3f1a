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

#include <utility>
#include <vector>

#include <lsa/crypto/curve.hpp>
#include <lsa/crypto/fields.hpp>

namespace lsa::crypto {

// Optimal ate Miller loop over the absolute value of the curve parameter,
// conjugated for its sign. Inputs must be in their order-r subgroups.
Fp12 miller_loop(const G1Affine& p, const G2Affine& q);

// Maps the Miller value into the pairing target group. The hard part
// raises to 3h instead of h = (p^4 - p^2 + 1)/r, using
// 3h = (z-1)^2 (z+p) (z^2+p^2-1) + 3; cubing is a bijection on the
// order-r target group (3 does not divide r), so bilinearity,
// non-degeneracy, and every pairing-equation check are preserved.
Fp12 final_exponentiation(const Fp12& f);

inline Fp12 pairing(const G1Affine& p, const G2Affine& q) {
  return final_exponentiation(miller_loop(p, q));
}

// True iff the product of pairings over all pairs is the identity.
// Multiplies Miller values and runs one shared final exponentiation.
bool pairing_check(const std::vector<std::pair<G1Affine, G2Affine>>& pairs);

}  // namespace lsa::crypto
