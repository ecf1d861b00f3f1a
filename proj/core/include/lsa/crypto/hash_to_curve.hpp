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

// Random-oracle hashing into the G2 subgroup: expand_message_xmd over
// SHA-256, two Fp2 field elements per point, the Shallue-van de Woestijne
// map (generic-curve variant, Z = -1 for this twist), and cofactor
// clearing. The mapping constants derive from Z at startup.

#include <lsa/crypto/curve.hpp>
#include <lsa/support.hpp>

namespace lsa::crypto {

// Ciphersuite domain-separation tags. SVDW names the mapping above;
// signing and proof-of-possession use distinct tags.
inline const Bytes kDstSignature = to_bytes("BLS_SIG_BLS12381G2_XMD:SHA-256_SVDW_RO_POP_");
inline const Bytes kDstProofOfPossession =
    to_bytes("BLS_POP_BLS12381G2_XMD:SHA-256_SVDW_RO_POP_");

// RFC 9380 expand_message_xmd with SHA-256. dst must be 1..255 bytes,
// len_bytes at most 255 * 32.
Bytes expand_message_xmd(const Bytes& msg, const Bytes& dst, size_t len_bytes);

// count Fp2 elements, each from two 64-byte blocks reduced mod p.
std::vector<Fp2> hash_to_field_fp2(const Bytes& msg, const Bytes& dst, size_t count);

// Maps one field element onto the twist curve (not yet in the subgroup).
G2Affine map_to_curve_svdw(const Fp2& u);

// Full hash: two field elements, two mapped points, sum, cleared cofactor.
G2Affine hash_to_curve_g2(const Bytes& msg, const Bytes& dst);

}  // namespace lsa::crypto
