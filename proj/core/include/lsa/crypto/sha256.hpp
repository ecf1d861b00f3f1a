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

#include <array>
#include <cstdint>
#include <cstring>

#include <lsa/support.hpp>

namespace lsa::crypto {

inline constexpr size_t kSha256DigestSize = 32;
inline constexpr size_t kSha256BlockSize = 64;

using Digest = std::array<uint8_t, kSha256DigestSize>;

class Sha256 {
 public:
  Sha256() { reset(); }

  void reset();
  void update(const uint8_t* data, size_t len);
  void update(const Bytes& b) { update(b.data(), b.size()); }
  Digest finish();

 private:
  void compress(const uint8_t block[kSha256BlockSize]);

  uint32_t state_[8];
  uint8_t buf_[kSha256BlockSize];
  size_t buf_len_;
  uint64_t total_len_;
};

Digest sha256(const uint8_t* data, size_t len);
Digest sha256(const Bytes& b);

Digest hmac_sha256(const Bytes& key, const Bytes& msg);

// RFC 5869 with SHA-256.
Digest hkdf_extract(const Bytes& salt, const Bytes& ikm);
Bytes hkdf_expand(const Digest& prk, const Bytes& info, size_t length);

inline Bytes digest_bytes(const Digest& d) { return Bytes(d.begin(), d.end()); }

}  // namespace lsa::crypto
