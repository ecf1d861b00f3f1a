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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lsa {

using Bytes = std::vector<uint8_t>;

// Error codes carried by every lsa::Error. Codes are part of the API
// contract: callers dispatch on them, messages are for humans.
enum class Errc {
  hex_invalid,
  encoding_overflow,
  malformed_claim_tag,
  malformed_claim_truncated,
  malformed_claim_trailing,
  malformed_claim_kind,
  wallet_format,
  attestation_not_found,
  trust_store_format,
  key_not_found,
  unknown_call,
  invalid_parameters,
  epoch_rejected,
  claim_mismatch,
  invalid_node_signature,
  empty_aggregate,
  insufficient_responses,
  epoch_desync,
  bad_point_encoding,
  bad_config,
  io_error,
  net_error,
};

const char* errc_name(Errc c);
// Reverse of errc_name for wire error codes; unknown names map to net_error.
Errc errc_from_name(const std::string& name);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

// Hex, lowercase, no prefix. decode rejects odd length and non-hex digits.
std::string to_hex(const uint8_t* data, size_t len);
std::string to_hex(const Bytes& b);
Bytes from_hex(std::string_view hex);

Bytes to_bytes(std::string_view s);
std::string to_string(const Bytes& b);

// Big-endian fixed-width integer append.
void put_u16(Bytes& out, uint16_t v);
void put_u32(Bytes& out, uint32_t v);
void put_u64(Bytes& out, uint64_t v);

// varbytes(x) = u32 big-endian length || raw bytes.
void put_varbytes(Bytes& out, const uint8_t* data, size_t len);
void put_varbytes(Bytes& out, const Bytes& b);

// Sequential reader over an immutable byte string; all getters throw
// malformed_claim_truncated past the end.
class ByteReader {
 public:
  explicit ByteReader(const Bytes& data) : data_(data) {}

  uint8_t u8();
  uint16_t u16();
  uint32_t u32();
  uint64_t u64();
  Bytes varbytes();
  Bytes take(size_t n);
  size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  const Bytes& data_;
  size_t pos_ = 0;
};

}  // namespace lsa
