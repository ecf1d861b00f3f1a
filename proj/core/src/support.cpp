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

#include <lsa/support.hpp>

namespace lsa {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::hex_invalid: return "hex_invalid";
    case Errc::encoding_overflow: return "encoding_overflow";
    case Errc::malformed_claim_tag: return "malformed_claim_tag";
    case Errc::malformed_claim_truncated: return "malformed_claim_truncated";
    case Errc::malformed_claim_trailing: return "malformed_claim_trailing";
    case Errc::malformed_claim_kind: return "malformed_claim_kind";
    case Errc::wallet_format: return "wallet_format";
    case Errc::attestation_not_found: return "attestation_not_found";
    case Errc::trust_store_format: return "trust_store_format";
    case Errc::key_not_found: return "key_not_found";
    case Errc::unknown_call: return "unknown_call";
    case Errc::invalid_parameters: return "invalid_parameters";
    case Errc::epoch_rejected: return "epoch_rejected";
    case Errc::claim_mismatch: return "claim_mismatch";
    case Errc::invalid_node_signature: return "invalid_node_signature";
    case Errc::empty_aggregate: return "empty_aggregate";
    case Errc::insufficient_responses: return "insufficient_responses";
    case Errc::epoch_desync: return "epoch_desync";
    case Errc::bad_point_encoding: return "bad_point_encoding";
    case Errc::bad_config: return "bad_config";
    case Errc::io_error: return "io_error";
    case Errc::net_error: return "net_error";
  }
  return "unknown";
}

Errc errc_from_name(const std::string& name) {
  static const Errc all[] = {
      Errc::hex_invalid,         Errc::encoding_overflow,
      Errc::malformed_claim_tag, Errc::malformed_claim_truncated,
      Errc::malformed_claim_trailing, Errc::malformed_claim_kind,
      Errc::wallet_format,       Errc::attestation_not_found,
      Errc::trust_store_format,  Errc::key_not_found,
      Errc::unknown_call,        Errc::invalid_parameters,
      Errc::epoch_rejected,      Errc::claim_mismatch,
      Errc::invalid_node_signature, Errc::empty_aggregate,
      Errc::insufficient_responses, Errc::epoch_desync,
      Errc::bad_point_encoding,  Errc::bad_config,
      Errc::io_error,            Errc::net_error,
  };
  for (Errc c : all)
    if (name == errc_name(c)) return c;
  return Errc::net_error;
}

static const char kHexDigits[] = "0123456789abcdef";

std::string to_hex(const uint8_t* data, size_t len) {
  std::string out;
  out.reserve(len * 2);
  for (size_t i = 0; i < len; ++i) {
    out.push_back(kHexDigits[data[i] >> 4]);
    out.push_back(kHexDigits[data[i] & 0x0f]);
  }
  return out;
}

std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

static int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) raise(Errc::hex_invalid, "odd hex length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); ++i) {
    int hi = hex_nibble(hex[2 * i]);
    int lo = hex_nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) raise(Errc::hex_invalid, "non-hex digit");
    out[i] = static_cast<uint8_t>(hi << 4 | lo);
  }
  return out;
}

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::string to_string(const Bytes& b) { return std::string(b.begin(), b.end()); }

void put_u16(Bytes& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void put_u32(Bytes& out, uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(v >> s));
}

void put_u64(Bytes& out, uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<uint8_t>(v >> s));
}

void put_varbytes(Bytes& out, const uint8_t* data, size_t len) {
  if (len > 0xffffffffu) raise(Errc::encoding_overflow, "varbytes too long");
  put_u32(out, static_cast<uint32_t>(len));
  out.insert(out.end(), data, data + len);
}

void put_varbytes(Bytes& out, const Bytes& b) { put_varbytes(out, b.data(), b.size()); }

uint8_t ByteReader::u8() {
  if (remaining() < 1) raise(Errc::malformed_claim_truncated, "u8 past end");
  return data_[pos_++];
}

uint16_t ByteReader::u16() {
  uint16_t v = u8();
  return static_cast<uint16_t>(v << 8 | u8());
}

uint32_t ByteReader::u32() {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = v << 8 | u8();
  return v;
}

uint64_t ByteReader::u64() {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = v << 8 | u8();
  return v;
}

Bytes ByteReader::take(size_t n) {
  if (remaining() < n) raise(Errc::malformed_claim_truncated, "bytes past end");
  Bytes out(data_.begin() + static_cast<long>(pos_), data_.begin() + static_cast<long>(pos_ + n));
  pos_ += n;
  return out;
}

Bytes ByteReader::varbytes() {
  uint32_t len = u32();
  return take(len);
}

}  // namespace lsa
