/*
   Copyright 2026 The Streamfold Authors

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

#include "streamfold/block.hpp"

namespace streamfold {

std::string to_hex(ByteView data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::optional<Bytes> from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = nibble(hex[2 * i]);
    int lo = nibble(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out[i] = std::uint8_t(hi << 4 | lo);
  }
  return out;
}

Bytes concat(ByteView a, ByteView b) {
  Bytes out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Ok: return "ok";
    case Status::MaximumLengthExceeded: return "maximum input length exceeded";
    case Status::KeyLengthMismatch: return "key length mismatch";
    case Status::OptionRejected: return "option rejected";
  }
  return "unknown status";
}

const char* to_string(KeyManagement km) {
  switch (km) {
    case KeyManagement::None: return "none";
    case KeyManagement::Runtime: return "runtime";
    case KeyManagement::Erased: return "erased";
  }
  return "unknown";
}

void validate(const BlockParams& p) {
  if (p.block_len == 0) throw ContractViolation("block_len must be positive");
  if (p.output_len == 0) throw ContractViolation("output_len must be positive");
  if (p.max_input_length == 0) throw ContractViolation("max_input_length must be positive");
  if (p.buf_multiple == 0 || p.buf_multiple > kMaxBufMultiple)
    throw ContractViolation("buf_multiple must be in 1..16");
  if ((p.km == KeyManagement::None) != (p.key_len == 0))
    throw ContractViolation("key_len must be zero exactly when there is no key");
}

BlockDescriptor::BlockDescriptor(BlockParams params)
    : params_(params), natural_limit_(params.max_input_length) {
  validate(params_);
}

void BlockDescriptor::set_max_input_length(std::uint64_t max_input_length) {
  if (max_input_length == 0 || max_input_length > natural_limit_)
    throw ContractViolation("max_input_length must be in 1..natural limit");
  params_.max_input_length = max_input_length;
}

SplitResult split_at_last(std::size_t unit_len, ByteView data) {
  if (unit_len == 0) throw ContractViolation("split_at_last: unit length must be positive");
  std::size_t n = data.size() / unit_len;
  std::size_t rem = data.size() % unit_len;
  if (rem == 0 && n > 0) --n;
  return {data.first(n * unit_len), data.subspan(n * unit_len)};
}

}  // namespace streamfold
