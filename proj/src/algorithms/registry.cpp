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

#include "streamfold/algorithms.hpp"

#include <string>

namespace streamfold {

const char* to_string(AlgId id) {
  if (id == AlgId::Poly1305) return "poly1305";
  return to_string(static_cast<AgileAlgId>(id));
}

std::optional<AlgId> alg_id_from_string(std::string_view name) {
  for (auto id : kAllAlgorithms)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

std::optional<AgileAlgId> to_agile(AlgId id) {
  if (id == AlgId::Poly1305) return std::nullopt;
  return static_cast<AgileAlgId>(id);
}

namespace {

void reject(const std::string& what) { throw Error(Status::OptionRejected, what); }

void check_buf_multiple(std::size_t buf_multiple) {
  if (buf_multiple == 0 || buf_multiple > kMaxBufMultiple)
    reject("buf_multiple must be in 1..16");
}

}  // namespace

AnyAlgorithm instance(AlgId id, const InstanceOptions& options) {
  check_buf_multiple(options.buf_multiple);
  const bool is_blake2 = id == AlgId::Blake2S || id == AlgId::Blake2B;
  if (!is_blake2 && options.digest_len != 0) reject(std::string(to_string(id)) + ": fixed digest length");
  if (!is_blake2 && id != AlgId::Poly1305 && options.key_len != 0)
    reject(std::string(to_string(id)) + ": takes no key");
  if (id == AlgId::Poly1305 && options.key_len != 0 && options.key_len != Poly1305::kKeyLen)
    reject("poly1305: key must be 32 bytes");

  Blake2Options b2{options.key_len, options.digest_len, options.buf_multiple};
  switch (id) {
    case AlgId::MD5: return Md5(options.buf_multiple);
    case AlgId::SHA1: return Sha1(options.buf_multiple);
    case AlgId::SHA2_256: return Sha256(options.buf_multiple);
    case AlgId::SHA2_512: return Sha512(options.buf_multiple);
    case AlgId::Blake2S: return Blake2s(b2);
    case AlgId::Blake2B: return Blake2b(b2);
    case AlgId::Poly1305: return Poly1305(options.buf_multiple);
  }
  reject("unknown algorithm id");
  return Md5();
}

Agile agile_instance(std::size_t buf_multiple) {
  check_buf_multiple(buf_multiple);
  return Agile(buf_multiple);
}

}  // namespace streamfold
