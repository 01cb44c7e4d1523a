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

#include "oracle.hpp"

#include <openssl/core_names.h>
#include <openssl/evp.h>
#include <openssl/params.h>

#include <memory>
#include <stdexcept>

namespace sftest {

using streamfold::AlgId;
using streamfold::Bytes;
using streamfold::ByteView;

namespace {

Bytes md_digest(const char* name, ByteView msg) {
  std::unique_ptr<EVP_MD, decltype(&EVP_MD_free)> md(EVP_MD_fetch(nullptr, name, nullptr),
                                                     &EVP_MD_free);
  if (!md) throw std::runtime_error(std::string("openssl: no digest ") + name);
  Bytes out(static_cast<std::size_t>(EVP_MD_get_size(md.get())));
  unsigned int len = 0;
  if (!EVP_Digest(msg.data(), msg.size(), out.data(), &len, md.get(), nullptr))
    throw std::runtime_error("openssl: EVP_Digest failed");
  out.resize(len);
  return out;
}

Bytes mac(const char* name, ByteView key, std::size_t size, ByteView msg) {
  std::unique_ptr<EVP_MAC, decltype(&EVP_MAC_free)> m(EVP_MAC_fetch(nullptr, name, nullptr),
                                                      &EVP_MAC_free);
  if (!m) throw std::runtime_error(std::string("openssl: no mac ") + name);
  std::unique_ptr<EVP_MAC_CTX, decltype(&EVP_MAC_CTX_free)> ctx(EVP_MAC_CTX_new(m.get()),
                                                                &EVP_MAC_CTX_free);
  OSSL_PARAM params[2] = {OSSL_PARAM_END, OSSL_PARAM_END};
  if (size != 0) params[0] = OSSL_PARAM_construct_size_t(OSSL_MAC_PARAM_SIZE, &size);
  if (!EVP_MAC_init(ctx.get(), key.data(), key.size(), params))
    throw std::runtime_error("openssl: EVP_MAC_init failed");
  if (!EVP_MAC_update(ctx.get(), msg.data(), msg.size()))
    throw std::runtime_error("openssl: EVP_MAC_update failed");
  Bytes out(64);
  std::size_t len = 0;
  if (!EVP_MAC_final(ctx.get(), out.data(), &len, out.size()))
    throw std::runtime_error("openssl: EVP_MAC_final failed");
  out.resize(len);
  return out;
}

}  // namespace

std::optional<Bytes> reference_digest(AlgId id, ByteView key, std::size_t digest_len,
                                      ByteView msg) {
  switch (id) {
    case AlgId::MD5: return md_digest("MD5", msg);
    case AlgId::SHA1: return md_digest("SHA1", msg);
    case AlgId::SHA2_256: return md_digest("SHA256", msg);
    case AlgId::SHA2_512: return md_digest("SHA512", msg);
    case AlgId::Blake2S:
      if (!key.empty()) return mac("BLAKE2SMAC", key, digest_len, msg);
      if (digest_len != 0 && digest_len != 32) return std::nullopt;
      return md_digest("BLAKE2S-256", msg);
    case AlgId::Blake2B:
      if (!key.empty()) return mac("BLAKE2BMAC", key, digest_len, msg);
      if (digest_len != 0 && digest_len != 64) return std::nullopt;
      return md_digest("BLAKE2B-512", msg);
    case AlgId::Poly1305: return mac("POLY1305", key, 0, msg);
  }
  return std::nullopt;
}

}  // namespace sftest
