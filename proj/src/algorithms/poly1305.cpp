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

#include "streamfold/algorithms/poly1305.hpp"

#include <algorithm>
#include <cstring>

namespace streamfold {

using detail::load32_le;
using detail::store32_le;

namespace {

using BigInt = Poly1305::BigInt;

void require_key(ByteView key) {
  if (key.size() != Poly1305::kKeyLen)
    throw ContractViolation("poly1305: key must be 32 bytes");
}

// Multiply-accumulate one 16-byte block into h; hibit is 1 << 24 for full
// blocks and 0 for a padded final block that already carries its 0x01.
void absorb_block(Poly1305::State& st, const std::uint8_t* m, std::uint32_t hibit) {
  const auto& r = st.r;
  auto& h = st.h;
  const std::uint32_t s1 = r[1] * 5, s2 = r[2] * 5, s3 = r[3] * 5, s4 = r[4] * 5;

  h[0] += load32_le(m + 0) & 0x3ffffff;
  h[1] += (load32_le(m + 3) >> 2) & 0x3ffffff;
  h[2] += (load32_le(m + 6) >> 4) & 0x3ffffff;
  h[3] += (load32_le(m + 9) >> 6) & 0x3ffffff;
  h[4] += (load32_le(m + 12) >> 8) | hibit;

  using u64 = std::uint64_t;
  u64 d0 = u64(h[0]) * r[0] + u64(h[1]) * s4 + u64(h[2]) * s3 + u64(h[3]) * s2 + u64(h[4]) * s1;
  u64 d1 = u64(h[0]) * r[1] + u64(h[1]) * r[0] + u64(h[2]) * s4 + u64(h[3]) * s3 + u64(h[4]) * s2;
  u64 d2 = u64(h[0]) * r[2] + u64(h[1]) * r[1] + u64(h[2]) * r[0] + u64(h[3]) * s4 + u64(h[4]) * s3;
  u64 d3 = u64(h[0]) * r[3] + u64(h[1]) * r[2] + u64(h[2]) * r[1] + u64(h[3]) * r[0] + u64(h[4]) * s4;
  u64 d4 = u64(h[0]) * r[4] + u64(h[1]) * r[3] + u64(h[2]) * r[2] + u64(h[3]) * r[1] + u64(h[4]) * r[0];

  std::uint32_t c;
  c = std::uint32_t(d0 >> 26); h[0] = std::uint32_t(d0) & 0x3ffffff;
  d1 += c; c = std::uint32_t(d1 >> 26); h[1] = std::uint32_t(d1) & 0x3ffffff;
  d2 += c; c = std::uint32_t(d2 >> 26); h[2] = std::uint32_t(d2) & 0x3ffffff;
  d3 += c; c = std::uint32_t(d3 >> 26); h[3] = std::uint32_t(d3) & 0x3ffffff;
  d4 += c; c = std::uint32_t(d4 >> 26); h[4] = std::uint32_t(d4) & 0x3ffffff;
  h[0] += c * 5; c = h[0] >> 26; h[0] &= 0x3ffffff;
  h[1] += c;
}

BigInt from_le(ByteView bytes) {
  BigInt n = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) n = (n << 8) | bytes[i];
  return n;
}

BigInt from_limbs(const std::array<std::uint32_t, 5>& limbs) {
  BigInt n = 0;
  for (int i = 4; i >= 0; --i) n = (n << 26) + limbs[i];
  return n;
}

BigInt clamp_r(ByteView key) {
  static const BigInt kClamp("0x0ffffffc0ffffffc0ffffffc0fffffff");
  return from_le(key.first(16)) & kClamp;
}

Bytes tag_bytes(const BigInt& acc, ByteView key) {
  BigInt tag = (acc + from_le(key.subspan(16, 16))) & ((BigInt(1) << 128) - 1);
  Bytes out(Poly1305::kTagLen);
  for (auto& b : out) {
    b = static_cast<std::uint8_t>(tag & 0xff);
    tag >>= 8;
  }
  return out;
}

// The defining equation: acc = (acc + n) * r mod p, with n the block read
// little-endian plus a single bit just above its last byte.
BigInt step(const BigInt& acc, const BigInt& r, ByteView chunk) {
  BigInt n = from_le(chunk) + (BigInt(1) << (8 * chunk.size()));
  return ((acc + n) * r) % Poly1305::prime();
}

}  // namespace

const BigInt& Poly1305::prime() {
  static const BigInt p = (BigInt(1) << 130) - 5;
  return p;
}

Poly1305::Poly1305(std::size_t buf_multiple)
    : BlockDescriptor({.km = KeyManagement::Runtime,
                       .block_len = kBlockLen,
                       .output_len = kTagLen,
                       .max_input_length = kMaxLength64,
                       .buf_multiple = buf_multiple,
                       .key_len = kKeyLen}) {}

auto Poly1305::init(NoIndex, ByteView key) const -> State {
  require_key(key);
  State st;
  st.r[0] = load32_le(key.data() + 0) & 0x3ffffff;
  st.r[1] = (load32_le(key.data() + 3) >> 2) & 0x3ffff03;
  st.r[2] = (load32_le(key.data() + 6) >> 4) & 0x3ffc0ff;
  st.r[3] = (load32_le(key.data() + 9) >> 6) & 0x3f03fff;
  st.r[4] = (load32_le(key.data() + 12) >> 8) & 0x00fffff;
  return st;
}

void Poly1305::update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const {
  fold_blocks(st, kBlockLen, prevlen, blocks,
              [](State& s, std::uint64_t, ByteView b) { absorb_block(s, b.data(), 1u << 24); });
}

void Poly1305::update_last(State& st, std::uint64_t, ByteView last) const {
  if (last.size() > kBlockLen) throw ContractViolation("update_last: more than one block");
  if (last.size() == kBlockLen) {
    absorb_block(st, last.data(), 1u << 24);
  } else if (!last.empty()) {
    std::array<std::uint8_t, kBlockLen> block{};
    std::memcpy(block.data(), last.data(), last.size());
    block[last.size()] = 1;
    absorb_block(st, block.data(), 0);
  }
}

void Poly1305::finish(ByteView key, const State& st, MutableByteView out) const {
  require_key(key);
  auto h = st.h;
  std::uint32_t c;
  c = h[1] >> 26; h[1] &= 0x3ffffff;
  h[2] += c; c = h[2] >> 26; h[2] &= 0x3ffffff;
  h[3] += c; c = h[3] >> 26; h[3] &= 0x3ffffff;
  h[4] += c; c = h[4] >> 26; h[4] &= 0x3ffffff;
  h[0] += c * 5; c = h[0] >> 26; h[0] &= 0x3ffffff;
  h[1] += c;

  // g = h + 5 - 2^130; keep g when it does not borrow, i.e. when h >= p.
  std::array<std::uint32_t, 5> g;
  g[0] = h[0] + 5; c = g[0] >> 26; g[0] &= 0x3ffffff;
  g[1] = h[1] + c; c = g[1] >> 26; g[1] &= 0x3ffffff;
  g[2] = h[2] + c; c = g[2] >> 26; g[2] &= 0x3ffffff;
  g[3] = h[3] + c; c = g[3] >> 26; g[3] &= 0x3ffffff;
  g[4] = h[4] + c - (1u << 26);

  std::uint32_t mask = (g[4] >> 31) - 1;
  for (int i = 0; i < 5; ++i) h[i] = (h[i] & ~mask) | (g[i] & mask);

  std::uint32_t w0 = h[0] | (h[1] << 26);
  std::uint32_t w1 = (h[1] >> 6) | (h[2] << 20);
  std::uint32_t w2 = (h[2] >> 12) | (h[3] << 14);
  std::uint32_t w3 = (h[3] >> 18) | (h[4] << 8);

  std::uint64_t f;
  f = std::uint64_t(w0) + load32_le(key.data() + 16); w0 = std::uint32_t(f);
  f = std::uint64_t(w1) + load32_le(key.data() + 20) + (f >> 32); w1 = std::uint32_t(f);
  f = std::uint64_t(w2) + load32_le(key.data() + 24) + (f >> 32); w2 = std::uint32_t(f);
  f = std::uint64_t(w3) + load32_le(key.data() + 28) + (f >> 32); w3 = std::uint32_t(f);

  store32_le(out.data() + 0, w0);
  store32_le(out.data() + 4, w1);
  store32_le(out.data() + 8, w2);
  store32_le(out.data() + 12, w3);
}

auto Poly1305::reflect(const State& st) const -> SpecState {
  return {from_limbs(st.r), from_limbs(st.h) % prime()};
}

Bytes Poly1305::spec(NoIndex, ByteView key, ByteView input) const {
  require_key(key);
  const BigInt r = clamp_r(key);
  BigInt acc = 0;
  for (std::size_t off = 0; off < input.size(); off += kBlockLen)
    acc = step(acc, r, input.subspan(off, std::min(kBlockLen, input.size() - off)));
  return tag_bytes(acc, key);
}

auto Poly1305::init_s(NoIndex, ByteView key) const -> SpecState {
  require_key(key);
  return {clamp_r(key), 0};
}

auto Poly1305::update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const
    -> SpecState {
  auto update_block = [](SpecState st, std::uint64_t, ByteView block) {
    st.acc = step(st.acc, st.r, block);
    return st;
  };
  return derive_update_multi(kBlockLen, update_block)(std::move(s), prevlen, blocks);
}

auto Poly1305::update_last_s(SpecState s, std::uint64_t, ByteView last) const -> SpecState {
  if (last.size() > kBlockLen) throw ContractViolation("update_last: more than one block");
  if (!last.empty()) s.acc = step(s.acc, s.r, last);
  return s;
}

Bytes Poly1305::finish_s(ByteView key, const SpecState& s) const {
  require_key(key);
  return tag_bytes(s.acc, key);
}

}  // namespace streamfold
