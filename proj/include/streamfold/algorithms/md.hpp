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

#pragma once

// Merkle-Damgard hashes: MD5, SHA-1, SHA-256, SHA-512.
//
// All four share the same shape: a word array state, a compression function
// over one block, and padding `0x80 || 0* || bitlen` on the final block. They
// differ in word size, endianness and the width of the length field, which the
// Traits parameter supplies.

#include <algorithm>
#include <array>
#include <cstring>

#include "streamfold/block.hpp"

namespace streamfold {

struct Md5Traits {
  using Word = std::uint32_t;
  static constexpr std::size_t kWords = 4;
  static constexpr std::size_t kBlockLen = 64;
  static constexpr std::size_t kOutputLen = 16;
  static constexpr std::size_t kLengthFieldLen = 8;
  static constexpr bool kBigEndian = false;
  static constexpr const char* kName = "md5";
  static const std::array<Word, kWords> kIv;
  static void compress(std::array<Word, kWords>& h, const std::uint8_t* block);
};

struct Sha1Traits {
  using Word = std::uint32_t;
  static constexpr std::size_t kWords = 5;
  static constexpr std::size_t kBlockLen = 64;
  static constexpr std::size_t kOutputLen = 20;
  static constexpr std::size_t kLengthFieldLen = 8;
  static constexpr bool kBigEndian = true;
  static constexpr const char* kName = "sha1";
  static const std::array<Word, kWords> kIv;
  static void compress(std::array<Word, kWords>& h, const std::uint8_t* block);
};

struct Sha256Traits {
  using Word = std::uint32_t;
  static constexpr std::size_t kWords = 8;
  static constexpr std::size_t kBlockLen = 64;
  static constexpr std::size_t kOutputLen = 32;
  static constexpr std::size_t kLengthFieldLen = 8;
  static constexpr bool kBigEndian = true;
  static constexpr const char* kName = "sha256";
  static const std::array<Word, kWords> kIv;
  static void compress(std::array<Word, kWords>& h, const std::uint8_t* block);
};

struct Sha512Traits {
  using Word = std::uint64_t;
  static constexpr std::size_t kWords = 8;
  static constexpr std::size_t kBlockLen = 128;
  static constexpr std::size_t kOutputLen = 64;
  static constexpr std::size_t kLengthFieldLen = 16;
  static constexpr bool kBigEndian = true;
  static constexpr const char* kName = "sha512";
  static const std::array<Word, kWords> kIv;
  static void compress(std::array<Word, kWords>& h, const std::uint8_t* block);
};

template <typename Traits>
class MdHash : public BlockDescriptor {
 public:
  using Index = NoIndex;
  using Word = typename Traits::Word;
  struct State {
    std::array<Word, Traits::kWords> h;
    friend bool operator==(const State&, const State&) = default;
  };
  using SpecState = State;

  explicit MdHash(std::size_t buf_multiple = 1)
      : BlockDescriptor({.km = KeyManagement::None,
                         .block_len = Traits::kBlockLen,
                         .output_len = Traits::kOutputLen,
                         .max_input_length = kMaxLengthMd,
                         .buf_multiple = buf_multiple,
                         .key_len = 0}) {}

  static constexpr const char* name() { return Traits::kName; }
  std::size_t output_len(NoIndex) const { return Traits::kOutputLen; }

  State init(NoIndex, ByteView) const { return State{Traits::kIv}; }

  void update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const {
    fold_blocks(st, Traits::kBlockLen, prevlen, blocks,
                [](State& s, std::uint64_t, ByteView b) { Traits::compress(s.h, b.data()); });
  }

  void update_last(State& st, std::uint64_t prevlen, ByteView last) const {
    if (last.size() > Traits::kBlockLen)
      throw ContractViolation("update_last: more than one block");
    std::array<std::uint8_t, 2 * Traits::kBlockLen> tail{};
    std::memcpy(tail.data(), last.data(), last.size());
    tail[last.size()] = 0x80;
    const std::size_t tail_len =
        last.size() + 1 + Traits::kLengthFieldLen <= Traits::kBlockLen ? Traits::kBlockLen
                                                                       : 2 * Traits::kBlockLen;
    encode_bit_length(tail.data() + tail_len - Traits::kLengthFieldLen, prevlen + last.size());
    for (std::size_t off = 0; off < tail_len; off += Traits::kBlockLen)
      Traits::compress(st.h, tail.data() + off);
  }

  void finish(ByteView, const State& st, MutableByteView out) const { serialize(st, out); }

  SpecState reflect(const State& st) const { return st; }

  // Pure side.

  /// One-shot: pad the whole message, then compress every block in turn.
  Bytes spec(NoIndex, ByteView, ByteView input) const {
    Bytes msg(input.begin(), input.end());
    msg.push_back(0x80);
    while (msg.size() % Traits::kBlockLen != Traits::kBlockLen - Traits::kLengthFieldLen)
      msg.push_back(0);
    msg.resize(msg.size() + Traits::kLengthFieldLen);
    encode_bit_length(msg.data() + msg.size() - Traits::kLengthFieldLen, input.size());
    auto h = Traits::kIv;
    for (std::size_t off = 0; off < msg.size(); off += Traits::kBlockLen)
      Traits::compress(h, msg.data() + off);
    Bytes out(Traits::kOutputLen);
    serialize(State{h}, out);
    return out;
  }

  SpecState init_s(NoIndex, ByteView) const { return SpecState{Traits::kIv}; }

  SpecState update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const {
    return derive_update_multi(Traits::kBlockLen, &update_block_s)(std::move(s), prevlen, blocks);
  }

  SpecState update_last_s(SpecState s, std::uint64_t prevlen, ByteView last) const {
    update_last(s, prevlen, last);
    return s;
  }

  Bytes finish_s(ByteView, const SpecState& s) const {
    Bytes out(Traits::kOutputLen);
    serialize(s, out);
    return out;
  }

  static SpecState update_block_s(SpecState s, std::uint64_t, ByteView block) {
    Traits::compress(s.h, block.data());
    return s;
  }

 private:
  static void encode_bit_length(std::uint8_t* dst, std::uint64_t byte_len) {
    // Byte counts are below 2^61, so the bit count fits in 64 bits; wider
    // length fields get leading zeros.
    const std::uint64_t bits = byte_len << 3;
    std::memset(dst, 0, Traits::kLengthFieldLen);
    if constexpr (Traits::kBigEndian)
      detail::store64_be(dst + Traits::kLengthFieldLen - 8, bits);
    else
      detail::store64_le(dst, bits);
  }

  static void serialize(const State& st, MutableByteView out) {
    std::array<std::uint8_t, Traits::kWords * sizeof(Word)> full{};
    for (std::size_t i = 0; i < Traits::kWords; ++i) {
      std::uint8_t* p = full.data() + i * sizeof(Word);
      if constexpr (sizeof(Word) == 4) {
        if constexpr (Traits::kBigEndian) detail::store32_be(p, st.h[i]);
        else detail::store32_le(p, st.h[i]);
      } else {
        detail::store64_be(p, st.h[i]);
      }
    }
    std::memcpy(out.data(), full.data(), std::min(out.size(), full.size()));
  }
};

using Md5 = MdHash<Md5Traits>;
using Sha1 = MdHash<Sha1Traits>;
using Sha256 = MdHash<Sha256Traits>;
using Sha512 = MdHash<Sha512Traits>;

extern template class MdHash<Md5Traits>;
extern template class MdHash<Sha1Traits>;
extern template class MdHash<Sha256Traits>;
extern template class MdHash<Sha512Traits>;

}  // namespace streamfold
