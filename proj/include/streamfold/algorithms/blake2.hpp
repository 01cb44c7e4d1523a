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

// BLAKE2s and BLAKE2b (RFC 7693), keyed and unkeyed.
//
// The key is absorbed as a zero-padded first block. RFC 7693 requires that
// block to carry the final flag when the message is empty, so `init` cannot
// compress it right away: it is parked in the block state and consumed by
// whichever of update_multi / update_last runs first. The streaming layer
// itself never keeps the key (KeyManagement::Erased).

#include <array>
#include <cstring>

#include "streamfold/block.hpp"

namespace streamfold {

using Counter128 = unsigned __int128;

struct Blake2sTraits {
  using Word = std::uint32_t;
  static constexpr std::size_t kBlockLen = 64;
  static constexpr std::size_t kMaxOutput = 32;
  static constexpr std::size_t kMaxKey = 32;
  static constexpr int kRounds = 10;
  static constexpr std::array<unsigned, 4> kRot = {16, 12, 8, 7};
  static constexpr const char* kName = "blake2s";
  static const std::array<Word, 8> kIv;
};

struct Blake2bTraits {
  using Word = std::uint64_t;
  static constexpr std::size_t kBlockLen = 128;
  static constexpr std::size_t kMaxOutput = 64;
  static constexpr std::size_t kMaxKey = 64;
  static constexpr int kRounds = 12;
  static constexpr std::array<unsigned, 4> kRot = {32, 24, 16, 63};
  static constexpr const char* kName = "blake2b";
  static const std::array<Word, 8> kIv;
};

struct Blake2Options {
  std::size_t key_len = 0;
  std::size_t digest_len = 0;  // 0 selects the maximum
  std::size_t buf_multiple = 1;
};

template <typename Traits>
class Blake2 : public BlockDescriptor {
 public:
  using Index = NoIndex;
  using Word = typename Traits::Word;
  static constexpr std::size_t kBlockLen = Traits::kBlockLen;

  struct State {
    std::array<Word, 8> h{};
    bool key_pending = false;
    std::array<std::uint8_t, kBlockLen> key_block{};
    friend bool operator==(const State&, const State&) = default;
  };
  using SpecState = State;

  /// Throws Error(OptionRejected) for key or digest lengths out of range.
  explicit Blake2(Blake2Options options = {});

  static constexpr const char* name() { return Traits::kName; }
  std::size_t output_len(NoIndex) const { return params().output_len; }

  /// The compression function F; `counter` is the byte offset t, `last`
  /// sets the finalization flag.
  static void compress(std::array<Word, 8>& h, const std::uint8_t* block, Counter128 counter,
                       bool last);

  State init(NoIndex, ByteView key) const;
  void update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const;
  void update_last(State& st, std::uint64_t prevlen, ByteView last) const;
  void finish(ByteView, const State& st, MutableByteView out) const;
  SpecState reflect(const State& st) const { return st; }

  /// One-shot, straight from the RFC: key block, data blocks, final block.
  Bytes spec(NoIndex, ByteView key, ByteView input) const;
  SpecState init_s(NoIndex, ByteView key) const { return init(NoIndex{}, key); }
  SpecState update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const;
  SpecState update_last_s(SpecState s, std::uint64_t prevlen, ByteView last) const {
    update_last(s, prevlen, last);
    return s;
  }
  Bytes finish_s(ByteView key, const SpecState& s) const {
    Bytes out(params().output_len);
    finish(key, s, out);
    return out;
  }

  SpecState update_block_s(SpecState s, std::uint64_t prevlen, ByteView block) const;

 private:
  Counter128 key_offset() const { return params().key_len > 0 ? kBlockLen : 0; }
  void absorb_pending_key(State& st, bool last) const;
};

using Blake2s = Blake2<Blake2sTraits>;
using Blake2b = Blake2<Blake2bTraits>;

extern template class Blake2<Blake2sTraits>;
extern template class Blake2<Blake2bTraits>;

}  // namespace streamfold
