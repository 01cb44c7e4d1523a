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

#include "streamfold/algorithms/blake2.hpp"

#include <string>

namespace streamfold {

const std::array<std::uint32_t, 8> Blake2sTraits::kIv = {
    0x6A09E667, 0xBB67AE85, 0x3C6EF372, 0xA54FF53A,
    0x510E527F, 0x9B05688C, 0x1F83D9AB, 0x5BE0CD19};

const std::array<std::uint64_t, 8> Blake2bTraits::kIv = {
    0x6A09E667F3BCC908, 0xBB67AE8584CAA73B, 0x3C6EF372FE94F82B, 0xA54FF53A5F1D36F1,
    0x510E527FADE682D1, 0x9B05688C2B3E6C1F, 0x1F83D9ABFB41BD6B, 0x5BE0CD19137E2179};

namespace {

constexpr std::uint8_t kSigma[12][16] = {
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
    {11, 8, 12, 0, 5, 2, 15, 13, 10, 14, 3, 6, 7, 1, 9, 4},
    {7, 9, 3, 1, 13, 12, 11, 14, 2, 6, 5, 10, 4, 0, 15, 8},
    {9, 0, 5, 7, 2, 4, 10, 15, 14, 1, 11, 12, 6, 8, 3, 13},
    {2, 12, 6, 10, 0, 11, 8, 3, 4, 13, 7, 5, 15, 14, 1, 9},
    {12, 5, 1, 15, 14, 13, 4, 10, 0, 7, 6, 3, 9, 2, 8, 11},
    {13, 11, 7, 14, 12, 1, 3, 9, 5, 0, 15, 4, 8, 6, 2, 10},
    {6, 15, 14, 9, 11, 3, 0, 8, 12, 2, 13, 7, 1, 4, 10, 5},
    {10, 2, 8, 4, 7, 6, 1, 5, 15, 11, 9, 14, 3, 12, 13, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {14, 10, 4, 8, 9, 15, 13, 6, 1, 12, 0, 2, 11, 7, 5, 3},
};

template <typename Word>
Word rotr(Word x, unsigned n) {
  return (x >> n) | (x << (sizeof(Word) * 8 - n));
}

template <typename Word>
Word load_word(const std::uint8_t* p) {
  if constexpr (sizeof(Word) == 4) return detail::load32_le(p);
  else return detail::load64_le(p);
}

template <typename Word>
void store_word(std::uint8_t* p, Word w) {
  if constexpr (sizeof(Word) == 4) detail::store32_le(p, w);
  else detail::store64_le(p, w);
}

}  // namespace

template <typename Traits>
Blake2<Traits>::Blake2(Blake2Options options)
    : BlockDescriptor([&] {
        const std::size_t digest_len = options.digest_len == 0 ? Traits::kMaxOutput
                                                               : options.digest_len;
        if (digest_len > Traits::kMaxOutput)
          throw Error(Status::OptionRejected,
                      std::string(Traits::kName) + ": digest length must be 1.." +
                          std::to_string(Traits::kMaxOutput));
        if (options.key_len > Traits::kMaxKey)
          throw Error(Status::OptionRejected,
                      std::string(Traits::kName) + ": key length must be 0.." +
                          std::to_string(Traits::kMaxKey));
        if (options.buf_multiple == 0 || options.buf_multiple > kMaxBufMultiple)
          throw Error(Status::OptionRejected, "buf_multiple must be in 1..16");
        // The 64-bit BLAKE2s counter also has to cover the key block.
        std::uint64_t limit = kMaxLength64;
        if (sizeof(Word) == 4 && options.key_len > 0) limit -= Traits::kBlockLen;
        return BlockParams{
            .km = options.key_len > 0 ? KeyManagement::Erased : KeyManagement::None,
            .block_len = Traits::kBlockLen,
            .output_len = digest_len,
            .max_input_length = limit,
            .buf_multiple = options.buf_multiple,
            .key_len = options.key_len};
      }()) {}

template <typename Traits>
void Blake2<Traits>::compress(std::array<Word, 8>& h, const std::uint8_t* block,
                              Counter128 counter, bool last) {
  std::array<Word, 16> m;
  for (int i = 0; i < 16; ++i) m[i] = load_word<Word>(block + i * sizeof(Word));
  std::array<Word, 16> v;
  for (int i = 0; i < 8; ++i) {
    v[i] = h[i];
    v[i + 8] = Traits::kIv[i];
  }
  constexpr unsigned kBits = sizeof(Word) * 8;
  v[12] ^= Word(counter);
  v[13] ^= Word(counter >> kBits);
  if (last) v[14] = ~v[14];

  auto g = [&v](int a, int b, int c, int d, Word x, Word y) {
    constexpr auto r = Traits::kRot;
    v[a] = v[a] + v[b] + x;
    v[d] = rotr<Word>(v[d] ^ v[a], r[0]);
    v[c] = v[c] + v[d];
    v[b] = rotr<Word>(v[b] ^ v[c], r[1]);
    v[a] = v[a] + v[b] + y;
    v[d] = rotr<Word>(v[d] ^ v[a], r[2]);
    v[c] = v[c] + v[d];
    v[b] = rotr<Word>(v[b] ^ v[c], r[3]);
  };
  for (int round = 0; round < Traits::kRounds; ++round) {
    const std::uint8_t* s = kSigma[round];
    g(0, 4, 8, 12, m[s[0]], m[s[1]]);
    g(1, 5, 9, 13, m[s[2]], m[s[3]]);
    g(2, 6, 10, 14, m[s[4]], m[s[5]]);
    g(3, 7, 11, 15, m[s[6]], m[s[7]]);
    g(0, 5, 10, 15, m[s[8]], m[s[9]]);
    g(1, 6, 11, 12, m[s[10]], m[s[11]]);
    g(2, 7, 8, 13, m[s[12]], m[s[13]]);
    g(3, 4, 9, 14, m[s[14]], m[s[15]]);
  }
  for (int i = 0; i < 8; ++i) h[i] ^= v[i] ^ v[i + 8];
}

template <typename Traits>
auto Blake2<Traits>::init(NoIndex, ByteView key) const -> State {
  if (key.size() != params().key_len)
    throw ContractViolation("blake2 init: key length does not match the descriptor");
  State st;
  st.h = Traits::kIv;
  st.h[0] ^= Word(0x01010000) ^ (Word(key.size()) << 8) ^ Word(params().output_len);
  if (!key.empty()) {
    std::memcpy(st.key_block.data(), key.data(), key.size());
    st.key_pending = true;
  }
  return st;
}

template <typename Traits>
void Blake2<Traits>::absorb_pending_key(State& st, bool last) const {
  compress(st.h, st.key_block.data(), kBlockLen, last);
  st.key_block.fill(0);
  st.key_pending = false;
}

template <typename Traits>
void Blake2<Traits>::update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const {
  if (blocks.empty()) return;
  if (st.key_pending) absorb_pending_key(st, false);
  fold_blocks(st, kBlockLen, prevlen, blocks, [this](State& s, std::uint64_t off, ByteView b) {
    compress(s.h, b.data(), key_offset() + off + kBlockLen, false);
  });
}

template <typename Traits>
void Blake2<Traits>::update_last(State& st, std::uint64_t prevlen, ByteView last) const {
  if (last.size() > kBlockLen) throw ContractViolation("update_last: more than one block");
  if (st.key_pending) {
    // Keyed hash of the empty message: the key block is the final block.
    if (last.empty()) {
      absorb_pending_key(st, true);
      return;
    }
    absorb_pending_key(st, false);
  }
  std::array<std::uint8_t, kBlockLen> block{};
  std::memcpy(block.data(), last.data(), last.size());
  compress(st.h, block.data(), key_offset() + prevlen + last.size(), true);
}

template <typename Traits>
void Blake2<Traits>::finish(ByteView, const State& st, MutableByteView out) const {
  std::array<std::uint8_t, 8 * sizeof(Word)> full;
  for (int i = 0; i < 8; ++i) store_word<Word>(full.data() + i * sizeof(Word), st.h[i]);
  std::memcpy(out.data(), full.data(), params().output_len);
}

template <typename Traits>
auto Blake2<Traits>::update_block_s(SpecState s, std::uint64_t prevlen, ByteView block) const
    -> SpecState {
  if (s.key_pending) absorb_pending_key(s, false);
  compress(s.h, block.data(), key_offset() + prevlen + kBlockLen, false);
  return s;
}

template <typename Traits>
auto Blake2<Traits>::update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const
    -> SpecState {
  auto step = [this](SpecState st, std::uint64_t off, ByteView b) {
    return update_block_s(std::move(st), off, b);
  };
  return derive_update_multi(kBlockLen, step)(std::move(s), prevlen, blocks);
}

template <typename Traits>
Bytes Blake2<Traits>::spec(NoIndex, ByteView key, ByteView input) const {
  const std::size_t kk = key.size();
  const std::size_t nn = params().output_len;
  std::array<Word, 8> h = Traits::kIv;
  h[0] ^= Word(0x01010000) ^ (Word(kk) << 8) ^ Word(nn);

  Bytes d;
  if (kk > 0) {
    d.assign(key.begin(), key.end());
    d.resize(kBlockLen, 0);
  }
  d.insert(d.end(), input.begin(), input.end());
  const std::size_t dd = d.empty() ? 1 : (d.size() + kBlockLen - 1) / kBlockLen;
  d.resize(dd * kBlockLen, 0);

  for (std::size_t i = 0; i + 1 < dd; ++i)
    compress(h, d.data() + i * kBlockLen, Counter128(i + 1) * kBlockLen, false);
  const Counter128 ll = input.size();
  compress(h, d.data() + (dd - 1) * kBlockLen, kk == 0 ? ll : ll + kBlockLen, true);

  std::array<std::uint8_t, 8 * sizeof(Word)> full;
  for (int i = 0; i < 8; ++i) store_word<Word>(full.data() + i * sizeof(Word), h[i]);
  return Bytes(full.begin(), full.begin() + nn);
}

template class Blake2<Blake2sTraits>;
template class Blake2<Blake2bTraits>;

}  // namespace streamfold
