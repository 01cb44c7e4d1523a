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

// The block-algorithm abstraction.
//
// A block algorithm is described twice: once as pure functions over a value
// (`SpecState`), and once as imperative callbacks over a mutable `State`.
// `reflect` maps the latter onto the former, which is how the two are tied
// together in tests. The streaming layer only ever calls the imperative side.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>

#include "streamfold/bytes.hpp"
#include "streamfold/status.hpp"

namespace streamfold {

enum class KeyManagement {
  None,     // key is the empty value
  Runtime,  // the streaming state keeps the key for `finish`
  Erased,   // the key is consumed by `init`; the streaming state keeps no copy
};

const char* to_string(KeyManagement km);

struct BlockParams {
  KeyManagement km = KeyManagement::None;
  std::size_t block_len = 0;
  std::size_t output_len = 0;
  std::uint64_t max_input_length = 0;
  std::size_t buf_multiple = 1;
  std::size_t key_len = 0;

  std::size_t buffer_len() const { return buf_multiple * block_len; }
};

inline constexpr std::size_t kMaxBufMultiple = 16;
inline constexpr std::uint64_t kMaxLength64 = std::numeric_limits<std::uint64_t>::max();
inline constexpr std::uint64_t kMaxLengthMd = (std::uint64_t{1} << 61) - 1;

/// Throws ContractViolation unless the parameters describe a usable algorithm.
void validate(const BlockParams& params);

/// Index type of algorithms that are not selected at run time.
struct NoIndex {
  friend bool operator==(NoIndex, NoIndex) = default;
};

/// Common base for descriptors: holds the validated constants.
class BlockDescriptor {
 public:
  const BlockParams& params() const { return params_; }

  /// Tightens the input limit; used to exercise the overflow path with small
  /// numbers. Raising it above the algorithm's own limit is a contract violation.
  void set_max_input_length(std::uint64_t max_input_length);

 protected:
  explicit BlockDescriptor(BlockParams params);

 private:
  BlockParams params_;
  std::uint64_t natural_limit_;
};

// clang-format off
template <typename A>
concept BlockAlgorithm =
    std::copy_constructible<A> &&
    std::copy_constructible<typename A::State> &&
    std::equality_comparable<typename A::SpecState> &&
    requires(const A& alg, const typename A::Index& index, typename A::State& st,
             const typename A::State& cst, const typename A::SpecState& ss,
             ByteView bytes, std::uint64_t prevlen, MutableByteView out) {
      { alg.params() } -> std::same_as<const BlockParams&>;
      { alg.output_len(index) } -> std::same_as<std::size_t>;
      // imperative side
      { alg.init(index, bytes) } -> std::same_as<typename A::State>;
      alg.update_multi(st, prevlen, bytes);
      alg.update_last(st, prevlen, bytes);
      alg.finish(bytes, cst, out);
      { alg.reflect(cst) } -> std::same_as<typename A::SpecState>;
      // pure side
      { alg.spec(index, bytes, bytes) } -> std::same_as<Bytes>;
      { alg.init_s(index, bytes) } -> std::same_as<typename A::SpecState>;
      { alg.update_multi_s(ss, prevlen, bytes) } -> std::same_as<typename A::SpecState>;
      { alg.update_last_s(ss, prevlen, bytes) } -> std::same_as<typename A::SpecState>;
      { alg.finish_s(bytes, ss) } -> std::same_as<Bytes>;
    };
// clang-format on

/// (blocks, rest) with blocks a whole number of units and rest nonempty
/// whenever the input is. Both halves view `data`.
struct SplitResult {
  ByteView blocks;
  ByteView rest;
};

SplitResult split_at_last(std::size_t unit_len, ByteView data);

namespace detail {
inline void require_aligned(std::size_t block_len, std::size_t length) {
  if (block_len == 0 || length % block_len != 0)
    throw ContractViolation("block input is not a multiple of the block length");
}
}  // namespace detail

/// Lifts a pure single-block transition `(state, prevlen, block) -> state` to a
/// multi-block one by a left fold, advancing prevlen by one block per step.
template <typename Fn>
auto derive_update_multi(std::size_t block_len, Fn update_block) {
  return [block_len, update_block](auto state, std::uint64_t prevlen, ByteView blocks) {
    detail::require_aligned(block_len, blocks.size());
    for (std::size_t off = 0; off < blocks.size(); off += block_len) {
      state = update_block(std::move(state), prevlen, blocks.subspan(off, block_len));
      prevlen += block_len;
    }
    return state;
  };
}

/// In-place counterpart of `derive_update_multi`.
template <typename State, typename Fn>
void fold_blocks(State& state, std::size_t block_len, std::uint64_t prevlen, ByteView blocks,
                 Fn update_block) {
  detail::require_aligned(block_len, blocks.size());
  for (std::size_t off = 0; off < blocks.size(); off += block_len) {
    update_block(state, prevlen, blocks.subspan(off, block_len));
    prevlen += block_len;
  }
}

namespace detail {
template <BlockAlgorithm A>
void check_input_length(const A& alg, ByteView input) {
  if (input.size() > alg.params().max_input_length)
    throw Error(Status::MaximumLengthExceeded, "input exceeds the algorithm's maximum length");
}
}  // namespace detail

/// The pure one-shot specification.
template <BlockAlgorithm A>
Bytes one_shot(const A& alg, const typename A::Index& index, ByteView key, ByteView input) {
  detail::check_input_length(alg, input);
  return alg.spec(index, key, input);
}

/// The block-by-block route through the pure transitions: split, fold the
/// blocks, hand the remainder to update_last, finish.
template <BlockAlgorithm A>
Bytes incremental_spec(const A& alg, const typename A::Index& index, ByteView key,
                       ByteView input) {
  detail::check_input_length(alg, input);
  auto [blocks, rest] = split_at_last(alg.params().block_len, input);
  auto h0 = alg.update_multi_s(alg.init_s(index, key), 0, blocks);
  return alg.finish_s(key, alg.update_last_s(h0, blocks.size(), rest));
}

template <BlockAlgorithm A>
  requires std::same_as<typename A::Index, NoIndex>
Bytes one_shot(const A& alg, ByteView key, ByteView input) {
  return one_shot(alg, NoIndex{}, key, input);
}

template <BlockAlgorithm A>
  requires std::same_as<typename A::Index, NoIndex>
Bytes incremental_spec(const A& alg, ByteView key, ByteView input) {
  return incremental_spec(alg, NoIndex{}, key, input);
}

}  // namespace streamfold
