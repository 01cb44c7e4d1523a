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

// Safe streaming wrapper over any BlockAlgorithm.
//
// One live state; callers feed arbitrary-length chunks and may ask for the
// digest at any point without invalidating the state. Internally the bytes
// seen so far are split by `split_at_last(buffer_len, seen)`: the blocks part
// has been folded into `block_state_`, the rest sits in `buf_`. The rest is
// never empty once any byte was fed, so update_last always receives the final
// (possibly full) block.

#include <algorithm>
#include <optional>
#include <utility>

#include "streamfold/block.hpp"

namespace streamfold {

template <BlockAlgorithm A>
class Stream {
 public:
  using Index = typename A::Index;
  using State = typename A::State;

  Stream(A alg, Index index, ByteView key)
      : alg_(std::move(alg)),
        index_(std::move(index)),
        block_state_(init_checked(alg_, index_, key)),
        buf_(alg_.params().buffer_len()) {
    retain_key(key);
  }

  Stream(A alg, ByteView key)
    requires std::same_as<Index, NoIndex>
      : Stream(std::move(alg), NoIndex{}, key) {}

  /// Forgets everything fed so far; `key` may differ from the original one.
  void reinit(ByteView key) {
    block_state_ = init_checked(alg_, index_, key);
    buf_filled_ = 0;
    total_len_ = 0;
    retain_key(key);
  }

  [[nodiscard]] Status update(ByteView data) {
    const auto& p = alg_.params();
    if (data.size() > p.max_input_length - total_len_) return Status::MaximumLengthExceeded;
    if (data.empty()) return Status::Ok;

    const std::size_t cap = buf_.size();
    // A full buffer is only flushed once more input is known to follow.
    if (buf_filled_ == cap) flush_buffer();

    if (buf_filled_ + data.size() <= cap) {
      std::copy(data.begin(), data.end(), buf_.begin() + buf_filled_);
      buf_filled_ += data.size();
      total_len_ += data.size();
      return Status::Ok;
    }

    if (buf_filled_ > 0) {
      std::size_t fill = cap - buf_filled_;
      std::copy_n(data.begin(), fill, buf_.begin() + buf_filled_);
      buf_filled_ = cap;
      total_len_ += fill;
      data = data.subspan(fill);
      flush_buffer();
    }

    // Whole buffer-sized units go straight to the algorithm; the last one
    // (or the partial tail) is kept back.
    auto [blocks, rest] = split_at_last(cap, data);
    alg_.update_multi(block_state_, total_len_, blocks);
    std::copy(rest.begin(), rest.end(), buf_.begin());
    buf_filled_ = rest.size();
    total_len_ += data.size();
    return Status::Ok;
  }

  /// Writes the digest of everything fed since the last (re)init. The state
  /// is left untouched: processing happens on a copy of the block state.
  void digest(MutableByteView out) const {
    if (out.size() != output_len())
      throw ContractViolation("digest: output buffer has the wrong length");
    State scratch = block_state_;
    const std::uint64_t prevlen = total_len_ - buf_filled_;
    auto [blocks, last] = split_at_last(alg_.params().block_len, buffered());
    alg_.update_multi(scratch, prevlen, blocks);
    alg_.update_last(scratch, prevlen + blocks.size(), last);
    alg_.finish(key_view(), scratch, out);
  }

  Bytes digest() const {
    Bytes out(output_len());
    digest(out);
    return out;
  }

  std::size_t buffered_len() const { return buf_filled_; }
  ByteView buffered() const { return ByteView(buf_).first(buf_filled_); }
  std::uint64_t total_len() const { return total_len_; }
  std::size_t output_len() const { return alg_.output_len(index_); }
  bool retains_key() const { return key_.has_value(); }

  const A& algorithm() const { return alg_; }
  const Index& index() const { return index_; }

  /// Pure view of the inner block state, for verification harnesses.
  typename A::SpecState reflect() const { return alg_.reflect(block_state_); }

 private:
  static State init_checked(const A& alg, const Index& index, ByteView key) {
    if (key.size() != alg.params().key_len)
      throw Error(Status::KeyLengthMismatch, "key length does not match the algorithm");
    return alg.init(index, key);
  }

  void retain_key(ByteView key) {
    if (alg_.params().km == KeyManagement::Runtime)
      key_.emplace(key.begin(), key.end());
    else
      key_.reset();
  }

  ByteView key_view() const { return key_ ? ByteView(*key_) : ByteView{}; }

  void flush_buffer() {
    alg_.update_multi(block_state_, total_len_ - buf_filled_, ByteView(buf_).first(buf_filled_));
    buf_filled_ = 0;
  }

  A alg_;
  Index index_;
  State block_state_;
  Bytes buf_;
  std::size_t buf_filled_ = 0;
  std::uint64_t total_len_ = 0;
  std::optional<Bytes> key_;
};

}  // namespace streamfold
