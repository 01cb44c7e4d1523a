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

// A one-byte-block algorithm small enough to check laws exhaustively. Every
// transition depends on prevlen, so a wrong offset shows up in the digest.

#include "properties.hpp"
#include "streamfold/block.hpp"

namespace sftest {

class Toy : public streamfold::BlockDescriptor {
 public:
  using Index = streamfold::NoIndex;
  using State = std::uint64_t;
  using SpecState = std::uint64_t;

  explicit Toy(std::size_t buf_multiple = 1)
      : BlockDescriptor({.km = streamfold::KeyManagement::None,
                         .block_len = 1,
                         .output_len = 8,
                         .max_input_length = streamfold::kMaxLength64,
                         .buf_multiple = buf_multiple,
                         .key_len = 0}) {}

  std::size_t output_len(Index) const { return 8; }

  static std::uint64_t step(std::uint64_t h, std::uint64_t pos, std::uint8_t b) {
    return h * 1099511628211ull + b + 3 * pos + 1;
  }

  static std::uint64_t close(std::uint64_t h, std::uint64_t len) {
    return (h ^ len) * 0x9e3779b97f4a7c15ull;
  }

  State init(Index, streamfold::ByteView) const { return 14695981039346656037ull; }

  void update_multi(State& st, std::uint64_t prevlen, streamfold::ByteView blocks) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) st = step(st, prevlen + i, blocks[i]);
  }

  void update_last(State& st, std::uint64_t prevlen, streamfold::ByteView last) const {
    if (last.size() > 1) throw streamfold::ContractViolation("toy: more than one block");
    update_multi(st, prevlen, last);
    st = close(st, prevlen + last.size());
  }

  void finish(streamfold::ByteView, const State& st, streamfold::MutableByteView out) const {
    streamfold::detail::store64_le(out.data(), st);
  }

  SpecState reflect(const State& st) const { return st; }

  // Direct definition over the whole message.
  streamfold::Bytes spec(Index, streamfold::ByteView, streamfold::ByteView input) const {
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < input.size(); ++i) h = step(h, i, input[i]);
    h = close(h, input.size());
    streamfold::Bytes out(8);
    streamfold::detail::store64_le(out.data(), h);
    return out;
  }

  SpecState init_s(Index i, streamfold::ByteView key) const { return init(i, key); }

  SpecState update_multi_s(SpecState s, std::uint64_t prevlen, streamfold::ByteView b) const {
    update_multi(s, prevlen, b);
    return s;
  }

  SpecState update_last_s(SpecState s, std::uint64_t prevlen, streamfold::ByteView b) const {
    update_last(s, prevlen, b);
    return s;
  }

  streamfold::Bytes finish_s(streamfold::ByteView key, const SpecState& s) const {
    streamfold::Bytes out(8);
    finish(key, s, out);
    return out;
  }
};

static_assert(streamfold::BlockAlgorithm<Toy>);

/// Fold law on the toy for every input of length 0..max_len over {0x00, 0x5a,
/// 0xff}, every 2-segment split and several starting offsets. Also checks
/// that the incremental route agrees with the direct definition.
inline CheckResult toy_fold_law_exhaustive(std::size_t max_len = 8) {
  using namespace streamfold;
  CheckResult r;
  const std::uint8_t alphabet[] = {0x00, 0x5a, 0xff};
  const Toy toy;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < len; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Bytes input(len);
      for (std::size_t i = 0, c = code; i < len; ++i, c /= 3) input[i] = alphabet[c % 3];
      if (incremental_spec(toy, {}, input) != one_shot(toy, {}, input))
        r.fail("toy: incremental route differs, length " + std::to_string(len));
      for (std::size_t cut = 0; cut <= len; ++cut) {
        ByteView b1 = ByteView(input).first(cut), b2 = ByteView(input).subspan(cut);
        for (std::uint64_t prevlen : {0u, 1u, 5u}) {
          ++r.cases;
          auto whole = toy.init({}, {});
          toy.update_multi(whole, prevlen, input);
          auto split = toy.init({}, {});
          toy.update_multi(split, prevlen, b1);
          toy.update_multi(split, prevlen + cut, b2);
          auto pw = toy.update_multi_s(toy.init_s({}, {}), prevlen, input);
          auto ps = toy.update_multi_s(toy.update_multi_s(toy.init_s({}, {}), prevlen, b1),
                                       prevlen + cut, b2);
          if (whole != split || pw != ps || toy.reflect(whole) != pw)
            r.fail("toy: fold law violated at length " + std::to_string(len) + ", split " +
                   std::to_string(cut));
        }
      }
    }
  }
  return r;
}

}  // namespace sftest
