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

// Poly1305 one-time authenticator (RFC 8439).
//
// The block state is a pair: the clamped multiplier r, fixed at init, and the
// accumulator, which is the only part the fold touches. The imperative side
// keeps both in radix-2^26 limbs; the pure side works on exact integers
// modulo 2^130 - 5, so `reflect` doubles as a cross-check of the limb code.

#include <array>

#include <boost/multiprecision/cpp_int.hpp>

#include "streamfold/block.hpp"

namespace streamfold {

class Poly1305 : public BlockDescriptor {
 public:
  using Index = NoIndex;
  using BigInt = boost::multiprecision::cpp_int;

  static constexpr std::size_t kBlockLen = 16;
  static constexpr std::size_t kKeyLen = 32;
  static constexpr std::size_t kTagLen = 16;

  struct State {
    std::array<std::uint32_t, 5> r{};
    std::array<std::uint32_t, 5> h{};
  };

  struct SpecState {
    BigInt r;
    BigInt acc;  // always reduced modulo 2^130 - 5
    friend bool operator==(const SpecState&, const SpecState&) = default;
  };

  explicit Poly1305(std::size_t buf_multiple = 1);

  static constexpr const char* name() { return "poly1305"; }
  std::size_t output_len(NoIndex) const { return kTagLen; }

  State init(NoIndex, ByteView key) const;
  void update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const;
  void update_last(State& st, std::uint64_t prevlen, ByteView last) const;
  /// Needs the second half of the key, which is why the key is kept at run time.
  void finish(ByteView key, const State& st, MutableByteView out) const;
  SpecState reflect(const State& st) const;

  Bytes spec(NoIndex, ByteView key, ByteView input) const;
  SpecState init_s(NoIndex, ByteView key) const;
  SpecState update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const;
  SpecState update_last_s(SpecState s, std::uint64_t prevlen, ByteView last) const;
  Bytes finish_s(ByteView key, const SpecState& s) const;

  static const BigInt& prime();
};

}  // namespace streamfold
