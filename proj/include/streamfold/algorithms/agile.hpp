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

// Run-time agile hashing: one block algorithm whose state is a tagged union
// over the roster. The algorithm is chosen when the state is initialized and
// every later transition dispatches on the stored tag.
//
// The descriptor advertises the roster maxima (128-byte blocks, 64-byte
// output). Blocks handed to update_multi are therefore multiples of every
// member's block size; update_last re-splits its input by the member's own
// block size before delegating.

#include <optional>
#include <string_view>
#include <variant>

#include "streamfold/algorithms/blake2.hpp"
#include "streamfold/algorithms/md.hpp"

namespace streamfold {

enum class AgileAlgId : int {
  MD5 = 0,
  SHA1 = 1,
  SHA2_256 = 2,
  SHA2_512 = 3,
  Blake2S = 4,
  Blake2B = 5,
};

inline constexpr AgileAlgId kAgileRoster[] = {AgileAlgId::MD5,      AgileAlgId::SHA1,
                                              AgileAlgId::SHA2_256, AgileAlgId::SHA2_512,
                                              AgileAlgId::Blake2S,  AgileAlgId::Blake2B};

const char* to_string(AgileAlgId id);
std::optional<AgileAlgId> agile_id_from_string(std::string_view name);

class Agile : public BlockDescriptor {
 public:
  using Index = AgileAlgId;
  using State = std::variant<Md5::State, Sha1::State, Sha256::State, Sha512::State,
                             Blake2s::State, Blake2b::State>;
  using SpecState = State;

  explicit Agile(std::size_t buf_multiple = 1);

  static constexpr const char* name() { return "agile"; }
  std::size_t output_len(AgileAlgId id) const;

  State init(AgileAlgId id, ByteView key) const;
  void update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const;
  void update_last(State& st, std::uint64_t prevlen, ByteView last) const;
  /// Writes the selected algorithm's digest; `out` must have that length.
  void finish(ByteView key, const State& st, MutableByteView out) const;
  SpecState reflect(const State& st) const { return st; }

  Bytes spec(AgileAlgId id, ByteView key, ByteView input) const;
  SpecState init_s(AgileAlgId id, ByteView key) const;
  SpecState update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const;
  SpecState update_last_s(SpecState s, std::uint64_t prevlen, ByteView last) const;
  Bytes finish_s(ByteView key, const SpecState& s) const;

 private:
  Md5 md5_;
  Sha1 sha1_;
  Sha256 sha256_;
  Sha512 sha512_;
  Blake2s blake2s_;
  Blake2b blake2b_;

  // Calls fn(descriptor) for the roster member at position `tag`.
  template <typename Fn>
  decltype(auto) with_member(std::size_t tag, Fn&& fn) const;
};

}  // namespace streamfold
