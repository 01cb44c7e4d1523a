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

#include "streamfold/algorithms/agile.hpp"

namespace streamfold {

const char* to_string(AgileAlgId id) {
  switch (id) {
    case AgileAlgId::MD5: return "md5";
    case AgileAlgId::SHA1: return "sha1";
    case AgileAlgId::SHA2_256: return "sha256";
    case AgileAlgId::SHA2_512: return "sha512";
    case AgileAlgId::Blake2S: return "blake2s";
    case AgileAlgId::Blake2B: return "blake2b";
  }
  return "unknown";
}

std::optional<AgileAlgId> agile_id_from_string(std::string_view name) {
  for (auto id : kAgileRoster)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

Agile::Agile(std::size_t buf_multiple)
    : BlockDescriptor({.km = KeyManagement::None,
                       .block_len = 128,
                       .output_len = 64,
                       .max_input_length = kMaxLengthMd,
                       .buf_multiple = buf_multiple,
                       .key_len = 0}) {}

template <typename Fn>
decltype(auto) Agile::with_member(std::size_t tag, Fn&& fn) const {
  switch (tag) {
    case 0: return fn(md5_);
    case 1: return fn(sha1_);
    case 2: return fn(sha256_);
    case 3: return fn(sha512_);
    case 4: return fn(blake2s_);
    case 5: return fn(blake2b_);
  }
  throw ContractViolation("agile: unknown algorithm tag");
}

std::size_t Agile::output_len(AgileAlgId id) const {
  return with_member(std::size_t(id), [](const auto& alg) { return alg.output_len(NoIndex{}); });
}

auto Agile::init(AgileAlgId id, ByteView key) const -> State {
  const auto tag = std::size_t(id);
  return with_member(tag, [&](const auto& alg) { return State{alg.init(NoIndex{}, key)}; });
}

void Agile::update_multi(State& st, std::uint64_t prevlen, ByteView blocks) const {
  detail::require_aligned(params().block_len, blocks.size());
  with_member(st.index(), [&](const auto& alg) {
    using S = std::decay_t<decltype(alg.init(NoIndex{}, {}))>;
    alg.update_multi(std::get<S>(st), prevlen, blocks);
  });
}

void Agile::update_last(State& st, std::uint64_t prevlen, ByteView last) const {
  if (last.size() > params().block_len)
    throw ContractViolation("update_last: more than one block");
  with_member(st.index(), [&](const auto& alg) {
    using S = std::decay_t<decltype(alg.init(NoIndex{}, {}))>;
    auto& inner = std::get<S>(st);
    auto [blocks, rest] = split_at_last(alg.params().block_len, last);
    alg.update_multi(inner, prevlen, blocks);
    alg.update_last(inner, prevlen + blocks.size(), rest);
  });
}

void Agile::finish(ByteView key, const State& st, MutableByteView out) const {
  with_member(st.index(), [&](const auto& alg) {
    using S = std::decay_t<decltype(alg.init(NoIndex{}, {}))>;
    if (out.size() != alg.output_len(NoIndex{}))
      throw ContractViolation("agile finish: output buffer has the wrong length");
    alg.finish(key, std::get<S>(st), out);
  });
}

Bytes Agile::spec(AgileAlgId id, ByteView key, ByteView input) const {
  return with_member(std::size_t(id),
                     [&](const auto& alg) { return alg.spec(NoIndex{}, key, input); });
}

auto Agile::init_s(AgileAlgId id, ByteView key) const -> SpecState { return init(id, key); }

auto Agile::update_multi_s(SpecState s, std::uint64_t prevlen, ByteView blocks) const
    -> SpecState {
  detail::require_aligned(params().block_len, blocks.size());
  return with_member(s.index(), [&](const auto& alg) -> SpecState {
    using S = std::decay_t<decltype(alg.init_s(NoIndex{}, {}))>;
    return alg.update_multi_s(std::get<S>(s), prevlen, blocks);
  });
}

auto Agile::update_last_s(SpecState s, std::uint64_t prevlen, ByteView last) const
    -> SpecState {
  if (last.size() > params().block_len)
    throw ContractViolation("update_last: more than one block");
  return with_member(s.index(), [&](const auto& alg) -> SpecState {
    using S = std::decay_t<decltype(alg.init_s(NoIndex{}, {}))>;
    auto [blocks, rest] = split_at_last(alg.params().block_len, last);
    auto mid = alg.update_multi_s(std::get<S>(s), prevlen, blocks);
    return alg.update_last_s(std::move(mid), prevlen + blocks.size(), rest);
  });
}

Bytes Agile::finish_s(ByteView key, const SpecState& s) const {
  return with_member(s.index(), [&](const auto& alg) {
    using S = std::decay_t<decltype(alg.init_s(NoIndex{}, {}))>;
    return alg.finish_s(key, std::get<S>(s));
  });
}

}  // namespace streamfold
