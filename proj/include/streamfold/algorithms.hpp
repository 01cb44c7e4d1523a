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

#include <optional>
#include <string_view>
#include <variant>

#include "streamfold/algorithms/agile.hpp"
#include "streamfold/algorithms/blake2.hpp"
#include "streamfold/algorithms/md.hpp"
#include "streamfold/algorithms/poly1305.hpp"
#include "streamfold/streaming.hpp"

namespace streamfold {

/// Stable numeric encoding, shared with the C API. The first six values
/// coincide with AgileAlgId.
enum class AlgId : int {
  MD5 = 0,
  SHA1 = 1,
  SHA2_256 = 2,
  SHA2_512 = 3,
  Blake2S = 4,
  Blake2B = 5,
  Poly1305 = 6,
};

inline constexpr AlgId kAllAlgorithms[] = {AlgId::MD5,      AlgId::SHA1,    AlgId::SHA2_256,
                                           AlgId::SHA2_512, AlgId::Blake2S, AlgId::Blake2B,
                                           AlgId::Poly1305};

const char* to_string(AlgId id);
std::optional<AlgId> alg_id_from_string(std::string_view name);
std::optional<AgileAlgId> to_agile(AlgId id);

struct InstanceOptions {
  std::size_t key_len = 0;     // Blake2 only; Poly1305 always takes 32 bytes
  std::size_t digest_len = 0;  // Blake2 only; 0 selects the maximum
  std::size_t buf_multiple = 1;
};

using AnyAlgorithm = std::variant<Md5, Sha1, Sha256, Sha512, Blake2s, Blake2b, Poly1305>;

/// Throws Error(OptionRejected) when the options do not fit the algorithm.
AnyAlgorithm instance(AlgId id, const InstanceOptions& options = {});

Agile agile_instance(std::size_t buf_multiple = 1);

using AnyStream = std::variant<Stream<Md5>, Stream<Sha1>, Stream<Sha256>, Stream<Sha512>,
                               Stream<Blake2s>, Stream<Blake2b>, Stream<Poly1305>, Stream<Agile>>;

}  // namespace streamfold
