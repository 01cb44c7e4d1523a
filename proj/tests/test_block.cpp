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

#include <doctest.h>

#include "properties.hpp"
#include "subjects.hpp"
#include "toy.hpp"

using namespace streamfold;
using namespace sftest;

TEST_CASE("split_at_last keeps a nonempty final unit") {
  Bytes data(130, 0xab);
  auto lens = [&](std::size_t unit, std::size_t len) {
    auto [b, r] = split_at_last(unit, ByteView(data).first(len));
    return std::pair{b.size(), r.size()};
  };
  CHECK(lens(64, 0) == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(lens(64, 1) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(lens(64, 64) == std::pair<std::size_t, std::size_t>{0, 64});
  CHECK(lens(64, 65) == std::pair<std::size_t, std::size_t>{64, 1});
  CHECK(lens(64, 128) == std::pair<std::size_t, std::size_t>{64, 64});
  CHECK(lens(1, 5) == std::pair<std::size_t, std::size_t>{4, 1});
  CHECK_THROWS_AS(split_at_last(0, data), ContractViolation);
}

TEST_CASE("split_at_last laws hold exhaustively") {
  for (std::size_t unit : {1, 2, 3, 16, 64, 128, 129}) {
    CheckResult r = split_laws(unit);
    INFO(r.failure);
    CHECK(r.ok);
    CHECK(r.cases == 4 * unit + 2);
  }
}

TEST_CASE("block parameters are validated") {
  BlockParams ok{KeyManagement::None, 64, 32, kMaxLengthMd, 1, 0};
  CHECK_NOTHROW(validate(ok));
  auto bad = [&](auto mutate) {
    BlockParams p = ok;
    mutate(p);
    CHECK_THROWS_AS(validate(p), ContractViolation);
  };
  bad([](BlockParams& p) { p.block_len = 0; });
  bad([](BlockParams& p) { p.output_len = 0; });
  bad([](BlockParams& p) { p.max_input_length = 0; });
  bad([](BlockParams& p) { p.buf_multiple = 0; });
  bad([](BlockParams& p) { p.buf_multiple = kMaxBufMultiple + 1; });
  bad([](BlockParams& p) { p.key_len = 32; });
  bad([](BlockParams& p) { p.km = KeyManagement::Runtime; });
  CHECK(ok.buffer_len() == 64);
}

TEST_CASE("the input limit can only be lowered") {
  Sha256 sha;
  CHECK_THROWS_AS(sha.set_max_input_length(0), ContractViolation);
  CHECK_THROWS_AS(sha.set_max_input_length(kMaxLengthMd + 1), ContractViolation);
  sha.set_max_input_length(10);
  CHECK(sha.params().max_input_length == 10);
  sha.set_max_input_length(kMaxLengthMd);
  Bytes eleven(11);
  sha.set_max_input_length(10);
  try {
    (void)one_shot(sha, {}, eleven);
    FAIL("one_shot accepted an oversize input");
  } catch (const Error& e) {
    CHECK(e.status() == Status::MaximumLengthExceeded);
  }
  CHECK_NOTHROW((void)one_shot(sha, {}, ByteView(eleven).first(10)));
}

TEST_CASE("multi-block transitions reject misaligned input") {
  Sha256 sha;
  auto st = sha.init({}, {});
  Bytes odd(65);
  CHECK_THROWS_AS(sha.update_multi(st, 0, odd), ContractViolation);
  CHECK_THROWS_AS((void)sha.update_multi_s(sha.init_s({}, {}), 0, odd), ContractViolation);
}

TEST_CASE("derived multi-block update is a left fold") {
  auto block = [](std::uint64_t acc, std::uint64_t prevlen, ByteView b) {
    return acc * 31 + prevlen * 7 + b[0] + b[1];
  };
  auto multi = derive_update_multi(2, block);
  Bytes data = {1, 2, 3, 4, 5, 6};
  std::uint64_t expect = block(block(block(9, 10, ByteView(data).subspan(0, 2)), 12,
                                     ByteView(data).subspan(2, 2)),
                               14, ByteView(data).subspan(4, 2));
  CHECK(multi(std::uint64_t{9}, 10, data) == expect);
  std::uint64_t inplace = 9;
  fold_blocks(inplace, 2, 10, data,
              [&](std::uint64_t& s, std::uint64_t p, ByteView b) { s = block(s, p, b); });
  CHECK(inplace == expect);
  CHECK_THROWS_AS(multi(std::uint64_t{0}, 0, ByteView(data).first(3)), ContractViolation);
}

TEST_CASE("toy fold law, exhaustively") {
  CheckResult r = toy_fold_law_exhaustive(8);
  INFO(r.failure);
  CHECK(r.ok);
}

TEST_CASE("fold law and refinement for every instance") {
  auto run = [](const auto& s) {
    CheckResult r = fold_law(s, 100, 11);
    INFO(r.failure);
    CHECK(r.ok);
  };
  for_each_subject(run);
  for_each_blake2_variant(run);
}

TEST_CASE("incremental specification equals the one-shot specification") {
  auto run = [](const auto& s) {
    Rng rng(5);
    const std::size_t cap = s.alg.params().block_len;
    for (std::size_t len = 0; len <= 3 * cap + 1; ++len) {
      Bytes key = random_bytes(rng, s.key_len);
      Bytes in = random_bytes(rng, len);
      INFO(s.name << " length " << len);
      CHECK(incremental_spec(s.alg, s.index, key, in) == one_shot(s.alg, s.index, key, in));
    }
  };
  for_each_subject(run);
  for_each_blake2_variant(run);
}
