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

#include <functional>

#include "properties.hpp"
#include "subjects.hpp"
#include "toy.hpp"

using namespace streamfold;
using namespace sftest;

namespace {

// Independent model of the buffer: the bytes not yet folded are the suffix
// left by split_at_last(capacity, everything fed).
template <typename A>
void check_buffer_model(const Stream<A>& st, const Bytes& fed) {
  const std::size_t cap = st.algorithm().params().buffer_len();
  const std::size_t expect = fed.empty() ? 0 : (fed.size() - 1) % cap + 1;
  REQUIRE(st.total_len() == fed.size());
  REQUIRE(st.buffered_len() == expect);
  Bytes tail(fed.end() - static_cast<std::ptrdiff_t>(expect), fed.end());
  REQUIRE(Bytes(st.buffered().begin(), st.buffered().end()) == tail);
}

}  // namespace

TEST_CASE("streaming equals one-shot for every instance") {
  for (std::size_t bm : {1, 2, 5}) {
    auto run = [](const auto& s) {
      CheckResult r = stream_matches_one_shot(s, 150, 21);
      INFO(r.failure);
      CHECK(r.ok);
    };
    for_each_subject(run, bm);
    for_each_blake2_variant(run, bm);
  }
}

TEST_CASE("toy streams agree for every partition of short inputs") {
  // Every composition of every length up to 9 into chunks, at several
  // buffer sizes; the toy hashes byte positions, so offsets must be right.
  for (std::size_t bm : {1, 2, 3}) {
    Toy toy(bm);
    for (std::size_t len = 0; len <= 9; ++len) {
      Bytes input(len);
      for (std::size_t i = 0; i < len; ++i) input[i] = static_cast<std::uint8_t>(i * 37 + 11);
      const Bytes expect = one_shot(toy, {}, input);
      const std::size_t compositions = len == 0 ? 1 : std::size_t{1} << (len - 1);
      for (std::size_t mask = 0; mask < compositions; ++mask) {
        Stream<Toy> st(toy, {});
        Bytes fed;
        std::size_t start = 0;
        for (std::size_t i = 1; i <= len; ++i) {
          if (i == len || (mask >> (i - 1) & 1)) {
            ByteView piece = ByteView(input).subspan(start, i - start);
            REQUIRE(st.update(piece) == Status::Ok);
            fed.insert(fed.end(), piece.begin(), piece.end());
            check_buffer_model(st, fed);
            start = i;
          }
        }
        CHECK(st.digest() == expect);
      }
    }
  }
}

TEST_CASE("buffer model holds on random traces") {
  auto run = [](const auto& s) {
    Rng rng(77);
    const std::size_t cap = s.alg.params().buffer_len();
    for (int t = 0; t < 20; ++t) {
      Bytes key = random_bytes(rng, s.key_len);
      using Alg = std::decay_t<decltype(s.alg)>;
      Stream<Alg> st(s.alg, s.index, key);
      Bytes fed;
      check_buffer_model(st, fed);
      for (std::size_t n : random_partition(rng, uniform(rng, 0, 4 * cap), cap)) {
        Bytes piece = random_bytes(rng, n);
        REQUIRE(st.update(piece) == Status::Ok);
        fed.insert(fed.end(), piece.begin(), piece.end());
        check_buffer_model(st, fed);
        // The folded part of the state matches the pure fold of the flushed prefix.
        auto folded = s.alg.update_multi_s(s.alg.init_s(s.index, key), 0,
                                           ByteView(fed).first(fed.size() - st.buffered_len()));
        REQUIRE(st.reflect() == folded);
      }
    }
  };
  for_each_subject(run, 2);
}

TEST_CASE("digest does not consume the stream") {
  auto run = [](const auto& s) {
    CheckResult r = digest_is_non_invalidating(s, 40, 3);
    INFO(r.failure);
    CHECK(r.ok);
  };
  for_each_subject(run);
  for_each_blake2_variant(run);
}

TEST_CASE("length limit refuses without side effects") {
  auto run = [](const auto& s) {
    for (std::uint64_t limit : {1u, 63u, 64u, 100u, 129u}) {
      CheckResult r = length_limit(s, limit, 30, limit);
      INFO(r.failure);
      CHECK(r.ok);
    }
  };
  for_each_subject(run);
  for_each_blake2_variant(run);
}

TEST_CASE("key management decides what the stream retains") {
  Bytes k32(32, 7);
  CHECK(Stream<Poly1305>(Poly1305(), k32).retains_key());
  CHECK_FALSE(Stream<Blake2b>(Blake2b({32, 0, 1}), k32).retains_key());
  CHECK_FALSE(Stream<Sha256>(Sha256(), {}).retains_key());
  CHECK(Poly1305().params().km == KeyManagement::Runtime);
  CHECK(Blake2s({16, 0, 1}).params().km == KeyManagement::Erased);
  CHECK(Blake2s().params().km == KeyManagement::None);
}

TEST_CASE("wrong key lengths are rejected") {
  auto status_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.status();
    }
    return Status::Ok;
  };
  CHECK(status_of([] { (void)Stream<Poly1305>(Poly1305(), Bytes(31)); }) == Status::KeyLengthMismatch);
  CHECK(status_of([] { (void)Stream<Sha1>(Sha1(), Bytes(1)); }) == Status::KeyLengthMismatch);
  CHECK(status_of([] { (void)Stream<Blake2s>(Blake2s({8, 0, 1}), Bytes(9)); }) ==
        Status::KeyLengthMismatch);
  Stream<Poly1305> st(Poly1305(), Bytes(32, 1));
  CHECK(status_of([&] { st.reinit(Bytes(3)); }) == Status::KeyLengthMismatch);
}

TEST_CASE("reinit restarts with a new key") {
  Bytes k1(32, 1), k2(32, 2), msg = bytes_of("a message spanning no particular boundary");
  Poly1305 poly;
  Stream<Poly1305> st(poly, k1);
  REQUIRE(st.update(msg) == Status::Ok);
  CHECK(st.digest() == one_shot(poly, k1, msg));
  st.reinit(k2);
  CHECK(st.total_len() == 0);
  CHECK(st.buffered_len() == 0);
  REQUIRE(st.update(msg) == Status::Ok);
  CHECK(st.digest() == one_shot(poly, k2, msg));
}

TEST_CASE("digest into a wrongly sized buffer is a contract violation") {
  Stream<Sha256> st(Sha256(), {});
  Bytes out(31);
  CHECK_THROWS_AS(st.digest(out), ContractViolation);
}

TEST_CASE("total length saturating at the algorithm limit") {
  Toy toy;
  toy.set_max_input_length(5);
  Stream<Toy> st(toy, {});
  CHECK(st.update(Bytes(5)) == Status::Ok);
  CHECK(st.update({}) == Status::Ok);
  CHECK(st.update(Bytes(1)) == Status::MaximumLengthExceeded);
  CHECK(st.total_len() == 5);
  CHECK(st.digest() == one_shot(toy, {}, Bytes(5)));
}
