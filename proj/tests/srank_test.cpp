// Copyright 2026 The sgkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "sgkit/hom.hpp"
#include "sgkit/oracles.hpp"
#include "sgkit/srank.hpp"

#include "support.hpp"

using namespace sgkit;
using test::error_of;

TEST_CASE("normal_subgroups: examples", "[srank]") {
  CHECK(normal_subgroups(cyclic_group(5)).size() == 2);
  CHECK(normal_subgroups(test::group("A5")).size() == 2);
  auto C4 = normal_subgroups(cyclic_group(4));
  REQUIRE(C4.size() == 3);
  CHECK(C4[0].size() == 1);
  CHECK(C4[1].size() == 2);
  CHECK(C4[2].size() == 4);
  auto S3 = normal_subgroups(test::group("S3"));
  REQUIRE(S3.size() == 3);
  CHECK(S3[1].size() == 3);
  CHECK(normal_subgroups(test::group("D4")).size() == 6);
  CHECK(normal_subgroups(test::group("Q8")).size() == 6);
  CHECK(normal_subgroups(test::group("S4")).size() == 4);
  CHECK(error_of([] { normal_subgroups(alternating_group(6)); }) == ErrorCode::size_exceeded);
}

TEST_CASE("normal_subgroups: closed and normal", "[srank]") {
  for (auto const* name : {"D4", "A4", "C2xC2xC2", "Dic3"}) {
    auto G = test::group(name);
    for (auto const& N : normal_subgroups(G)) {
      std::vector<bool> in(G.size(), false);
      for (auto x : N) {
        in[x] = true;
      }
      for (auto x : N) {
        CHECK(in[G.inverse(x)]);
        for (auto y : N) {
          CHECK(in[G.multiply(x, y)]);
        }
        for (Index g = 0; g < G.size(); ++g) {
          CHECK(in[G.multiply(G.multiply(G.inverse(g), x), g)]);
        }
      }
    }
  }
}

TEST_CASE("quotient: cosets by least element", "[srank]") {
  auto G = test::group("D4");
  for (auto const& N : normal_subgroups(G)) {
    auto Q = quotient(G, N);
    CHECK(Q.group.size() * N.size() == G.size());
    CHECK(is_surjective(Q.projection));
    CHECK(kernel(Q.projection) == N);
    for (Index x = 0; x < G.size(); ++x) {
      CHECK(Q.representatives[Q.coset_of[x]] <= x);
    }
  }
  CHECK(error_of([&] { quotient(test::group("S3"), {0, 1}); }) == ErrorCode::invalid_argument);
}

TEST_CASE("m_s: examples", "[srank]") {
  auto C2 = cyclic_group(2);
  auto C3 = cyclic_group(3);
  CHECK(m_s(C3, C3) == Subgroup{0});
  CHECK(m_s(test::group("A5"), test::group("A5")) == Subgroup{0});
  auto C4 = cyclic_group(4);
  CHECK(m_s(C4, C2).size() == 2);
  CHECK(m_s(C2, C3) == Subgroup{0, 1});
  CHECK(error_of([&] { m_s(C4, C4); }) == ErrorCode::not_simple);
  CHECK(error_of([&] { m_s(C4, cyclic_group(1)); }) == ErrorCode::not_simple);
}

TEST_CASE("r_s: powers and trivial cases", "[srank]") {
  for (std::uint64_t p : {2, 3}) {
    auto S = cyclic_group(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(r_s(direct_power(S, n), S) == n);
    }
  }
  CHECK(r_s(cyclic_group(3), cyclic_group(2)) == 0);
  auto result = s_rank(test::group("S3"), cyclic_group(2));
  CHECK(result.rank == 1);
  CHECK(result.group.size() == 6);
  CHECK(result.simple.size() == 2);
  CHECK(r_s(test::group("A5"), test::group("A5")) == 1);
  CHECK(error_of([] { r_s(direct_power(test::group("A5"), 2), test::group("A5")); })
        == ErrorCode::size_exceeded);
}

TEST_CASE("r_s: D4 against its abelianization", "[srank]") {
  auto D4 = test::group("D4");
  auto K  = oracle::elementary_abelian_kernel(D4, 2);
  CHECK(D4.size() / K.size() == 4);
  CHECK(r_s(D4, cyclic_group(2)) == 2);
  CHECK(m_s(D4, cyclic_group(2)) == K);
}

TEST_CASE("r_s: naive oracle on groups up to order 60", "[srank]") {
  std::vector<FiniteGroup> corpus;
  for (auto const& [name, G] : small_group_library()) {
    corpus.push_back(G);
  }
  for (auto const* name : {"S4", "C3xS3", "D10", "C2xA4", "A5", "C5xS3", "D15"}) {
    corpus.push_back(test::group(name));
  }
  auto A5 = test::group("A5");
  for (auto const& G : corpus) {
    for (std::uint64_t p = 2; p <= G.size(); ++p) {
      auto S = cyclic_group(p);
      if (!is_simple_group(S)) {
        continue;
      }
      auto fast  = s_rank(G, S);
      auto naive = oracle::s_rank(G, S);
      CHECK(fast.rank == naive.rank);
      CHECK(fast.m_s == naive.m_s);
      CHECK(fast.m_s == oracle::elementary_abelian_kernel(G, p));
    }
    if (G.size() >= 60) {
      CHECK(s_rank(G, A5).rank == oracle::s_rank(G, A5).rank);
    }
  }
}

TEST_CASE("check_rank_monotone: examples", "[srank]") {
  auto C2 = cyclic_group(2);
  auto S3 = test::group("S3");
  CHECK(check_rank_monotone(identity_hom(S3.monoid()), C2));

  auto C4 = cyclic_group(4);
  auto q  = hom_from_images(C4.monoid(), C2.monoid(),
                            std::vector<Index>{C2.monoid().generators()[0]});
  CHECK(check_rank_monotone(q, C2));

  auto sign = quotient(S3, normal_subgroups(S3)[1]).projection;
  CHECK(sign.target().size() == 2);
  CHECK(check_rank_monotone(sign, C2));

  auto zero = hom_from_images(C4.monoid(), C2.monoid(), std::vector<Index>{0});
  CHECK(error_of([&] { check_rank_monotone(zero, C2); }) == ErrorCode::not_surjective);
}
