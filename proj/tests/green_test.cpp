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

#include <algorithm>
#include <set>

#include <catch_amalgamated.hpp>

#include "sgkit/cover.hpp"
#include "sgkit/green.hpp"
#include "sgkit/isomorphism.hpp"
#include "sgkit/oracles.hpp"
#include "sgkit/rees.hpp"
#include "sgkit/row_monomial.hpp"
#include "sgkit/schutzenberger.hpp"
#include "sgkit/wreath.hpp"

#include "support.hpp"

using namespace sgkit;
using test::error_of;

namespace {
  Index label(Partition const& P, Index x) {
    return P.classes[P.class_of[x]].front();
  }

  void agrees_with_oracle(FiniteMonoid const& M) {
    auto gs    = green_structure(M);
    auto naive = oracle::green(M);
    for (Index x = 0; x < M.size(); ++x) {
      CHECK(label(gs.r, x) == naive.r[x]);
      CHECK(label(gs.l, x) == naive.l[x]);
      CHECK(label(gs.j, x) == naive.j[x]);
      CHECK(label(gs.h, x) == naive.h[x]);
    }
    CHECK(minimal_ideal(M).elements == oracle::minimal_ideal(M));
  }

  // The 2 x 2 rectangular band {(i, j)} with an identity adjoined.
  FiniteMonoid rectangular_band() {
    auto rule      = std::make_shared<ProductRule>();
    rule->identity = Element(ElementKind::table_index, {9, 9});
    rule->multiply = [id = rule->identity](Element const& x, Element const& y) {
      if (x == id) {
        return y;
      }
      if (y == id) {
        return x;
      }
      return Element(ElementKind::table_index, {x.code()[0], y.code()[1]});
    };
    std::vector<Element> seeds;
    for (Element::value_type i = 0; i < 2; ++i) {
      for (Element::value_type j = 0; j < 2; ++j) {
        seeds.emplace_back(ElementKind::table_index, std::vector<Element::value_type>{i, j});
      }
    }
    return generate_monoid(seeds, rule);
  }

  CoverResult cover_c2() {
    return build_idempotent_cover(cyclic_group(2), 3);
  }
}  // namespace

TEST_CASE("green_structure: a group is one class", "[green]") {
  auto G  = test::group("S3").monoid();
  auto gs = green_structure(G);
  CHECK(gs.r.size() == 1);
  CHECK(gs.l.size() == 1);
  CHECK(gs.j.size() == 1);
  CHECK(gs.h.size() == 1);
  agrees_with_oracle(G);
}

TEST_CASE("green_structure: {1, 0}", "[green]") {
  auto M  = test::one_zero();
  auto gs = green_structure(M);
  CHECK(gs.j.size() == 2);
  CHECK(gs.j.classes[0].size() == 1);
  agrees_with_oracle(M);
}

TEST_CASE("green_structure: full transformation monoid on three points", "[green]") {
  auto M  = test::full_transformation_monoid(3);
  auto gs = green_structure(M);
  REQUIRE(gs.j.size() == 3);
  for (auto const& cls : gs.j.classes) {
    std::set<std::size_t> ranks;
    for (auto x : cls) {
      auto const& code = M.at(x).code();
      ranks.insert(std::set<Element::value_type>(code.begin(), code.end()).size());
    }
    CHECK(ranks.size() == 1);
  }
  agrees_with_oracle(M);
  // The J-order is a chain by rank: constants lie below everything.
  auto c = gs.j.class_of[M.index_of(constant_transformation(3, 0))];
  for (Index d = 0; d < gs.j.size(); ++d) {
    CHECK(gs.j_order.leq(c, d));
  }
  CHECK_FALSE(gs.j_order.leq(gs.j.class_of[0], c));
}

TEST_CASE("green_structure: random monoids against the oracle", "[green]") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    std::size_t          degree = 2 + uniform(rng, 3);
    std::vector<Element> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Element::value_type> images(degree);
      for (auto& x : images) {
        x = uniform(rng, degree);
      }
      gens.push_back(transformation(images));
    }
    agrees_with_oracle(transformation_monoid(degree, gens));
  }
}

TEST_CASE("minimal_ideal: examples", "[green]") {
  auto G = test::group("C2xC2").monoid();
  CHECK(minimal_ideal(G).elements == test::all_of(G));

  auto M = test::one_zero();
  CHECK(minimal_ideal(M).elements
        == std::vector<Index>{M.index_of(constant_transformation(2, 0))});

  auto c = cover_c2();
  std::vector<Index> constant;
  for (Index u = 0; u < c.monoid->size(); ++u) {
    auto X = RowMonomialMatrix::from_element(c.group.monoid(), c.monoid->at(u));
    bool one_column = true;
    for (std::size_t i = 0; i < X.size(); ++i) {
      one_column = one_column && X.column(i) == X.column(0);
    }
    if (one_column) {
      constant.push_back(u);
    }
  }
  CHECK(minimal_ideal(*c.monoid).elements == constant);
}

TEST_CASE("minimal_ideal: below every principal ideal", "[green]") {
  auto M = test::full_transformation_monoid(3);
  auto I = minimal_ideal(M);
  CHECK_FALSE(I.idempotents.empty());
  for (Index x = 0; x < M.size(); ++x) {
    std::set<Index> ideal;
    for (Index s = 0; s < M.size(); ++s) {
      for (Index t = 0; t < M.size(); ++t) {
        ideal.insert(M.multiply(M.multiply(s, x), t));
      }
    }
    for (auto y : I.elements) {
      CHECK(ideal.count(y) == 1);
    }
    if (I.contains(x)) {
      CHECK(std::vector<Index>(ideal.begin(), ideal.end()) == I.elements);
    }
  }
}

TEST_CASE("maximal_subgroup: examples", "[green]") {
  auto S3 = test::group("S3");
  CHECK(maximal_subgroup(S3.monoid(), 0).size() == 6);

  auto M = test::one_zero();
  CHECK(maximal_subgroup(M, M.index_of(constant_transformation(2, 0))).size() == 1);
  CHECK(error_of([] {
          auto T = test::full_transformation_monoid(3);
          maximal_subgroup(T, T.index_of(transformation({1, 0, 0})));
        })
        == ErrorCode::not_idempotent);

  auto W = constant_wreath(cyclic_group(2), 2);
  for (auto e : W.simple_part.elements) {
    if (W.monoid.is_idempotent(e)) {
      CHECK(maximal_subgroup(W.monoid, e).size() == 2);
    }
  }
}

TEST_CASE("maximal_subgroup: independent of the idempotent", "[green]") {
  auto c = build_idempotent_cover(cyclic_group(3), 5);
  auto I = *c.ideal;
  auto G = maximal_subgroup(*c.monoid, I.idempotents.front());
  for (auto e : I.idempotents) {
    CHECK(is_isomorphic(maximal_subgroup(*c.monoid, e), G));
  }
}

TEST_CASE("rees_coordinates: a group", "[green]") {
  auto M = test::group("C4").monoid();
  auto R = rees_coordinates(M);
  CHECK(R.a_size() == 1);
  CHECK(R.b_size() == 1);
  CHECK(R.sandwich == std::vector<Index>{0});
  CHECK(verify_rees(R).ok());
}

TEST_CASE("rees_coordinates: rectangular band", "[green]") {
  auto M = rectangular_band();
  REQUIRE(M.size() == 5);
  auto R = rees_coordinates(M);
  CHECK(R.a_size() == 2);
  CHECK(R.b_size() == 2);
  CHECK(R.group.size() == 1);
  CHECK(R.sandwich == std::vector<Index>(4, 0));
  CHECK(idempotent_generated(Subsemigroup{M, R.ideal.elements}).elements == R.ideal.elements);
}

TEST_CASE("rees_coordinates: cover of C2", "[green]") {
  auto c = cover_c2();
  auto R = rees_coordinates(*c.monoid);
  CHECK(R.b_size() == 3);
  CHECK(is_isomorphic(R.group, cyclic_group(2)));
  for (Index a = 0; a < R.a_size(); ++a) {
    CHECK(R.C(0, a) == R.group.identity());
  }
  for (Index b = 0; b < R.b_size(); ++b) {
    CHECK(R.C(b, 0) == R.group.identity());
  }
  CHECK(R.coord(R.base) == ReesTriple{0, R.group.identity(), 0});
  auto const& M = *c.monoid;
  for (auto x : R.ideal.elements) {
    for (auto y : R.ideal.elements) {
      CHECK(R.coord(M.multiply(x, y)) == R.multiply(R.coord(x), R.coord(y)));
    }
  }
  CHECK(verify_rees(R).ok());
  CHECK(error_of([&] { R.coord(0); }) == ErrorCode::not_in_minimal_ideal);
}

TEST_CASE("is_simple: examples", "[green]") {
  auto G = test::group("S3").monoid();
  CHECK(is_simple(Subsemigroup{G, test::all_of(G)}));

  auto M = test::one_zero();
  CHECK_FALSE(is_simple(Subsemigroup{M, test::all_of(M)}));
  CHECK_FALSE(oracle::is_simple(M, test::all_of(M)));

  auto c = cover_c2();
  auto S = Subsemigroup{*c.monoid, c.ideal->elements};
  auto E = idempotent_generated(S);
  CHECK(E.elements == S.elements);
  CHECK(is_simple(E));
  CHECK(oracle::is_simple(E.monoid, E.elements));

  auto T = test::full_transformation_monoid(3);
  CHECK(error_of([&] {
          is_simple(Subsemigroup{T, {T.index_of(transformation({1, 0, 2}))}});
        })
        == ErrorCode::not_closed);
}

TEST_CASE("is_simple: agrees with the SxS scan", "[green]") {
  auto T = test::full_transformation_monoid(3);
  for (Index x = 0; x < T.size(); ++x) {
    auto S = Subsemigroup{T, right_ideal(T, x)};
    CHECK(is_simple(S) == oracle::is_simple(T, S.elements));
  }
}

TEST_CASE("idempotent_generated: examples", "[green]") {
  auto G = test::group("C3").monoid();
  CHECK(idempotent_generated(Subsemigroup{G, test::all_of(G)}).elements
        == std::vector<Index>{0});
  auto T = test::full_transformation_monoid(3);
  auto S = Subsemigroup{T, test::all_of(T)};
  auto E = idempotent_generated(S);
  check_closed(E);
  for (auto e : idempotents(T)) {
    CHECK(E.contains(e));
  }
}

TEST_CASE("check_min_ideal_image: examples", "[green]") {
  auto c = cover_c2();
  CHECK(check_min_ideal_image(identity_hom(*c.monoid)).ok());
  CHECK(check_min_ideal_image(rlm(*c.monoid).hom).ok());

  auto C2 = cyclic_group(2);
  auto C4 = cyclic_group(4);
  auto f  = hom_from_images(C2.monoid(), C4.monoid(), std::vector<Index>{0});
  CHECK(error_of([&] { check_min_ideal_image(f); }) == ErrorCode::not_surjective);
}
