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

#include "sgkit/hom.hpp"
#include "sgkit/isomorphism.hpp"
#include "sgkit/oracles.hpp"
#include "sgkit/report.hpp"

#include "support.hpp"

using namespace sgkit;
using test::error_of;

TEST_CASE("generate_monoid: identity on three points", "[core]") {
  auto M = transformation_monoid(3, {identity_transformation(3)});
  CHECK(M.size() == 1);
}

TEST_CASE("generate_monoid: two constants on two points", "[core]") {
  std::vector<Element> seeds = {constant_transformation(2, 0), constant_transformation(2, 1)};
  auto                 M     = transformation_monoid(2, seeds);
  REQUIRE(M.size() == 3);
  auto naive = oracle::closure(seeds, transformation_rule(2));
  CHECK(std::set<Element>(M.elements().begin(), M.elements().end()) == naive);
}

TEST_CASE("generate_monoid: a 3-cycle gives C3", "[core]") {
  auto M = transformation_monoid(3, {cycle_transformation(3)});
  REQUIRE(M.size() == 3);
  CHECK(is_isomorphic(FiniteGroup::from_monoid(M), cyclic_group(3)));
}

TEST_CASE("generate_monoid: identity first, witness words evaluate", "[core]") {
  auto M = test::full_transformation_monoid(3);
  REQUIRE(M.size() == 27);
  CHECK(M.at(0) == identity_transformation(3));
  for (Index i = 0; i < M.size(); ++i) {
    CHECK(M.evaluate(M.word(i)) == i);
  }
  for (Index i = 1; i < M.size(); ++i) {
    CHECK(M.word_length(i - 1) <= M.word_length(i));
  }
}

TEST_CASE("generate_monoid: deterministic", "[core]") {
  auto a = test::full_transformation_monoid(4);
  auto b = test::full_transformation_monoid(4);
  CHECK(a.elements() == b.elements());
}

TEST_CASE("generate_monoid: cap", "[core]") {
  CHECK(error_of([] { transformation_monoid(3, {cycle_transformation(3)}, 2); })
        == ErrorCode::cap_exceeded);
}

TEST_CASE("generate_monoid: product leaving the domain", "[core]") {
  auto rule      = std::make_shared<ProductRule>(*transformation_rule(2));
  rule->multiply = [](Element const&, Element const&) { return transformation({0, 5}); };
  CHECK(error_of([&] { generate_monoid({transformation({1, 0})}, rule); })
        == ErrorCode::inconsistent_product);
}

TEST_CASE("generate_monoid: associativity on random monoids", "[core]") {
  Rng rng(7);
  for (int k = 0; k < 30; ++k) {
    std::vector<Element> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Element::value_type> images(4);
      for (auto& x : images) {
        x = uniform(rng, 4);
      }
      gens.push_back(transformation(images));
    }
    auto M = transformation_monoid(4, gens);
    CHECK(is_associative(M));
  }
}

TEST_CASE("omega_power: examples", "[core]") {
  auto C3 = transformation_monoid(3, {cycle_transformation(3)});
  CHECK(omega_power(C3, 0) == 0);
  CHECK(omega_power(C3, C3.index_of(cycle_transformation(3))) == 0);
  auto M = test::one_zero();
  auto z = M.index_of(constant_transformation(2, 0));
  CHECK(omega_power(M, z) == z);
}

TEST_CASE("omega_power: naive scan", "[core]") {
  auto M = test::full_transformation_monoid(4);
  for (Index x = 0; x < M.size(); ++x) {
    auto w = omega_power(M, x);
    CHECK(M.is_idempotent(w));
    CHECK(w == oracle::omega_power(M, x));
  }
}

TEST_CASE("hom_from_images: examples", "[core]") {
  auto C3 = cyclic_group(3);
  auto C1 = cyclic_group(1);
  auto t  = hom_from_images(C3.monoid(), C1.monoid(), std::vector<Index>{0});
  CHECK(image(t) == std::vector<Index>{0});

  auto C4 = cyclic_group(4);
  auto C2 = cyclic_group(2);
  REQUIRE(C4.monoid().generator_count() == 1);
  auto h = C2.monoid().generators()[0];
  auto q = hom_from_images(C4.monoid(), C2.monoid(), std::vector<Index>{h});
  CHECK(is_surjective(q));
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      CHECK(q(C4.multiply(a, b)) == C2.multiply(q(a), q(b)));
    }
  }
  CHECK(kernel(q).size() == 2);

  auto g3 = C3.monoid().generators()[0];
  CHECK(error_of([&] {
          hom_from_images(C2.monoid(), C3.monoid(), std::vector<Index>{g3});
        })
        == ErrorCode::not_well_defined);
}

TEST_CASE("compose and inverse", "[core]") {
  auto S3 = test::group("S3");
  auto id = identity_hom(S3.monoid());
  auto f  = compose(id, id);
  CHECK(f.map() == id.map());
  auto iso = is_isomorphic(S3, symmetric_group(3));
  REQUIRE(iso);
  auto back = inverse(*iso);
  CHECK(compose(*iso, back).map() == identity_hom(S3.monoid()).map());
}

TEST_CASE("pullback: examples", "[core]") {
  auto C4 = cyclic_group(4);
  auto C2 = cyclic_group(2);
  auto q  = hom_from_images(C4.monoid(), C2.monoid(),
                            std::vector<Index>{C2.monoid().generators()[0]});

  auto same = pullback(q, identity_hom(C2.monoid()));
  CHECK(same.group.size() == 4);
  CHECK(is_isomorphic(same.group, C4));
  CHECK(is_surjective(same.to_first));
  CHECK(is_surjective(same.to_second));

  auto C1 = cyclic_group(1);
  auto S3 = test::group("S3");
  auto a  = hom_from_images(C4.monoid(), C1.monoid(), std::vector<Index>{0});
  auto r  = hom_from_images(S3.monoid(), C1.monoid(),
                            std::vector<Index>(S3.monoid().generator_count(), 0));
  auto P  = pullback(a, r);
  CHECK(is_isomorphic(P.group, direct_product({C4, S3})));

  auto zero = hom_from_images(C4.monoid(), C2.monoid(), std::vector<Index>{0});
  CHECK(error_of([&] { pullback(zero, identity_hom(C2.monoid())); })
        == ErrorCode::not_surjective);
}

TEST_CASE("canonical_section: examples", "[core]") {
  auto C4 = cyclic_group(4);
  auto C2 = cyclic_group(2);
  auto id = canonical_section(identity_hom(C4.monoid()));
  CHECK(id.map == test::all_of(C4.monoid()));

  auto q = hom_from_images(C4.monoid(), C2.monoid(),
                           std::vector<Index>{C2.monoid().generators()[0]});
  auto s = canonical_section(q);
  CHECK(s(0) == 0);
  for (Index k = 0; k < 2; ++k) {
    Index least = kNoIndex;
    for (Index h = 0; h < 4 && least == kNoIndex; ++h) {
      if (q(h) == k) {
        least = h;
      }
    }
    CHECK(s(k) == least);
    CHECK(q(s(k)) == k);
  }

  auto C1 = cyclic_group(1);
  auto t  = canonical_section(hom_from_images(C4.monoid(), C1.monoid(), std::vector<Index>{0}));
  CHECK(t.map == std::vector<Index>{0});
}

TEST_CASE("is_isomorphic: examples", "[core]") {
  CHECK_FALSE(is_isomorphic(cyclic_group(4), test::group("C2xC2")));
  auto C6   = cyclic_group(6);
  auto C2C3 = direct_product({cyclic_group(2), cyclic_group(3)});
  auto iso  = is_isomorphic(C6, C2C3);
  REQUIRE(iso);
  CHECK(is_injective(*iso));
  for (Index a = 0; a < 6; ++a) {
    for (Index b = 0; b < 6; ++b) {
      CHECK((*iso)(C6.multiply(a, b)) == C2C3.multiply((*iso)(a), (*iso)(b)));
    }
  }
  auto S3 = test::group("S3");
  CHECK(is_isomorphic(S3, S3));
  CHECK(error_of([] { is_isomorphic(alternating_group(6), alternating_group(6)); })
        == ErrorCode::size_exceeded);
}

TEST_CASE("group library: orders and distinct types", "[core]") {
  auto const& lib = small_group_library();
  CHECK(lib.size() == 40);
  for (std::size_t i = 0; i < lib.size(); ++i) {
    CHECK(identify_group(lib[i].group) == lib[i].name);
    for (std::size_t j = i + 1; j < lib.size(); ++j) {
      if (lib[i].group.size() == lib[j].group.size()) {
        CHECK_FALSE(is_isomorphic(lib[i].group, lib[j].group));
      }
    }
  }
  CHECK(test::group("S4").size() == 24);
  CHECK(test::group("A5").size() == 60);
  CHECK(test::group("Dic3").size() == 12);
  CHECK_FALSE(library_group("X7"));
}

TEST_CASE("group_from_table rejects non-groups", "[core]") {
  CHECK(error_of([] { group_from_table({{0, 1}, {1, 1}}); }).has_value());
  auto G = group_from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(is_isomorphic(G, cyclic_group(3)));
}

TEST_CASE("report: render and parse", "[core]") {
  Report r("demo");
  r.set("p", std::size_t{5});
  r.set("mode", std::string("full"));
  r.add_check("first", true);
  r.add_check("second", false, "a\\b\nc");
  r.add_skipped("third", "too large");
  r.note("elapsed 3 ms");
  CHECK(r.count(Outcome::pass) == 1);
  CHECK(r.exit_code() == 1);
  auto back = Report::parse(r.render());
  CHECK(back == r);
  CHECK(back.find("second")->witness == "a\\b\nc");
  CHECK(r.trailer().find("elapsed") == std::string::npos);
  CHECK(error_of([] { Report::parse("report=x\ncheck.a=maybe\n"); }) == ErrorCode::parse_error);
}
