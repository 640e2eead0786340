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
  using Dense = std::vector<std::vector<std::optional<Index>>>;

  // Matrix product over S with zero, straight from the definition.
  Dense dense_multiply(FiniteMonoid const& S, Dense const& X, Dense const& Y) {
    std::size_t n = X.size();
    Dense       Z(n, std::vector<std::optional<Index>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (X[i][k] && Y[k][j]) {
            REQUIRE_FALSE(Z[i][j]);
            Z[i][j] = S.multiply(*X[i][k], *Y[k][j]);
          }
        }
      }
    }
    return Z;
  }

  RowMonomialMatrix random_matrix(FiniteMonoid const& S, std::size_t n, Rng& rng) {
    std::vector<RowMonomialMatrix::Row> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back({static_cast<Index>(uniform(rng, n)), static_cast<Index>(uniform(rng, S.size()))});
    }
    return RowMonomialMatrix(S, rows);
  }

  std::vector<WreathElement> all_wreath(std::size_t b, std::size_t s) {
    std::vector<WreathElement> out;
    std::size_t                total = 1;
    for (std::size_t i = 0; i < 2 * b; ++i) {
      total *= i < b ? s : b;
    }
    for (std::size_t code = 0; code < total; ++code) {
      WreathElement w{std::vector<Index>(b), std::vector<Index>(b)};
      std::size_t   c = code;
      for (std::size_t i = 0; i < b; ++i) {
        w.f[i] = c % s;
        c /= s;
      }
      for (std::size_t i = 0; i < b; ++i) {
        w.t[i] = c % b;
        c /= b;
      }
      out.push_back(w);
    }
    return out;
  }
}  // namespace

TEST_CASE("rm_multiply: identity", "[wreath]") {
  auto S = test::group("S3").monoid();
  Rng  rng(1);
  auto X = random_matrix(S, 4, rng);
  CHECK(rm_multiply(RowMonomialMatrix::identity(S, 4), X) == X);
  CHECK(rm_multiply(X, RowMonomialMatrix::identity(S, 4)) == X);
}

TEST_CASE("rm_multiply: permutation matrices over the trivial group", "[wreath]") {
  auto S = cyclic_group(1).monoid();
  auto P = RowMonomialMatrix(S, {{1, 0}, {2, 0}, {0, 0}});
  auto Q = RowMonomialMatrix(S, {{1, 0}, {0, 0}, {2, 0}});
  auto R = rm_multiply(P, Q);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(R.column(i) == Q.column(P.column(i)));
  }
}

TEST_CASE("rm_multiply: constant column absorbs", "[wreath]") {
  auto S = test::group("C3").monoid();
  Rng  rng(2);
  for (int k = 0; k < 20; ++k) {
    auto X = random_matrix(S, 3, rng);
    auto Y = RowMonomialMatrix::constant_column(S, 3, 0, uniform(rng, 3));
    auto Z = rm_multiply(X, Y);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(Z.column(i) == 0);
    }
  }
}

TEST_CASE("rm_multiply: dense product oracle", "[wreath]") {
  auto S = test::full_transformation_monoid(2);
  Rng  rng(3);
  for (int k = 0; k < 50; ++k) {
    auto X = random_matrix(S, 3, rng);
    auto Y = random_matrix(S, 3, rng);
    CHECK(rm_multiply(X, Y).to_dense() == dense_multiply(S, X.to_dense(), Y.to_dense()));
  }
  auto T = test::group("C2").monoid();
  CHECK(error_of([&] {
          rm_multiply(RowMonomialMatrix::identity(S, 2), RowMonomialMatrix::identity(S, 3));
        })
        == ErrorCode::size_mismatch);
  CHECK(error_of([&] {
          rm_multiply(RowMonomialMatrix::identity(S, 2), RowMonomialMatrix::identity(T, 2));
        })
        == ErrorCode::size_mismatch);
}

TEST_CASE("row-monomial shape is enforced", "[wreath]") {
  auto S = test::group("C2").monoid();
  CHECK(error_of([&] { RowMonomialMatrix(S, {{2, 0}, {0, 0}}); }) == ErrorCode::not_row_monomial);
  CHECK(error_of([&] { RowMonomialMatrix(S, {{0, 5}, {0, 0}}); }) == ErrorCode::not_row_monomial);
  Dense two = {{0, 1}, {std::nullopt, 0}};
  CHECK(error_of([&] { RowMonomialMatrix::from_dense(S, two); }) == ErrorCode::not_row_monomial);
}

TEST_CASE("wreath_to_rm: examples", "[wreath]") {
  auto S = test::group("C2").monoid();
  CHECK(wreath_to_rm(S, {{0, 0, 0}, {0, 1, 2}}) == RowMonomialMatrix::identity(S, 3));
  auto X = wreath_to_rm(S, {{1, 0, 1}, {2, 2, 2}});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(X.column(i) == 2);
  }
}

TEST_CASE("wreath_to_rm: round trip and products", "[wreath]") {
  for (auto const* name : {"C2", "S3"}) {
    auto S = test::group(name).monoid();
    for (std::size_t b = 1; b <= (S.size() > 2 ? 2 : 3); ++b) {
      auto all = all_wreath(b, S.size());
      for (auto const& v : all) {
        CHECK(rm_to_wreath(wreath_to_rm(S, v)) == v);
      }
      for (std::size_t i = 0; i < all.size(); i += 3) {
        for (std::size_t j = 0; j < all.size(); j += 5) {
          auto const&   v = all[i];
          auto const&   w = all[j];
          WreathElement vw{std::vector<Index>(b), std::vector<Index>(b)};
          for (std::size_t k = 0; k < b; ++k) {
            vw.f[k] = S.multiply(v.f[k], w.f[v.t[k]]);
            vw.t[k] = w.t[v.t[k]];
          }
          CHECK(rm_multiply(wreath_to_rm(S, v), wreath_to_rm(S, w)) == wreath_to_rm(S, vw));
        }
      }
    }
  }
}

TEST_CASE("block matrices: flattening is multiplicative", "[wreath]") {
  auto S = test::group("C2").monoid();
  Rng  rng(4);
  auto random_block = [&](std::size_t p, std::size_t b) {
    std::vector<BlockRowMonomialMatrix::Row> rows;
    for (std::size_t i = 0; i < p; ++i) {
      rows.push_back({static_cast<Index>(uniform(rng, p)), random_matrix(S, b, rng)});
    }
    return BlockRowMonomialMatrix(rows);
  };
  for (auto [p, b] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 3}, std::pair{2, 6}}) {
    for (int k = 0; k < 25; ++k) {
      auto X = random_block(p, b);
      auto Y = random_block(p, b);
      CHECK(block_multiply(X, Y).flatten() == rm_multiply(X.flatten(), Y.flatten()));
      auto back = BlockRowMonomialMatrix::from_flat(X.flatten(), b);
      CHECK(back.flatten() == X.flatten());
    }
  }
}

TEST_CASE("constant_wreath: examples", "[wreath]") {
  auto trivial = constant_wreath(cyclic_group(1), 2);
  CHECK(trivial.simple_part.elements.size() == 2);
  auto const& T = trivial.monoid;
  for (auto x : trivial.simple_part.elements) {
    for (auto y : trivial.simple_part.elements) {
      CHECK(T.multiply(x, y) == y);
    }
  }

  auto c2 = constant_wreath(cyclic_group(2), 1);
  CHECK(is_isomorphic(FiniteGroup::from_monoid(c2.monoid), cyclic_group(2)));

  auto W = constant_wreath(cyclic_group(2), 2);
  CHECK(W.simple_part.elements.size() == 8);
  CHECK(oracle::is_simple(W.monoid, W.simple_part.elements));
  CHECK(error_of([] { constant_wreath(test::group("S3"), 3, 100); }) == ErrorCode::cap_exceeded);
}

TEST_CASE("psi: examples", "[wreath]") {
  auto G = test::group("S3");
  auto W = constant_wreath(G, 2);
  auto const& M = W.monoid;
  for (auto e : W.simple_part.elements) {
    if (!M.is_idempotent(e)) {
      continue;
    }
    CHECK(psi(W, e, e) == G.identity());
    auto E = RowMonomialMatrix::from_element(G.monoid(), M.at(e));
    for (Index g = 0; g < G.size(); ++g) {
      auto gbar = RowMonomialMatrix::constant_column(G.monoid(), 2, E.column(0), g);
      auto s    = M.index_of(rm_multiply(rm_multiply(E, gbar), E).to_element());
      CHECK(psi(W, e, s) == g);
    }
    auto other = RowMonomialMatrix::constant_column(G.monoid(), 2, 1 - E.column(0), 0);
    CHECK(error_of([&] { psi(W, e, M.index_of(other.to_element())); })
          == ErrorCode::not_in_local_monoid);
  }
  auto trivial = constant_wreath(cyclic_group(1), 3);
  for (auto e : trivial.simple_part.elements) {
    CHECK(psi(trivial, e, e) == 0);
  }
}

TEST_CASE("rlm: examples", "[wreath]") {
  CHECK(rlm(test::group("S3").monoid()).action.elements().front().code().size() == 1);
  CHECK(rlm(test::one_zero()).action.size() == 1);

  auto c = build_idempotent_cover(cyclic_group(2), 3);
  auto R = rlm(*c.monoid);
  CHECK(R.action.find(cycle_transformation(3)).has_value());
  for (Element::value_type j = 0; j < 3; ++j) {
    CHECK(R.action.find(constant_transformation(3, j)).has_value());
  }
  auto I = minimal_ideal(*c.monoid);
  for (auto x : I.elements) {
    CHECK(is_constant(R.action.at(R.hom(x))));
  }
}

TEST_CASE("schutz_rep: examples", "[wreath]") {
  auto c   = build_idempotent_cover(cyclic_group(2), 3);
  auto rep = schutz_rep(*c.monoid);
  auto const& R = rep.rees;
  auto        E = rep.matrix_of(R.base);
  for (std::size_t b = 0; b < E.size(); ++b) {
    CHECK(E.column(b) == 0);
    CHECK(E.value(b) == R.group.identity());
  }
  std::set<Element> seen;
  for (Index g = 0; g < R.group.size(); ++g) {
    auto s = R.group_to_monoid[g];
    auto X = rep.matrix_of(s);
    for (std::size_t b = 0; b < X.size(); ++b) {
      CHECK(X.column(b) == 0);
      CHECK(X.value(b) == g);
    }
    seen.insert(X.to_element());
  }
  CHECK(seen.size() == R.group.size());
  CHECK(respects_products(rep.hom));
}

TEST_CASE("faithfulness: examples", "[wreath]") {
  CHECK(is_faithful_on_min_ideal(test::group("S3").monoid()));
  CHECK(is_faithful_on_min_ideal(*build_idempotent_cover(cyclic_group(2), 3).monoid));

  auto M = test::one_zero();
  CHECK_FALSE(is_faithful_on_min_ideal(M));
  CHECK(faithfulness_witness(schutz_rep(M)).has_value());

  // C2 x {1, 0} on four points.
  auto swap = permutation_from_cycles(4, {{0, 1}, {2, 3}});
  auto zero = transformation({0, 1, 0, 1});
  auto N    = transformation_monoid(4, {swap, zero});
  REQUIRE(N.size() == 4);
  CHECK_FALSE(is_faithful_on_min_ideal(N));
  auto Q = schutz_faithful_quotient(N);
  CHECK(Q.monoid.size() < N.size());
  CHECK(is_faithful_on_min_ideal(Q.monoid));
  CHECK(is_surjective(Q.hom));

  auto G  = test::group("D4").monoid();
  auto QG = schutz_faithful_quotient(G);
  CHECK(QG.monoid.size() == G.size());
}
