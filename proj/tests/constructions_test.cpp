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
#include "sgkit/embedding.hpp"
#include "sgkit/green.hpp"
#include "sgkit/isomorphism.hpp"
#include "sgkit/oracles.hpp"
#include "sgkit/schutzenberger.hpp"

#include "support.hpp"

using namespace sgkit;
using test::error_of;

namespace {
  RowMonomialMatrix power(RowMonomialMatrix const& X, std::size_t k) {
    auto out = RowMonomialMatrix::identity(X.entries(), X.size());
    for (std::size_t i = 0; i < k; ++i) {
      out = rm_multiply(out, X);
    }
    return out;
  }

  MonoidHom onto_generator(FiniteGroup const& H, FiniteGroup const& K) {
    std::vector<Index> images(H.monoid().generator_count(), K.monoid().generators()[0]);
    return hom_from_images(H.monoid(), K.monoid(), images);
  }

  EmbeddingProblem e1() {
    auto C2 = cyclic_group(2);
    auto C1 = cyclic_group(1);
    return make_embedding_problem(
        C2, C1, hom_from_images(C2.monoid(), C1.monoid(), std::vector<Index>{0}),
        prepare_base(test::one_zero()));
  }

  EmbeddingProblem e2() {
    auto C4 = cyclic_group(4);
    auto C2 = cyclic_group(2);
    return make_embedding_problem(C4, C2, onto_generator(C4, C2), prepare_base(test::cyclic_base()));
  }

  EmbeddingProblem e3() {
    auto C2 = cyclic_group(2);
    return make_embedding_problem(C2, C2, identity_hom(C2.monoid()),
                                  prepare_base(test::cyclic_base()));
  }

  void all_pass(Report const& r) {
    for (auto const& c : r.checks()) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.outcome == Outcome::pass);
    }
  }
}  // namespace

TEST_CASE("build_idempotent_cover: bound on n", "[constructions]") {
  CHECK(error_of([] { build_idempotent_cover(cyclic_group(2), 2); }) == ErrorCode::n_too_small);
  CHECK(error_of([] { build_idempotent_cover(cyclic_group(1), 1); }) == ErrorCode::n_too_small);
  CoverOptions options;
  options.allowed_moduli = std::vector<std::size_t>{5};
  CHECK(error_of([&] { build_idempotent_cover(cyclic_group(2), 3, options); })
        == ErrorCode::modulus_not_allowed);
  CHECK_NOTHROW(build_idempotent_cover(cyclic_group(2), 5, options));
  options.allowed_moduli.reset();
  options.cap = 50;
  CHECK(error_of([&] { build_idempotent_cover(cyclic_group(3), 5, options); })
        == ErrorCode::cap_exceeded);
}

TEST_CASE("build_idempotent_cover: trivial group", "[constructions]") {
  auto c = build_idempotent_cover(cyclic_group(1), 2);
  CHECK(c.g_y.size() == 1);
  all_pass(verify_cover(c, CoverMode::full));
}

TEST_CASE("build_idempotent_cover: C2 with n = 3", "[constructions]") {
  auto H = cyclic_group(2);
  auto c = build_idempotent_cover(H, 3);
  auto z = rm_multiply(rm_multiply(rm_multiply(rm_multiply(c.y, c.x), c.y), power(c.x, 2)), c.y);
  CHECK(c.theta_of(z) == 1);
  auto const& M = *c.monoid;
  auto        J = Subsemigroup{M, c.ideal->elements};
  CHECK(idempotent_generated(J).elements == J.elements);
  CHECK(is_isomorphic(maximal_subgroup(M, M.index_of(c.y.to_element())), H));
  CHECK(c.x.size() == 3);
  CHECK(power(c.x, 3) == RowMonomialMatrix::identity(H.monoid(), 3));
  CHECK_FALSE(power(c.x, 1) == RowMonomialMatrix::identity(H.monoid(), 3));
  CHECK(rm_multiply(c.y, c.y) == c.y);
  all_pass(verify_cover(c, CoverMode::full));
}

TEST_CASE("cover witnesses", "[constructions]") {
  auto H = cyclic_group(3);
  auto c = build_idempotent_cover(H, 5);
  auto w = cover_idempotent_witnesses(c);
  REQUIRE(w.size() == 3);
  CHECK(w[0].factors.size() == 1);
  CHECK(w[0].product == c.y);
  CHECK(c.theta_of(w[0].product) == 0);
  for (Index j = 1; j < 3; ++j) {
    REQUIRE(w[j].factors.size() == 3);
    auto const& mid = w[j].factors[1];
    CHECK(mid == rm_multiply(rm_multiply(power(c.x, j), c.y), power(c.x, 5 - j)));
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(mid.column(i) == 5 - j);
      CHECK(mid.value(i) == c.y.value((i + j) % 5));
    }
    for (auto const& f : w[j].factors) {
      CHECK(rm_multiply(f, f) == f);
    }
    auto product = rm_multiply(rm_multiply(w[j].factors[0], mid), w[j].factors[2]);
    CHECK(product == w[j].product);
    auto u = c.monoid->index_of(product.to_element());
    CHECK(std::binary_search(c.g_y.begin(), c.g_y.end(), u));
    CHECK(c.theta_of(product) == j);
  }
}

TEST_CASE("verify_cover: cheap mode for S3", "[constructions]") {
  CoverOptions options;
  options.mode = CoverMode::cheap;
  auto c       = build_idempotent_cover(test::group("S3"), 11, options);
  CHECK_FALSE(c.monoid);
  auto r = verify_cover(c, CoverMode::cheap);
  CHECK(r.ok());
  CHECK(r.count(Outcome::pass) == 4);
  CHECK(r.count(Outcome::skipped) == 6);
}

TEST_CASE("prepare_base: examples", "[constructions]") {
  auto group = prepare_base(test::cyclic_base());
  CHECK(group.f == 0);
  CHECK(group.b() == 1);
  CHECK(is_isomorphic(group.K(), cyclic_group(2)));
  CHECK_FALSE(group.reduction);

  auto M  = test::one_zero();
  auto oz = prepare_base(M);
  CHECK(oz.K().size() == 1);
  CHECK(oz.b() == 1);
  REQUIRE(oz.reduction);
  CHECK((*oz.reduction)(M.index_of(constant_transformation(2, 0))) == oz.f);

  auto c  = build_idempotent_cover(cyclic_group(2), 3);
  auto pb = prepare_base(*c.monoid);
  CHECK(is_isomorphic(pb.K(), cyclic_group(2)));
  CHECK(pb.b() == 3);
  for (std::size_t i = 0; i < pb.m_f.size(); ++i) {
    CHECK(pb.m_f.column(i) == 0);
    CHECK(pb.m_f.value(i) == pb.K().identity());
  }
  auto g1 = pb.monoid.generators()[0];
  auto g2 = pb.monoid.generators()[1];
  CHECK(pb.monoid.multiply(omega_power(pb.monoid, g1), pb.f) == pb.f);
  CHECK(pb.monoid.multiply(pb.f, omega_power(pb.monoid, g2)) == pb.f);

  CHECK(error_of([] { prepare_base(cyclic_group(3).monoid()); })
        == ErrorCode::too_few_generators);
}

TEST_CASE("make_embedding_problem: errors", "[constructions]") {
  auto C2 = cyclic_group(2);
  auto C4 = cyclic_group(4);
  auto base = prepare_base(test::cyclic_base());
  auto zero = hom_from_images(C4.monoid(), C2.monoid(), std::vector<Index>{0});
  CHECK(error_of([&] { make_embedding_problem(C4, C2, zero, base); })
        == ErrorCode::non_surjective_alpha);
  CHECK(error_of([&] { make_embedding_problem(C4, C4, identity_hom(C4.monoid()), base); })
        == ErrorCode::k_mismatch);
}

TEST_CASE("choose_parameters: primes", "[constructions]") {
  auto P = e2();
  auto q = choose_parameters(P);
  CHECK(q.nu == 2);
  CHECK(q.b == 1);
  CHECK(q.ell == 2);
  CHECK(q.m == 4);
  CHECK(q.p == 5);
  CHECK((q.r * q.m) % q.p == 1);

  EmbeddingOptions options;
  options.prime = 3;
  CHECK(error_of([&] { choose_parameters(P, options); }) == ErrorCode::prime_bound_violated);
  options.prime = 9;
  CHECK(error_of([&] { choose_parameters(P, options); }) == ErrorCode::prime_bound_violated);
  options.prime = 7;
  CHECK(choose_parameters(P, options).p == 7);
  options.prime.reset();
  options.allowed_primes = std::vector<std::uint64_t>{2, 3};
  CHECK(error_of([&] { choose_parameters(P, options); }) == ErrorCode::prime_bound_violated);
  options.allowed_primes = std::vector<std::uint64_t>{2, 11};
  CHECK(choose_parameters(P, options).p == 11);
}

TEST_CASE("solve_embedding: identity alpha", "[constructions]") {
  auto sol = solve_embedding(e3());
  CHECK(sol.params.nu == 1);
  CHECK(sol.params.ell == 1);
  REQUIRE(sol.g_e);
  CHECK(is_isomorphic(*sol.g_e, cyclic_group(2)));
  all_pass(verify_embedding(sol));
}

TEST_CASE("solve_embedding: {1, 0} base", "[constructions]") {
  auto sol = solve_embedding(e1());
  REQUIRE(sol.g_e);
  CHECK(is_isomorphic(*sol.g_e, cyclic_group(2)));
  all_pass(verify_embedding(sol));
}

TEST_CASE("solve_embedding: C4 onto C2", "[constructions]") {
  auto P   = e2();
  auto sol = solve_embedding(P);
  REQUIRE(sol.g_e);
  CHECK(is_isomorphic(*sol.g_e, cyclic_group(4)));
  auto const& entries = sol.flat_generators.front().entries();
  auto const& rees    = sol.problem.base.schutz.rees;
  for (Index u = 0; u < sol.g_e->size(); ++u) {
    auto U = RowMonomialMatrix::from_element(entries, sol.g_e->monoid().at(u));
    CHECK(rees.group_to_monoid[P.alpha_base(sol.theta_of(U))] == sol.rho_of(U));
  }
  CHECK(rm_multiply(sol.e_prime, sol.e_prime) == sol.e_prime);
  CHECK(sol.theta_of(sol.e_prime) == 0);
  CHECK(sol.rho_of(sol.e_prime) == P.base.f);
  for (std::size_t i = 0; i < sol.flat_generators.size(); ++i) {
    CHECK(sol.rho_of(sol.flat_generators[i]) == P.base.monoid.generators()[i]);
  }
  all_pass(verify_embedding(sol));
}

TEST_CASE("diagonal subgroup law", "[constructions]") {
  auto P   = e2();
  auto sol = solve_embedding(P);
  auto const& H = P.H;
  // With b = 1 the preimages of a K-entry are h and the other coset member.
  for (Index u = 0; u < H.size(); ++u) {
    for (Index v = 0; v < H.size(); ++v) {
      if (P.alpha_base(u) != P.alpha_base(v)) {
        continue;
      }
      auto U = RowMonomialMatrix::constant_column(H.monoid(), 1, 0, u);
      auto V = RowMonomialMatrix::constant_column(H.monoid(), 1, 0, v);
      int  hits = 0;
      for (auto const& D : sol.diagonals) {
        hits += rm_multiply(D, V) == U;
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("solve_embedding: partial mode", "[constructions]") {
  EmbeddingOptions options;
  options.cap = 5;
  CHECK(error_of([&] { solve_embedding(e2(), options); }) == ErrorCode::cap_exceeded);
  options.allow_partial = true;
  auto sol              = solve_embedding(e2(), options);
  CHECK(sol.partial());
  auto r = verify_embedding(sol, 200, 1);
  CHECK(r.ok());
  CHECK(r.count(Outcome::skipped) > 0);
  CHECK(r.param("closure_size") == "cap exceeded");
  CHECK(verify_embedding(sol, 200, 1).trailer() == r.trailer());
}

TEST_CASE("verify_embedding: corrupted generator", "[constructions]") {
  auto P      = e2();
  auto params = choose_parameters(P);
  auto gens   = embedding_generators(P, params);
  auto rows   = gens[1].rows();
  auto sigma  = canonical_section(P.alpha_base);
  auto const& U = rows[1].block;
  rows[1].block = rm_multiply(
      RowMonomialMatrix::diagonal(U.entries(), std::vector<Index>(U.size(), sigma(1))), U);
  gens[1] = BlockRowMonomialMatrix(rows);
  auto r  = verify_embedding(assemble_solution(P, params, gens));
  CHECK_FALSE(r.ok());
  auto const* lift = r.find("block_entries_lift");
  REQUIRE(lift);
  CHECK(lift->outcome == Outcome::fail);
  CHECK_FALSE(lift->witness.empty());
}
