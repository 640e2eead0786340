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

#include "sgkit/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include <fmt/format.h>

#include "sgkit/cli.hpp"
#include "sgkit/cover.hpp"
#include "sgkit/embedding.hpp"
#include "sgkit/error.hpp"
#include "sgkit/green.hpp"
#include "sgkit/isomorphism.hpp"
#include "sgkit/oracles.hpp"
#include "sgkit/schutzenberger.hpp"
#include "sgkit/srank.hpp"
#include "sgkit/transformation.hpp"
#include "sgkit/wreath.hpp"

namespace sgkit::acceptance {

  char const* const kEmbedOneZero = R"(# The monoid {1, 0} with generators 1 and 0, and C2 onto the trivial group.
monoid Z transf 2: [1 2] [1 1]
group C2 perm 2: (1 2)
group C1 table 1: 0
hom a from C2 to C1: 0
problem E1 base Z alpha a
)";

  char const* const kEmbedCyclic = R"(# C2 with generators g, g; C4 onto C2 and the identity of C2.
monoid B transf 2: [2 1] [2 1]
group C4 perm 4: (1 2 3 4)
group C2 perm 2: (1 2)
hom q from C4 to C2: (1 2)
hom id from C2 to C2: (1 2)
problem E2 base B alpha q
problem E3 base B alpha id
)";

  namespace {
    struct Solved {
      std::string       name;
      EmbeddingSolution solution;
    };

    // Data handed from one criterion to the next.
    struct Context {
      std::vector<std::pair<std::string, Subsemigroup>> simple;
      std::vector<std::pair<std::string, CoverResult>>  covers;
      std::vector<Solved>                               solved;
    };

    struct Failure {
      std::string what;
    };

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw Failure{what};
      }
    }

    FiniteGroup named(std::string const& name) {
      auto G = library_group(name);
      require(G.has_value(), fmt::format("no library group {}", name));
      return std::move(*G);
    }

    std::string first_failure(Report const& r) {
      for (auto const& c : r.checks()) {
        if (c.outcome == Outcome::fail) {
          return c.witness.empty() ? c.name : c.name + " (" + c.witness + ")";
        }
      }
      return "none";
    }

    void require_report(Report const& r, std::string const& label) {
      require(r.ok(), fmt::format("{}: check {} failed", label, first_failure(r)));
    }

    bool passed(Report const& r, std::string const& name) {
      auto const* c = r.find(name);
      return c != nullptr && c->outcome == Outcome::pass;
    }

    EmbeddingProblem embedding_problem(cli::Definitions const& defs, std::string const& name) {
      auto const& prob = defs.problem(name);
      auto const& decl = defs.hom(prob.alpha);
      auto        base = prepare_base(defs.object(prob.base).monoid);
      return make_embedding_problem(
          defs.group(decl.from), defs.group(decl.to), decl.hom, base);
    }

    RowMonomialMatrix power(RowMonomialMatrix const& X, std::size_t k) {
      auto out = RowMonomialMatrix::identity(X.entries(), X.size());
      for (std::size_t i = 0; i < k; ++i) {
        out = rm_multiply(out, X);
      }
      return out;
    }

    std::string psi_isomorphism(Context& ctx) {
      std::size_t pairs = 0, idems = 0;
      for (auto const& name : {"C1", "C2", "C3", "C4", "C2xC2", "S3"}) {
        auto G = named(name);
        for (std::size_t b = 1; b <= 3; ++b) {
          auto W = constant_wreath(G, b);
          ++pairs;
          for (auto e : W.simple_part.elements) {
            if (!W.monoid.is_idempotent(e)) {
              continue;
            }
            ++idems;
            auto where  = fmt::format("G = {}, |B| = {}, e = {}", name, b, W.monoid.format(e));
            auto ge     = maximal_subgroup_elements(W.monoid, e);
            std::vector<Index> image;
            for (auto s : ge) {
              image.push_back(psi(W, e, s));
            }
            auto sorted = image;
            std::sort(sorted.begin(), sorted.end());
            require(ge.size() == G.size()
                        && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                    where + ": psi is not a bijection onto G");
            for (std::size_t i = 0; i < ge.size(); ++i) {
              for (std::size_t j = 0; j < ge.size(); ++j) {
                auto st = W.monoid.multiply(ge[i], ge[j]);
                require(psi(W, e, st) == G.multiply(image[i], image[j]),
                        fmt::format("{}: psi({} {}) differs from the product of images",
                                    where,
                                    W.monoid.format(ge[i]),
                                    W.monoid.format(ge[j])));
              }
            }
          }
          ctx.simple.emplace_back(fmt::format("{} wr {}", name, b), W.simple_part);
        }
      }
      return fmt::format("{} pairs (G, B), {} idempotents", pairs, idems);
    }

    std::string cover_full(Context& ctx) {
      std::string sizes;
      for (auto const& name : {"C1", "C2", "C3", "C4", "C2xC2"}) {
        auto        H = named(name);
        std::size_t n = std::max<std::size_t>(2, 2 * H.size() - 1);
        auto        c = build_idempotent_cover(H, n);
        auto        r = verify_cover(c, CoverMode::full);
        require_report(r, name);
        for (auto const& check : {"maximal_subgroup_isomorphic",
                                  "idempotents_generate_ideal",
                                  "witness_images",
                                  "ideal_is_constant_part"}) {
          require(passed(r, check), fmt::format("{}: {} did not run", name, check));
        }
        auto const& M  = *c.monoid;
        auto const& J  = *c.ideal;
        Index       yi = M.index_of(c.y.to_element());
        require(is_isomorphic(maximal_subgroup(M, yi), H).has_value(),
                fmt::format("{}: G_y is not isomorphic to H", name));
        for (Index j = 1; j < H.size(); ++j) {
          auto z = rm_multiply(rm_multiply(rm_multiply(rm_multiply(c.y, power(c.x, j)), c.y),
                                           power(c.x, n - j)),
                               c.y);
          bool column_zero = std::all_of(
              z.rows().begin(), z.rows().end(), [](auto const& row) { return row.column == 0; });
          require(column_zero && z.value(0) == j,
                  fmt::format("{}: theta(y x^{} y x^-{} y) is not h_{}", name, j, j, j + 1));
        }
        std::vector<Index> constant;
        for (Index u = 0; u < M.size(); ++u) {
          auto X = RowMonomialMatrix::from_element(H.monoid(), M.at(u));
          if (std::all_of(X.rows().begin(), X.rows().end(), [&](auto const& row) {
                return row.column == X.column(0);
              })) {
            constant.push_back(u);
          }
        }
        require(constant == J.elements, fmt::format("{}: J is not M meet the constant part", name));
        Subsemigroup S{M, J.elements};
        require(idempotent_generated(S).elements == J.elements,
                fmt::format("{}: <E(J)> differs from J", name));
        sizes += fmt::format("{}{}: |M| = {}, |J| = {}", sizes.empty() ? "" : "; ", name,
                             M.size(), J.elements.size());
        ctx.simple.emplace_back(fmt::format("cover {}", name), std::move(S));
        ctx.covers.emplace_back(name, std::move(c));
      }
      return sizes;
    }

    std::string cover_cheap(Context&) {
      auto H = symmetric_group(3);
      CoverOptions options;
      options.mode = CoverMode::cheap;
      auto c       = build_idempotent_cover(H, 11, options);
      require_report(verify_cover(c, CoverMode::cheap), "S3");
      std::vector<Index> images;
      for (auto const& w : cover_idempotent_witnesses(c)) {
        if (w.h != H.identity()) {
          images.push_back(c.theta_of(w.product));
        }
      }
      require(images.size() == H.size() - 1, "wrong number of witnesses");
      auto generated = submonoid(H.monoid(), images, H.identity());
      std::vector<Index> members;
      for (Index u = 0; u < generated.size(); ++u) {
        members.push_back(H.monoid().index_of(generated.at(u)));
      }
      std::sort(members.begin(), members.end());
      auto G = subgroup_on(H.monoid(), members, H.identity());
      require(is_isomorphic(G, symmetric_group(3)).has_value(),
              "the witness images do not generate S3");
      return fmt::format("{} witness images generate a group of order {}", images.size(), G.size());
    }

    std::string embedding_exhaustive(Context& ctx) {
      auto one_zero = cli::Definitions::parse(kEmbedOneZero, "one_zero.def");
      auto cyclic   = cli::Definitions::parse(kEmbedCyclic, "cyclic.def");
      std::string summary;
      for (auto const& [defs, name] : {std::pair{&one_zero, "E1"},
                                       std::pair{&cyclic, "E2"},
                                       std::pair{&cyclic, "E3"}}) {
        auto             P = embedding_problem(*defs, name);
        EmbeddingOptions options;
        options.cap = 500'000;
        auto sol    = solve_embedding(P, options);
        auto r      = verify_embedding(sol);
        require_report(r, name);
        require(!sol.partial() && r.count(Outcome::skipped) == 0,
                fmt::format("{}: verification was not exhaustive", name));
        require(sol.g_e && is_isomorphic(*sol.g_e, P.H).has_value(),
                fmt::format("{}: G_e' is not isomorphic to H", name));
        // alpha after theta against rho, element by element.
        auto const& rees    = sol.problem.base.schutz.rees;
        auto const& entries = sol.flat_generators.front().entries();
        for (Index u = 0; u < sol.g_e->size(); ++u) {
          auto U     = RowMonomialMatrix::from_element(entries, sol.g_e->monoid().at(u));
          auto k     = P.alpha_base(sol.theta_of(U));
          auto where = rees.group_to_monoid.at(k);
          require(sol.rho_of(U) == where,
                  fmt::format("{}: alpha(theta(u)) differs from rho(u) at {}",
                              name, sol.g_e->monoid().format(u)));
        }
        summary += fmt::format("{}{}: p = {}, |M'| = {}, |J'| = {}, |G_e'| = {}",
                               summary.empty() ? "" : "; ", name, sol.params.p,
                               sol.monoid->size(), sol.ideal->elements.size(), sol.g_e->size());
        ctx.simple.emplace_back(fmt::format("{} ideal", name),
                                Subsemigroup{*sol.monoid, sol.ideal->elements});
        ctx.solved.push_back({name, std::move(sol)});
      }
      return summary;
    }

    std::string mutation(Context&) {
      auto defs    = cli::Definitions::parse(kEmbedCyclic, "cyclic.def");
      auto P       = embedding_problem(defs, "E2");
      auto params  = choose_parameters(P);
      auto gens    = embedding_generators(P, params);
      auto sigma   = canonical_section(P.alpha_base);
      auto rows    = gens.at(1).rows();
      auto const& U = rows.at(1).block;
      auto D       = RowMonomialMatrix::diagonal(U.entries(), std::vector<Index>(U.size(), sigma(1)));
      rows.at(1).block = rm_multiply(D, U);
      gens.at(1)       = BlockRowMonomialMatrix(std::move(rows));
      auto sol         = assemble_solution(P, params, std::move(gens));
      auto r           = verify_embedding(sol);
      std::vector<std::string> failed;
      bool                     witnessed = false;
      for (auto const& c : r.checks()) {
        if (c.outcome == Outcome::fail) {
          failed.push_back(c.name);
          witnessed = witnessed || !c.witness.empty();
        }
      }
      require(!failed.empty(), "no check detects the corrupted block");
      require(witnessed, "failing checks carry no witness");
      return fmt::format("{} checks fail: {}", failed.size(), fmt::join(failed, ", "));
    }

    std::string min_onto_min(Context& ctx) {
      require(ctx.solved.size() == 3 && ctx.covers.size() == 5,
              "earlier criteria did not produce every construction");
      std::size_t maps = 0;
      for (auto const& [name, sol] : ctx.solved) {
        MonoidHom rho(*sol.monoid, sol.problem.base.monoid, sol.rho_map);
        require_report(check_min_ideal_image(rho), fmt::format("rho of {}", name));
        ++maps;
      }
      for (auto const& [name, c] : ctx.covers) {
        auto quotient = rlm(*c.monoid);
        require_report(check_min_ideal_image(quotient.hom), fmt::format("RLM of cover {}", name));
        ++maps;
      }
      return fmt::format("{} maps", maps);
    }

    std::string graham(Context& ctx) {
      require(ctx.simple.size() == 26, "earlier criteria did not produce every simple semigroup");
      std::size_t oracle = 0;
      for (auto const& [name, S] : ctx.simple) {
        auto T = idempotent_generated(S);
        require(is_simple(T), fmt::format("<E({})> is not simple", name));
        if (T.elements.size() <= 60) {
          require(oracle::is_simple(T.monoid, T.elements),
                  fmt::format("<E({})> is not simple by the SxS oracle", name));
          ++oracle;
        }
      }
      return fmt::format("{} semigroups, {} also by the SxS oracle", ctx.simple.size(), oracle);
    }

    std::string s_rank_criterion(Context&) {
      for (auto const& name : {"C2", "C3"}) {
        auto S = named(name);
        for (std::size_t n = 1; n <= 3; ++n) {
          require(r_s(direct_power(S, n), S) == n, fmt::format("r_{}({}^{}) != {}", name, name, n, n));
        }
      }
      require(r_s(cyclic_group(3), cyclic_group(2)) == 0, "r_C2(C3) != 0");

      std::vector<std::pair<std::string, FiniteGroup>> corpus;
      for (auto const& [name, G] : small_group_library()) {
        corpus.emplace_back(name, G);
      }
      for (auto const& name : {"C3xS3", "D9", "C2xA4", "D12", "S4", "C2xC2xC6", "Dic5"}) {
        corpus.emplace_back(name, named(name));
      }
      std::size_t compared = 0, surjections = 0;
      for (auto const& [name, G] : corpus) {
        for (std::uint64_t p = 2; p <= G.size(); ++p) {
          auto S = cyclic_group(p);
          if (!is_simple_group(S)) {
            continue;
          }
          auto fast  = s_rank(G, S);
          auto naive = oracle::s_rank(G, S);
          require(fast.rank == naive.rank && fast.m_s == naive.m_s,
                  fmt::format("{}, S = C{}: rank {} against {}", name, p, fast.rank, naive.rank));
          require(fast.m_s == oracle::elementary_abelian_kernel(G, p),
                  fmt::format("{}, S = C{}: M_S is not the elementary abelian kernel", name, p));
          ++compared;
        }
        for (auto const& N : normal_subgroups(G)) {
          auto q = quotient(G, N);
          for (std::uint64_t p : {2, 3}) {
            require(check_rank_monotone(q.projection, cyclic_group(p)),
                    fmt::format("{} onto a quotient of order {}, S = C{}", name, q.group.size(), p));
            ++surjections;
          }
        }
      }
      return fmt::format("{} groups, {} rank comparisons, {} surjections", corpus.size(), compared,
                         surjections);
    }

    std::string oracle_equivalence(Context&) {
      Rng         rng(2024);
      std::size_t done = 0, total = 0;
      while (done < 200) {
        std::size_t          degree = 1 + uniform(rng, 4);
        std::size_t          count  = 1 + uniform(rng, 3);
        std::vector<Element> gens;
        for (std::size_t g = 0; g < count; ++g) {
          std::vector<Element::value_type> images(degree);
          for (auto& x : images) {
            x = uniform(rng, degree);
          }
          gens.push_back(transformation(std::move(images)));
        }
        std::optional<FiniteMonoid> M;
        try {
          M = transformation_monoid(degree, gens, 100);
        } catch (CapExceeded const&) {
          continue;
        }
        ++done;
        total += M->size();
        auto where = [&] {
          std::vector<std::string> parts;
          for (auto const& g : gens) {
            parts.push_back(M->format(g));
          }
          return fmt::format("monoid {} on {}", done, fmt::join(parts, " "));
        };
        auto gs    = green_structure(*M);
        auto naive = oracle::green(*M);
        auto label = [](Partition const& P, Index x) { return P.classes[P.class_of[x]].front(); };
        for (Index x = 0; x < M->size(); ++x) {
          require(label(gs.r, x) == naive.r[x] && label(gs.l, x) == naive.l[x]
                      && label(gs.j, x) == naive.j[x] && label(gs.h, x) == naive.h[x],
                  where() + ": Green classes differ at " + M->format(x));
          require(omega_power(*M, x) == oracle::omega_power(*M, x),
                  where() + ": omega differs at " + M->format(x));
        }
        require(minimal_ideal(*M).elements == oracle::minimal_ideal(*M),
                where() + ": minimal ideals differ");
      }
      return fmt::format("{} monoids, {} elements", done, total);
    }

    std::string determinism(Context&) {
      auto one_zero = cli::Definitions::parse(kEmbedOneZero, "one_zero.def");
      auto cyclic   = cli::Definitions::parse(kEmbedCyclic, "cyclic.def");
      cli::Options opts;
      std::vector<std::function<Report()>> commands = {
          [&] { return cli::cmd_analyze(one_zero, "Z", opts); },
          [&] { return cli::cmd_cover(named("C2"), "C2", 3, opts); },
          [&] { return cli::cmd_embed(cyclic, "B", "q", opts); },
          [&] { return cli::cmd_srank(named("C2xC2"), named("C2"), "C2xC2", "C2"); }};
      for (std::size_t k = 0; k < commands.size(); ++k) {
        auto first  = commands[k]();
        auto second = commands[k]();
        require(first.trailer() == second.trailer(),
                fmt::format("command {} ({}) is not deterministic", k + 1, first.id()));
        require(Report::parse(first.render()) == first,
                fmt::format("report {} does not round-trip", first.id()));
      }
      return fmt::format("{} commands run twice", commands.size());
    }

    struct Criterion {
      int         number;
      char const* name;
      double      limit;
      std::string (*run)(Context&);
    };

    Criterion const kCriteria[] = {
        {1, "psi_isomorphism", 10, psi_isomorphism},
        {2, "cover_full", 60, cover_full},
        {3, "cover_cheap_s3", 10, cover_cheap},
        {4, "embedding_exhaustive", 300, embedding_exhaustive},
        {5, "mutation_sensitivity", 0, mutation},
        {6, "min_ideal_onto_min_ideal", 0, min_onto_min},
        {7, "graham_property", 0, graham},
        {8, "s_rank", 60, s_rank_criterion},
        {9, "oracle_equivalence", 0, oracle_equivalence},
        {10, "determinism", 0, determinism}};
  }  // namespace

  std::vector<CriterionResult> run(std::function<void(CriterionResult const&)> const& progress) {
    Context                      ctx;
    std::vector<CriterionResult> out;
    for (auto const& c : kCriteria) {
      CriterionResult result{c.number, c.name, false, "", 0, c.limit};
      auto            start = std::chrono::steady_clock::now();
      try {
        result.detail = c.run(ctx);
        result.pass   = true;
      } catch (Failure const& f) {
        result.detail = f.what;
      } catch (std::exception const& e) {
        result.detail = fmt::format("exception: {}", e.what());
      }
      result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (result.pass && c.limit > 0 && result.seconds > c.limit) {
        result.pass   = false;
        result.detail = fmt::format("took {:.1f} s, limit {:.0f} s", result.seconds, c.limit);
      }
      if (progress) {
        progress(result);
      }
      out.push_back(std::move(result));
    }
    return out;
  }

  Report to_report(std::vector<CriterionResult> const& results) {
    Report r("selftest");
    r.set("criteria", results.size());
    for (auto const& c : results) {
      r.add_check(fmt::format("c{:02}_{}", c.number, c.name), c.pass, c.detail);
      r.note(fmt::format("criterion {} took {:.2f} s", c.number, c.seconds));
    }
    return r;
  }

  std::string format_line(CriterionResult const& c) {
    return fmt::format("{} {:>2} {}: {} [{:.2f} s]",
                       c.pass ? "PASS" : "FAIL", c.number, c.name, c.detail, c.seconds);
  }

}  // namespace sgkit::acceptance
