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

#include "sgkit/embedding.hpp"

#include <algorithm>
#include <memory>
#include <unordered_set>

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/isomorphism.hpp"

namespace sgkit {

  namespace {
    bool is_prime(std::uint64_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    bool idempotent(RowMonomialMatrix const& X) {
      return rm_multiply(X, X) == X;
    }

    RowMonomialMatrix rm_power(RowMonomialMatrix const& X, std::uint64_t k) {
      auto result = RowMonomialMatrix::identity(X.entries(), X.size());
      auto base   = X;
      while (k > 0) {
        if (k & 1) {
          result = rm_multiply(result, base);
        }
        base = rm_multiply(base, base);
        k >>= 1;
      }
      return result;
    }

    std::size_t omega_exponent(RowMonomialMatrix const& X) {
      std::size_t k = 1;
      auto        p = X;
      while (!idempotent(p)) {
        p = rm_multiply(p, X);
        ++k;
      }
      return k;
    }

    RowMonomialMatrix omega(RowMonomialMatrix const& X) {
      return rm_power(X, omega_exponent(X));
    }

    bool single_column(RowMonomialMatrix const& X) {
      return std::all_of(X.rows().begin(), X.rows().end(), [&](auto const& r) {
        return r.column == X.column(0);
      });
    }

    // u is J-equivalent to e (an idempotent of the minimal ideal).
    bool in_minimal_ideal(RowMonomialMatrix const& u, RowMonomialMatrix const& e) {
      auto uw = omega(u);
      return rm_multiply(u, uw) == u
             && omega(rm_multiply(rm_multiply(e, u), e)) == e
             && omega(rm_multiply(rm_multiply(u, e), u)) == uw;
    }

    RowMonomialMatrix apply_section(Section const&           sigma,
                                    FiniteMonoid const&      H,
                                    RowMonomialMatrix const& X) {
      std::vector<RowMonomialMatrix::Row> rows;
      for (auto const& r : X.rows()) {
        rows.push_back({r.column, sigma(r.value)});
      }
      return RowMonomialMatrix(H, std::move(rows));
    }

    struct Ingredients {
      std::vector<Index>             kernel;
      Section                        sigma;
      std::vector<RowMonomialMatrix> sigma_matrices;
    };

    Ingredients ingredients(EmbeddingProblem const& problem) {
      auto        sigma = canonical_section(problem.alpha_base);
      auto const& H     = problem.H.monoid();
      std::vector<RowMonomialMatrix> ms;
      for (auto const& X : problem.base.matrices) {
        ms.push_back(apply_section(sigma, H, X));
      }
      return {kernel(problem.alpha_base), std::move(sigma), std::move(ms)};
    }

    // N^b as diagonal matrices, lexicographic in the order of H with the
    // first diagonal entry most significant.
    std::vector<RowMonomialMatrix> diagonals(FiniteMonoid const&       H,
                                             std::vector<Index> const& N,
                                             std::size_t               b) {
      std::vector<RowMonomialMatrix> out;
      std::vector<std::size_t>       digits(b, 0);
      while (true) {
        std::vector<Index> values(b);
        for (std::size_t i = 0; i < b; ++i) {
          values[i] = N[digits[i]];
        }
        out.push_back(RowMonomialMatrix::diagonal(H, values));
        std::size_t k = b;
        while (k > 0 && ++digits[k - 1] == N.size()) {
          digits[--k] = 0;
        }
        if (k == 0) {
          break;
        }
      }
      return out;
    }

    RulePtr with_identity(RulePtr const& rule, Element identity) {
      auto copy      = std::make_shared<ProductRule>(*rule);
      copy->identity = std::move(identity);
      return copy;
    }
  }  // namespace

  PreparedBase prepare_base(FiniteMonoid const& M) {
    if (M.generator_count() < 2) {
      throw Error(ErrorCode::too_few_generators,
                  fmt::format("the base monoid needs at least two generators, "
                              "it has {}",
                              M.generator_count()));
    }
    auto                     rep = schutz_rep(M);
    FiniteMonoid             B   = M;
    std::optional<MonoidHom> reduction;
    if (faithfulness_witness(rep)) {
      B = rep.image;
      reduction.emplace(rep.hom);
    }
    auto I = minimal_ideal(B);
    auto w = B.word(I.elements.front());
    for (Index g = 0; g < B.generator_count(); ++g) {
      w.push_back(g);
    }
    auto const z  = B.evaluate(w);
    auto const g1 = omega_power(B, B.generators()[0]);
    auto const g2 = omega_power(B, B.generators()[1]);
    auto const f  = omega_power(B, B.multiply(B.multiply(g1, z), g2));

    auto schutz = schutz_rep(rees_coordinates(B, I, f));
    if (faithfulness_witness(schutz)) {
      throw Error(ErrorCode::internal_inconsistency,
                  "the Schutzenberger image is not faithful");
    }
    std::vector<RowMonomialMatrix> matrices;
    for (auto g : B.generators()) {
      matrices.push_back(schutz.matrix_of(g));
    }
    auto m_f = schutz.matrix_of(f);
    for (auto const& r : m_f.rows()) {
      if (r.column != 0 || r.value != schutz.rees.group.identity()) {
        throw Error(ErrorCode::internal_inconsistency,
                    "the matrix of f is not the identity in column 1");
      }
    }
    return PreparedBase{M,
                        std::move(reduction),
                        std::move(B),
                        std::move(w),
                        f,
                        std::move(schutz),
                        std::move(matrices),
                        std::move(m_f)};
  }

  EmbeddingProblem make_embedding_problem(FiniteGroup const&  H,
                                          FiniteGroup const&  K,
                                          MonoidHom const&    alpha,
                                          PreparedBase const& base) {
    if (!alpha.source().same_as(H.monoid()) || !alpha.target().same_as(K.monoid())) {
      throw Error(ErrorCode::invalid_argument, "alpha does not map H to K");
    }
    if (!is_surjective(alpha)) {
      throw Error(ErrorCode::non_surjective_alpha,
                  fmt::format("alpha reaches {} of the {} elements of K",
                              image(alpha).size(),
                              K.size()));
    }
    auto iso = is_isomorphic(K, base.K());
    if (!iso) {
      throw Error(ErrorCode::k_mismatch,
                  fmt::format("K is {} of order {} but the base has maximal "
                              "subgroup {} of order {}",
                              identify_group(K).value_or("unidentified"),
                              K.size(),
                              identify_group(base.K()).value_or("unidentified"),
                              base.K().size()));
    }
    auto alpha_base = compose(alpha, *iso);
    return EmbeddingProblem{H, K, alpha, base, std::move(*iso), std::move(alpha_base)};
  }

  EmbeddingParameters choose_parameters(EmbeddingProblem const& problem,
                                        EmbeddingOptions const& options) {
    auto ing = ingredients(problem);
    EmbeddingParameters P{};
    P.n  = problem.base.monoid.generator_count();
    P.b  = problem.base.b();
    P.nu = ing.kernel.size();
    P.ell = 1;
    for (std::size_t i = 0; i < P.b; ++i) {
      P.ell *= P.nu;
      if (P.ell > options.cap) {
        throw CapExceeded(options.cap, P.ell, "nu^b diagonal matrices");
      }
    }
    P.m              = omega_exponent(ing.sigma_matrices[0]);
    auto const bound = std::max<std::uint64_t>(P.m, P.ell);
    auto allowed     = [&](std::uint64_t p) {
      if (!options.allowed_primes) {
        return true;
      }
      auto const& a = *options.allowed_primes;
      return std::find(a.begin(), a.end(), p) != a.end();
    };
    if (options.prime) {
      auto p = *options.prime;
      if (!is_prime(p) || p <= bound || !allowed(p)) {
        throw Error(ErrorCode::prime_bound_violated,
                    fmt::format("p = {} must be an allowed prime above "
                                "max(m, nu^b) = max({}, {})",
                                p,
                                P.m,
                                P.ell));
      }
      P.p = p;
    } else if (options.allowed_primes) {
      std::optional<std::uint64_t> best;
      for (auto p : *options.allowed_primes) {
        if (is_prime(p) && p > bound && (!best || p < *best)) {
          best = p;
        }
      }
      if (!best) {
        throw Error(ErrorCode::prime_bound_violated,
                    fmt::format("no allowed prime exceeds max(m, nu^b) = "
                                "max({}, {})",
                                P.m,
                                P.ell));
      }
      P.p = *best;
    } else {
      P.p = bound + 1;
      while (!is_prime(P.p)) {
        ++P.p;
      }
    }
    P.r = 1;
    while ((P.r * P.m) % P.p != 1) {
      ++P.r;
    }
    return P;
  }

  std::vector<BlockRowMonomialMatrix> embedding_generators(
      EmbeddingProblem const&    problem,
      EmbeddingParameters const& params) {
    auto        ing  = ingredients(problem);
    auto const& H    = problem.H.monoid();
    auto        diag = diagonals(H, ing.kernel, params.b);
    std::vector<BlockRowMonomialMatrix> gens;
    {
      std::vector<BlockRowMonomialMatrix::Row> rows;
      for (Index i = 0; i < params.p; ++i) {
        rows.push_back({static_cast<Index>((i + 1) % params.p), ing.sigma_matrices[0]});
      }
      gens.emplace_back(std::move(rows));
    }
    for (std::size_t g = 1; g < params.n; ++g) {
      std::vector<BlockRowMonomialMatrix::Row> rows;
      for (std::size_t j = 0; j < params.p; ++j) {
        rows.push_back({0,
                        j < params.ell
                            ? rm_multiply(diag[j], ing.sigma_matrices[g])
                            : ing.sigma_matrices[g]});
      }
      gens.emplace_back(std::move(rows));
    }
    return gens;
  }

  Index EmbeddingSolution::rho_of(RowMonomialMatrix const& u) const {
    auto const b = params.b;
    auto const c = u.column(0) / b;
    std::vector<Element::value_type> code;
    for (std::size_t r = 0; r < b; ++r) {
      if (u.column(r) / b != c) {
        return kNoIndex;
      }
      code.push_back(u.column(r) % b);
      code.push_back(problem.alpha_base(u.value(r)));
    }
    auto i = problem.base.schutz.image.find(Element(ElementKind::row_monomial, code));
    return i ? image_to_base[*i] : kNoIndex;
  }

  Index EmbeddingSolution::theta_of(RowMonomialMatrix const& u) const {
    return u.value(0);
  }

  RowMonomialMatrix EmbeddingSolution::alpha_bar(RowMonomialMatrix const& U) const {
    std::vector<RowMonomialMatrix::Row> rows;
    for (auto const& r : U.rows()) {
      rows.push_back({r.column, problem.alpha_base(r.value)});
    }
    return RowMonomialMatrix(problem.base.K().monoid(), std::move(rows));
  }

  RowMonomialMatrix EmbeddingSolution::eta(Word const& w) const {
    auto u = RowMonomialMatrix::identity(problem.H.monoid(), params.p * params.b);
    for (auto g : w) {
      u = rm_multiply(u, flat_generators.at(g));
    }
    return u;
  }

  EmbeddingSolution assemble_solution(EmbeddingProblem const&             problem,
                                      EmbeddingParameters const&          params,
                                      std::vector<BlockRowMonomialMatrix> generators,
                                      EmbeddingOptions const&             options) {
    auto        ing = ingredients(problem);
    auto const& H   = problem.H.monoid();
    std::vector<RowMonomialMatrix> flat;
    for (auto const& g : generators) {
      flat.push_back(g.flatten());
    }
    auto cycler = rm_power(flat[0], params.m * params.r);

    auto const& base = problem.base;
    std::vector<Index> image_to_base(base.schutz.image.size());
    for (Index x = 0; x < base.monoid.size(); ++x) {
      image_to_base[base.schutz.hom(x)] = x;
    }

    EmbeddingSolution sol{problem,
                          params,
                          ing.kernel,
                          ing.sigma,
                          ing.sigma_matrices,
                          diagonals(H, ing.kernel, params.b),
                          std::move(generators),
                          flat,
                          cycler,
                          cycler,
                          std::nullopt,
                          std::nullopt,
                          {},
                          std::move(image_to_base),
                          std::nullopt,
                          std::nullopt};

    auto eta_w   = sol.eta(base.word);
    sol.e_prime  = omega(rm_multiply(rm_multiply(omega(flat[0]), eta_w), omega(flat[1])));
    auto const n = params.p * params.b;
    auto rule    = row_monomial_rule(H, n);

    std::vector<Element> seeds;
    for (auto const& x : flat) {
      seeds.push_back(x.to_element());
    }
    try {
      sol.monoid.emplace(generate_monoid(seeds, rule, options.cap));
    } catch (CapExceeded const&) {
      if (!options.allow_partial) {
        throw;
      }
    }

    std::vector<Element> group_elements;
    if (sol.monoid) {
      auto const& Mp = *sol.monoid;
      sol.ideal.emplace(minimal_ideal(Mp));
      auto e = Mp.index_of(sol.e_prime.to_element());
      for (auto u : maximal_subgroup_elements(Mp, e)) {
        group_elements.push_back(Mp.at(u));
      }
      sol.rho_map.resize(Mp.size());
      for (Index u = 0; u < Mp.size(); ++u) {
        sol.rho_map[u] = sol.rho_of(RowMonomialMatrix::from_element(H, Mp.at(u)));
      }
    } else {
      // The R-class of e' in the minimal ideal, by right multiplication.
      std::vector<RowMonomialMatrix>               queue = {sol.e_prime};
      std::unordered_set<Element, ElementHash> seen  = {sol.e_prime.to_element()};
      for (std::size_t k = 0; k < queue.size(); ++k) {
        for (auto const& g : flat) {
          auto v  = rm_multiply(queue[k], g);
          auto ve = v.to_element();
          if (!seen.contains(ve)) {
            // At most |H| p b in a genuine solution.
            if (seen.size() >= kDefaultCap) {
              throw CapExceeded(kDefaultCap, seen.size() + 1, "R-class of e'");
            }
            seen.insert(std::move(ve));
            queue.push_back(std::move(v));
          }
        }
      }
      for (auto const& u : queue) {
        auto v = rm_multiply(u, sol.e_prime);
        if (omega(v) == sol.e_prime) {
          group_elements.push_back(v.to_element());
        }
      }
      std::sort(group_elements.begin(), group_elements.end());
      group_elements.erase(std::unique(group_elements.begin(), group_elements.end()),
                           group_elements.end());
    }
    try {
      auto G = FiniteGroup::from_monoid(generate_monoid(
          group_elements, with_identity(rule, sol.e_prime.to_element()), group_elements.size()));
      std::vector<Index> map(G.size());
      for (Index g = 0; g < G.size(); ++g) {
        map[g] = sol.theta_of(RowMonomialMatrix::from_element(H, G.monoid().at(g)));
      }
      sol.g_e.emplace(G);
      sol.theta.emplace(G.monoid(), H, std::move(map));
    } catch (Error const&) {
      // Left empty; verify_embedding reports the failure.
    }
    return sol;
  }

  EmbeddingSolution solve_embedding(EmbeddingProblem const& problem,
                                    EmbeddingOptions const& options) {
    auto params = choose_parameters(problem, options);
    auto sol    = assemble_solution(
        problem, params, embedding_generators(problem, params), options);
    if (!sol.theta || !is_injective(*sol.theta) || !is_surjective(*sol.theta)) {
      throw Error(ErrorCode::internal_inconsistency,
                  "theta is not an isomorphism onto H");
    }
    if (sol.monoid) {
      if (std::find(sol.rho_map.begin(), sol.rho_map.end(), kNoIndex)
          != sol.rho_map.end()) {
        throw Error(ErrorCode::internal_inconsistency,
                    "rho is undefined on some element of M'");
      }
      try {
        MonoidHom(*sol.monoid, problem.base.monoid, sol.rho_map);
      } catch (Error const& e) {
        throw Error(ErrorCode::internal_inconsistency,
                    fmt::format("rho is not a homomorphism: {}", e.what()));
      }
    }
    return sol;
  }

  namespace {
    Word random_word(Rng& rng, std::size_t n, bool full_support) {
      Word w(1 + uniform(rng, 12));
      for (auto& x : w) {
        x = static_cast<Index>(uniform(rng, n));
      }
      if (full_support) {
        Word all(n);
        for (Index g = 0; g < n; ++g) {
          all[g] = g;
        }
        std::shuffle(all.begin(), all.end(), rng);
        w.insert(w.end(), all.begin(), all.end());
      }
      return w;
    }

    std::string word_string(Word const& w) {
      std::string out;
      for (auto g : w) {
        out += fmt::format("{}x{}", out.empty() ? "" : " ", g + 1);
      }
      return out.empty() ? "1" : out;
    }

    // Block row i of a flattened matrix, as a b x b matrix.
    RowMonomialMatrix block_row(RowMonomialMatrix const& u, std::size_t i, std::size_t b) {
      std::vector<RowMonomialMatrix::Row> rows;
      for (std::size_t r = 0; r < b; ++r) {
        rows.push_back({static_cast<Index>(u.column(i * b + r) % b), u.value(i * b + r)});
      }
      return RowMonomialMatrix(u.entries(), std::move(rows));
    }

    bool single_block_column(RowMonomialMatrix const& u, std::size_t b) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u.column(i) / b != u.column(i - i % b) / b) {
          return false;
        }
      }
      for (std::size_t i = b; i < u.size(); i += b) {
        if (u.column(i) / b != u.column(0) / b) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  Report verify_embedding(EmbeddingSolution const& sol,
                          std::size_t              sample,
                          std::uint64_t            seed) {
    auto const& P    = sol.params;
    auto const& prob = sol.problem;
    auto const& base = prob.base;
    auto const& B    = base.monoid;
    auto const& Hm   = prob.H.monoid();
    auto const& R    = base.schutz.rees;
    bool const  full = !sol.partial();
    Rng         rng(seed);

    Report r("embed");
    r.set("n", P.n);
    r.set("b", P.b);
    r.set("nu", P.nu);
    r.set("ell", P.ell);
    r.set("m", P.m);
    r.set("p", static_cast<std::size_t>(P.p));
    r.set("r", static_cast<std::size_t>(P.r));
    r.set("H", prob.H.size());
    r.set("K", prob.K.size());
    r.set("base_size", B.size());
    r.set("base_reduced", base.reduction.has_value());
    r.set("mode", std::string(full ? "full" : "partial"));
    if (full) {
      r.set("closure_size", sol.monoid->size());
      r.set("ideal_size", sol.ideal->elements.size());
    } else {
      r.set("closure_size", std::string("cap exceeded"));
      r.set("sample", sample);
    }
    if (sol.g_e) {
      r.set("g_e_size", sol.g_e->size());
    }

    auto base_matrix = [&](Index x) {
      return RowMonomialMatrix::from_element(R.group.monoid(),
                                             base.schutz.image.at(base.schutz.hom(x)));
    };
    auto element_of = [&](Index u) {
      return RowMonomialMatrix::from_element(Hm, sol.monoid->at(u));
    };
    std::string const sampled = fmt::format("sampled on {} words", sample);

    // e'
    auto const& e = sol.e_prime;
    r.add_check("e_prime_idempotent", idempotent(e));
    {
      bool ok = true;
      if (full) {
        ok = sol.ideal->contains(sol.monoid->index_of(e.to_element()));
      } else {
        for (std::size_t k = 0; k < sample && ok; ++k) {
          auto v = sol.eta(random_word(rng, P.n, false));
          ok     = omega(rm_multiply(rm_multiply(e, v), e)) == e;
        }
      }
      r.add_check("e_prime_in_ideal", ok);
    }
    r.add_check("rho_e_prime_is_f", sol.rho_of(e) == base.f);
    r.add_check("theta_e_prime_is_identity",
                e.column(0) == 0 && e.value(0) == Hm.identity());

    // (1) every block entry U of u satisfies alpha-bar(U) = M_rho(u).
    {
      std::string w;
      auto        lift = [&](RowMonomialMatrix const& u, std::string const& what) {
        auto x = sol.rho_of(u);
        if (x == kNoIndex) {
          w = fmt::format("block row 1 of {} is not a base matrix", what);
          return false;
        }
        auto target = base_matrix(x);
        for (std::size_t i = 0; i < P.p; ++i) {
          if (!(sol.alpha_bar(block_row(u, i, P.b)) == target)) {
            w = fmt::format("block row {} of {} maps to {}, expected {}",
                            i + 1,
                            what,
                            base.schutz.image.format(
                                sol.alpha_bar(block_row(u, i, P.b)).to_element()),
                            base.schutz.image.format(target.to_element()));
            return false;
          }
        }
        return true;
      };
      if (full) {
        for (Index u = 0; u < sol.monoid->size(); ++u) {
          if (!lift(element_of(u), sol.monoid->format(u))) {
            break;
          }
        }
      } else {
        for (std::size_t k = 0; k < sample; ++k) {
          auto word = random_word(rng, P.n, false);
          if (!lift(sol.eta(word), word_string(word))) {
            break;
          }
        }
      }
      r.add_check("block_entries_lift", w.empty(), w);
      if (!full && w.empty()) {
        r.note(fmt::format("block_entries_lift {}", sampled));
      }
    }
    {
      std::string w;
      for (std::size_t g = 0; g < P.n && w.empty(); ++g) {
        if (sol.rho_of(sol.flat_generators[g]) != B.generators()[g]) {
          w = fmt::format("rho(x{}) is not the generator", g + 1);
        }
      }
      r.add_check("rho_on_generators", w.empty(), w);
    }
    std::optional<MonoidHom> rho;
    {
      std::string w;
      if (full) {
        if (std::find(sol.rho_map.begin(), sol.rho_map.end(), kNoIndex)
            != sol.rho_map.end()) {
          w = "rho is undefined somewhere";
        } else {
          try {
            rho.emplace(*sol.monoid, B, sol.rho_map);
          } catch (Error const& err) {
            w = err.what();
          }
        }
      } else {
        for (std::size_t k = 0; k < sample && w.empty(); ++k) {
          auto u  = random_word(rng, P.n, false);
          auto v  = random_word(rng, P.n, false);
          auto uv = u;
          uv.insert(uv.end(), v.begin(), v.end());
          auto ru = sol.rho_of(sol.eta(u)), rv = sol.rho_of(sol.eta(v)),
               ruv = sol.rho_of(sol.eta(uv));
          if (ru == kNoIndex || rv == kNoIndex || ruv != B.multiply(ru, rv)) {
            w = fmt::format("rho({} . {})", word_string(u), word_string(v));
          }
        }
      }
      r.add_check("rho_homomorphism", w.empty(), w);
    }

    // (2) full-support words: single block column and every preimage
    // present.
    {
      std::string w;
      auto        check = [&](RowMonomialMatrix const& u, std::string const& what) {
        if (!single_block_column(u, P.b)) {
          w = fmt::format("{} has blocks in several columns", what);
          return false;
        }
        auto x = sol.rho_of(u);
        if (x == kNoIndex) {
          w = fmt::format("{} has no image under rho", what);
          return false;
        }
        std::vector<Element> blocks;
        for (std::size_t i = 0; i < P.p; ++i) {
          blocks.push_back(block_row(u, i, P.b).to_element());
        }
        std::sort(blocks.begin(), blocks.end());
        auto lifted = apply_section(sol.sigma, Hm, base_matrix(x));
        for (std::size_t j = 0; j < sol.diagonals.size(); ++j) {
          auto pre = rm_multiply(sol.diagonals[j], lifted).to_element();
          if (!std::binary_search(blocks.begin(), blocks.end(), pre)) {
            w = fmt::format("preimage N{} M^sigma of {} is missing", j + 1, what);
            return false;
          }
        }
        return true;
      };
      bool exhaustive = full && P.n <= 16;
      if (exhaustive) {
        auto const&        Mp   = *sol.monoid;
        auto const         all  = (std::size_t{1} << P.n) - 1;
        std::vector<bool>  seen(Mp.size() << P.n, false);
        std::vector<std::pair<Index, std::size_t>> queue = {{0, 0}};
        seen[0] = true;
        std::size_t count = 0;
        for (std::size_t k = 0; k < queue.size() && w.empty(); ++k) {
          auto [u, mask] = queue[k];
          if (mask == all) {
            ++count;
            check(element_of(u), Mp.format(u));
          }
          for (std::size_t g = 0; g < P.n; ++g) {
            auto v     = Mp.right(u, g);
            auto vmask = mask | (std::size_t{1} << g);
            auto key   = (static_cast<std::size_t>(v) << P.n) | vmask;
            if (!seen[key]) {
              seen[key] = true;
              queue.emplace_back(v, vmask);
            }
          }
        }
        if (w.empty()) {
          r.note(fmt::format("full-support check covered {} elements", count));
        }
      } else {
        for (std::size_t k = 0; k < sample && w.empty(); ++k) {
          auto word = random_word(rng, P.n, true);
          check(sol.eta(word), word_string(word));
        }
        r.note(fmt::format("preimages_present {}", sampled));
      }
      r.add_check("preimages_present", w.empty(), w);
    }

    // (3) J' = M' meet the constant-column matrices.
    {
      std::string w;
      if (full) {
        std::vector<Index> constants;
        for (Index u = 0; u < sol.monoid->size(); ++u) {
          if (single_column(element_of(u))) {
            constants.push_back(u);
          }
        }
        if (constants != sol.ideal->elements) {
          w = fmt::format("|J'| = {} but {} elements have one column",
                          sol.ideal->elements.size(),
                          constants.size());
        }
      } else {
        for (std::size_t k = 0; k < sample && w.empty(); ++k) {
          auto word = random_word(rng, P.n, uniform(rng, 2) == 1);
          auto u    = sol.eta(word);
          if (single_column(u) != in_minimal_ideal(u, e)) {
            w = fmt::format("{} disagrees", word_string(word));
          }
        }
        r.note(fmt::format("ideal_is_constant_part {}", sampled));
      }
      r.add_check("ideal_is_constant_part", w.empty(), w);
    }

    // (4) theta
    std::vector<Index> theta_image;
    if (sol.theta) {
      theta_image = image(*sol.theta);
      r.add_check("theta_injective", is_injective(*sol.theta));
      bool onto = is_surjective(*sol.theta);
      r.add_check("theta_surjective",
                  onto,
                  onto ? "" : fmt::format("image has {} of {} elements",
                                          theta_image.size(),
                                          prob.H.size()));
    } else {
      r.add_check("theta_injective", false, "theta is not a homomorphism");
      r.add_check("theta_surjective", false, "theta is not a homomorphism");
    }
    {
      std::vector<bool> hit(Hm.size(), false);
      auto              Cj = RowMonomialMatrix::identity(Hm, P.p * P.b);
      std::string       w;
      for (std::size_t j = 0; j < P.p; ++j) {
        auto v = rm_multiply(rm_multiply(e, Cj), e);
        if (sol.g_e && sol.g_e->monoid().find(v.to_element())) {
          hit[sol.theta_of(v)] = true;
        } else if (w.empty()) {
          w = fmt::format("e' C^{} e' is not in G_e'", j);
        }
        Cj = rm_multiply(Cj, sol.cycler);
      }
      for (auto k : sol.kernel) {
        if (w.empty() && !hit[k]) {
          w = fmt::format("{} is not reached", Hm.format(k));
        }
      }
      r.add_check("cycler_reaches_kernel", w.empty(), w);
    }
    {
      std::string w;
      for (Index k = 0; k < R.group.size() && w.empty(); ++k) {
        if (!std::binary_search(theta_image.begin(), theta_image.end(), sol.sigma(k))) {
          w = fmt::format("sigma({}) is not a theta value", R.group.monoid().format(k));
        }
      }
      r.add_check("section_lifts", w.empty(), w);
    }

    // (5) rho theta^-1 = alpha
    {
      std::string w;
      if (!sol.g_e) {
        w = "no maximal subgroup";
      } else {
        auto const& G = sol.g_e->monoid();
        for (Index g = 0; g < G.size() && w.empty(); ++g) {
          auto u = RowMonomialMatrix::from_element(Hm, G.at(g));
          auto h = sol.theta_of(u);
          if (sol.rho_of(u) != R.group_to_monoid[prob.alpha_base(h)]) {
            w = fmt::format("at theta^-1({})", Hm.format(h));
          }
        }
      }
      r.add_check("rho_theta_inverse_is_alpha", w.empty(), w);
    }

    // (6) minimal ideal and maximal subgroup images
    {
      std::vector<Index> img;
      if (sol.g_e) {
        auto const& G = sol.g_e->monoid();
        for (Index g = 0; g < G.size(); ++g) {
          img.push_back(sol.rho_of(RowMonomialMatrix::from_element(Hm, G.at(g))));
        }
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      auto k = R.group_to_monoid;
      std::sort(k.begin(), k.end());
      r.add_check("rho_group_onto_k", img == k);
    }
    if (rho) {
      auto sub = check_min_ideal_image(*rho);
      r.merge(sub, "rho");
    } else {
      auto reason = full ? std::string("rho is not a homomorphism")
                         : std::string("needs the closure M'");
      r.add_skipped("rho.image_is_minimal_ideal", reason);
      r.add_skipped("rho.maximal_subgroup_images", reason);
    }
    if (base.reduction) {
      if (!rho) {
        r.add_skipped("lift.image_is_minimal_ideal", "rho unavailable");
      } else {
        try {
          auto lift = hom_from_images(
              *sol.monoid, base.original, base.original.generators());
          auto sub = check_min_ideal_image(lift);
          r.merge(sub, "lift");
        } catch (Error const& err) {
          r.add_skipped("lift.image_is_minimal_ideal",
                        fmt::format("rho does not lift: {}", err.what()));
        }
      }
    }
    return r;
  }

}  // namespace sgkit
