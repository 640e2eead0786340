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

#include "sgkit/cover.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/isomorphism.hpp"

namespace sgkit {

  namespace {
    bool constant_column(RowMonomialMatrix const& z, Index column) {
      return std::all_of(z.rows().begin(), z.rows().end(), [&](auto const& r) {
        return r.column == column;
      });
    }

    bool is_idempotent(RowMonomialMatrix const& z) {
      return rm_multiply(z, z) == z;
    }

    // |H|^n n, or nullopt once it passes `limit`.
    std::optional<std::size_t> candidate_bound(std::size_t m,
                                               std::size_t n,
                                               std::size_t limit) {
      std::size_t total = n;
      for (std::size_t i = 0; i < n; ++i) {
        total *= m;
        if (total > limit) {
          return std::nullopt;
        }
      }
      return total;
    }

    std::string describe_candidates(std::size_t m, std::size_t n) {
      return fmt::format("{}^{} * {}", m, n, n);
    }
  }  // namespace

  Index CoverResult::theta_of(RowMonomialMatrix const& z) const {
    if (!constant_column(z, 0)) {
      throw Error(ErrorCode::invalid_argument,
                  "theta is defined on matrices with all entries in column 1");
    }
    return z.value(0);
  }

  CoverResult build_idempotent_cover(FiniteGroup const&  H,
                                     std::size_t         n,
                                     CoverOptions const& options) {
    auto const m     = H.size();
    auto const bound = std::max<std::size_t>(2, 2 * m - 1);
    if (n < bound) {
      throw Error(ErrorCode::n_too_small,
                  fmt::format("n = {} is below max(2, 2|H| - 1) = {}", n, bound));
    }
    if (options.allowed_moduli) {
      auto const& ok = *options.allowed_moduli;
      if (std::find(ok.begin(), ok.end(), n) == ok.end()) {
        throw Error(ErrorCode::modulus_not_allowed,
                    fmt::format("n = {} is not an allowed modulus", n));
      }
    }
    auto const&                         S = H.monoid();
    std::vector<RowMonomialMatrix::Row> xr(n), yr(n);
    for (Index i = 0; i < n; ++i) {
      xr[i] = {static_cast<Index>((i + 1) % n), S.identity()};
      yr[i] = {0, i < m ? i : S.identity()};
    }
    CoverResult c{H,
                  n,
                  options.mode,
                  RowMonomialMatrix(S, std::move(xr)),
                  RowMonomialMatrix(S, std::move(yr)),
                  std::nullopt,
                  std::nullopt,
                  {},
                  std::nullopt};
    if (options.mode == CoverMode::cheap) {
      return c;
    }
    if (!candidate_bound(m, n, options.cap)) {
      throw CapExceeded(options.cap,
                        options.cap + 1,
                        fmt::format("cover candidates {}", describe_candidates(m, n)));
    }
    auto M = generate_monoid(
        {c.x.to_element(), c.y.to_element()}, row_monomial_rule(S, n), options.cap);
    auto I   = minimal_ideal(M);
    auto yi  = M.index_of(c.y.to_element());
    c.g_y    = maximal_subgroup_elements(M, yi);
    auto G   = subgroup_on(M, c.g_y, yi);
    std::vector<Index> map(G.size());
    for (Index g = 0; g < G.size(); ++g) {
      map[g] = G.monoid().at(g).code()[1];
    }
    c.theta.emplace(G.monoid(), S, std::move(map));
    c.monoid.emplace(std::move(M));
    c.ideal.emplace(std::move(I));
    return c;
  }

  std::vector<CoverWitness> cover_idempotent_witnesses(CoverResult const& c) {
    std::vector<CoverWitness> out;
    out.push_back({0, {c.y}, c.y});
    // x^-j = x^(n-j)
    std::vector<RowMonomialMatrix> powers = {
        RowMonomialMatrix::identity(c.x.entries(), c.n)};
    for (std::size_t k = 1; k <= c.n; ++k) {
      powers.push_back(rm_multiply(powers.back(), c.x));
    }
    for (Index j = 1; j < c.group.size(); ++j) {
      auto middle = rm_multiply(rm_multiply(powers[j], c.y), powers[c.n - j]);
      auto z      = rm_multiply(rm_multiply(c.y, middle), c.y);
      out.push_back({j, {c.y, middle, c.y}, z});
    }
    return out;
  }

  Report verify_cover(CoverResult const& c, CoverMode mode) {
    auto const& H = c.group;
    auto const& S = H.monoid();
    auto const  m = H.size();
    Report      r("cover");
    r.set("group_order", m);
    r.set("n", c.n);
    r.set("mode", std::string(mode == CoverMode::full ? "full" : "cheap"));

    // x is invertible of order n.
    {
      auto        id = RowMonomialMatrix::identity(S, c.n);
      auto        p  = c.x;
      std::size_t k  = 1;
      while (!(p == id) && k <= c.n) {
        p = rm_multiply(p, c.x);
        ++k;
      }
      r.add_check("x_order_n", k == c.n, k == c.n ? "" : fmt::format("order {}", k));
    }
    r.add_check("y_idempotent", is_idempotent(c.y));

    auto witnesses = cover_idempotent_witnesses(c);
    {
      std::string w;
      for (auto const& wit : witnesses) {
        for (auto const& f : wit.factors) {
          if (!is_idempotent(f)) {
            w = fmt::format("a factor for h{} is not idempotent", wit.h + 1);
          }
        }
        if (wit.factors.size() == 3) {
          // x^j y x^-j has all entries in column n - j, row i holding
          // the entry of y in row i + j.
          auto const& mid = wit.factors[1];
          auto        j   = wit.h;
          for (Index i = 0; i < c.n && w.empty(); ++i) {
            if (mid.column(i) != c.n - j
                || mid.value(i) != c.y.value((i + j) % c.n)) {
              w = fmt::format("x^{} y x^-{} differs from the closed form", j, j);
            }
          }
        }
        if (!w.empty()) {
          break;
        }
        auto const& z = wit.product;
        if (!constant_column(z, 0) || !(rm_multiply(c.y, z) == z)
            || !(rm_multiply(z, c.y) == z)) {
          w = fmt::format("witness for h{} is not in the H-class of y", wit.h + 1);
          break;
        }
        if (c.theta_of(z) != wit.h) {
          w = fmt::format("theta of the witness for h{} is {}",
                          wit.h + 1,
                          S.format(c.theta_of(z)));
          break;
        }
        if (c.monoid) {
          auto zi = c.monoid->find(z.to_element());
          if (!zi || !std::binary_search(c.g_y.begin(), c.g_y.end(), *zi)) {
            w = fmt::format("witness for h{} is not in G_y", wit.h + 1);
            break;
          }
        }
      }
      r.add_check("witness_images", w.empty(), w);
    }
    {
      std::vector<Index> images;
      for (auto const& wit : witnesses) {
        images.push_back(c.theta_of(wit.product));
      }
      auto generated = FiniteGroup::from_monoid(submonoid(S, images, S.identity()));
      bool ok        = generated.size() == m && is_isomorphic(generated, H);
      r.add_check("witnesses_generate_group", ok);
    }

    if (mode == CoverMode::cheap || !c.monoid) {
      auto reason = c.monoid ? std::string("cheap mode")
                             : fmt::format("closure of M skipped ({} candidates)",
                                           describe_candidates(m, c.n));
      for (auto name : {"ideal_is_constant_part",
                        "theta_isomorphism",
                        "maximal_subgroup_isomorphic",
                        "idempotents_generate_ideal",
                        "idempotent_products_exhaust_group",
                        "graham_simple"}) {
        r.add_skipped(name, reason);
      }
      return r;
    }

    auto const& M = *c.monoid;
    auto const& J = *c.ideal;
    r.set("monoid_size", M.size());
    r.set("ideal_size", J.elements.size());
    r.set("ideal_idempotents", J.idempotents.size());
    r.set("g_y_size", c.g_y.size());

    {
      std::vector<Index> constants;
      for (Index u = 0; u < M.size(); ++u) {
        if (constant_column(RowMonomialMatrix::from_element(S, M.at(u)),
                            M.at(u).code()[0])) {
          constants.push_back(u);
        }
      }
      std::string w;
      if (constants != J.elements) {
        w = fmt::format("|J| = {} but {} elements have a single column",
                        J.elements.size(),
                        constants.size());
      }
      r.add_check("ideal_is_constant_part", w.empty(), w);
    }
    {
      auto const& theta = *c.theta;
      bool        ok    = is_injective(theta) && is_surjective(theta);
      r.add_check("theta_isomorphism",
                  ok,
                  ok ? "" : fmt::format("|G_y| = {}, |H| = {}", c.g_y.size(), m));
      auto G = FiniteGroup::from_monoid(theta.source());
      r.add_check("maximal_subgroup_isomorphic", is_isomorphic(G, H).has_value());
    }
    Subsemigroup whole{M, J.elements};
    auto         gen = idempotent_generated(whole);
    {
      std::string w;
      if (gen.elements != J.elements) {
        w = fmt::format("idempotents generate {} of {} elements",
                        gen.elements.size(),
                        J.elements.size());
      }
      r.add_check("idempotents_generate_ideal", w.empty(), w);
    }
    {
      std::vector<bool> hit(m, false);
      auto const&       theta = *c.theta;
      for (auto u : gen.elements) {
        if (std::binary_search(c.g_y.begin(), c.g_y.end(), u)) {
          hit[theta(theta.source().index_of(M.at(u)))] = true;
        }
      }
      auto count = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
      r.add_check("idempotent_products_exhaust_group",
                  count == m,
                  count == m ? "" : fmt::format("{} of {} elements reached", count, m));
    }
    r.add_check("graham_simple", is_simple(whole) && is_simple(gen));
    return r;
  }

}  // namespace sgkit
