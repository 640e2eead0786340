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

#include "sgkit/wreath.hpp"

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/isomorphism.hpp"

namespace sgkit {

  ConstantWreath constant_wreath(FiniteGroup const& G,
                                 std::size_t        degree,
                                 std::size_t        cap) {
    if (degree == 0) {
      throw Error(ErrorCode::invalid_argument, "wreath product over no points");
    }
    std::size_t expected = degree;
    for (std::size_t i = 0; i < degree; ++i) {
      expected *= G.size();
      if (expected > cap) {
        throw CapExceeded(cap, expected, "constant wreath product");
      }
    }
    auto const&          S = G.monoid();
    std::vector<Element> seeds;
    // (f, 0-bar) for every f, then (1, b-bar) for every b.
    std::vector<Index> f(degree, 0);
    while (true) {
      std::vector<RowMonomialMatrix::Row> rows(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        rows[i] = {0, f[i]};
      }
      seeds.push_back(RowMonomialMatrix(S, std::move(rows)).to_element());
      std::size_t k = 0;
      while (k < degree && ++f[k] == G.size()) {
        f[k++] = 0;
      }
      if (k == degree) {
        break;
      }
    }
    for (Index b = 1; b < degree; ++b) {
      seeds.push_back(
          RowMonomialMatrix::constant_column(S, degree, b, S.identity()).to_element());
    }
    auto M = generate_monoid(seeds, row_monomial_rule(S, degree), cap + 1);

    Subsemigroup simple{M, {}};
    for (Index x = 0; x < M.size(); ++x) {
      auto const& code = M.at(x).code();
      bool        constant = true;
      for (std::size_t i = 2; i < code.size(); i += 2) {
        constant = constant && code[i] == code[0];
      }
      if (constant) {
        simple.elements.push_back(x);
      }
    }
    if (simple.elements.size() != expected) {
      throw Error(ErrorCode::internal_inconsistency,
                  fmt::format("wreath product has {} constant-column elements, "
                              "expected {}",
                              simple.elements.size(),
                              expected));
    }
    if (!is_simple(simple)) {
      throw Error(ErrorCode::internal_inconsistency,
                  "constant wreath product is not simple");
    }
    for (auto e : simple.elements) {
      if (!M.is_idempotent(e)) {
        continue;
      }
      auto H = subgroup_on(M, maximal_subgroup_elements(M, e), e);
      if (!is_isomorphic(H, G)) {
        throw Error(ErrorCode::internal_inconsistency,
                    fmt::format("maximal subgroup at {} is not isomorphic to G",
                                M.format(e)));
      }
    }
    return ConstantWreath{G, degree, std::move(M), std::move(simple)};
  }

  Index psi(ConstantWreath const& W, Index e, Index s) {
    auto const& M = W.monoid;
    if (!M.is_idempotent(e)) {
      throw Error(ErrorCode::not_idempotent,
                  fmt::format("{} is not idempotent", M.format(e)));
    }
    if (!W.simple_part.contains(e)) {
      throw Error(ErrorCode::not_in_local_monoid,
                  fmt::format("{} is not in the simple part", M.format(e)));
    }
    if (M.multiply(M.multiply(e, s), e) != s) {
      throw Error(ErrorCode::not_in_local_monoid,
                  fmt::format("{} is not in eSe for e = {}",
                              M.format(s),
                              M.format(e)));
    }
    auto const& code = M.at(s).code();
    auto        b    = code[0];
    return code[2 * b + 1];
  }

}  // namespace sgkit
