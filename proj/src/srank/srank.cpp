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

#include "sgkit/srank.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/isomorphism.hpp"

namespace sgkit {

  namespace {
    void check_size(FiniteGroup const& G) {
      if (G.size() > kNormalSubgroupLimit) {
        throw Error(ErrorCode::size_exceeded,
                    fmt::format("normal subgroup search is limited to {} "
                                "elements, got {}",
                                kNormalSubgroupLimit,
                                G.size()));
      }
    }

    // The product NM of two normal subgroups.
    Subgroup join(FiniteGroup const& G, Subgroup const& N, Subgroup const& M) {
      std::vector<bool> in(G.size(), false);
      for (auto n : N) {
        for (auto m : M) {
          in[G.multiply(n, m)] = true;
        }
      }
      Subgroup out;
      for (Index x = 0; x < G.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    void require_simple(FiniteGroup const& S) {
      if (!is_simple_group(S)) {
        throw Error(ErrorCode::not_simple,
                    fmt::format("the group of order {} is not simple", S.size()));
      }
    }
  }  // namespace

  Subgroup normal_closure(FiniteGroup const& G, std::vector<Index> const& seeds) {
    std::vector<bool>  in(G.size(), false);
    std::vector<Index> members = {G.identity()};
    in[G.identity()]           = true;
    auto add                   = [&](Index x) {
      if (!in[x]) {
        in[x] = true;
        members.push_back(x);
      }
    };
    for (auto s : seeds) {
      for (Index g = 0; g < G.size(); ++g) {
        add(G.multiply(G.multiply(G.inverse(g), s), g));
      }
    }
    // A finite set closed under products and containing 1 is a subgroup; it
    // is normal since the seeds were closed under conjugation.
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t i = 0; i <= k; ++i) {
        add(G.multiply(members[i], members[k]));
        add(G.multiply(members[k], members[i]));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<Subgroup> normal_subgroups(FiniteGroup const& G) {
    check_size(G);
    std::set<Subgroup> closures;
    for (Index x = 0; x < G.size(); ++x) {
      closures.insert(normal_closure(G, {x}));
    }
    std::set<Subgroup>    found = {Subgroup{G.identity()}};
    std::vector<Subgroup> queue = {Subgroup{G.identity()}};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto const& C : closures) {
        auto J = join(G, queue[k], C);
        if (found.insert(J).second) {
          queue.push_back(std::move(J));
        }
      }
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size();
    });
    return out;
  }

  bool is_simple_group(FiniteGroup const& G) {
    return G.size() > 1 && normal_subgroups(G).size() == 2;
  }

  Quotient quotient(FiniteGroup const& G, Subgroup const& N) {
    if (N != normal_closure(G, N)) {
      throw Error(ErrorCode::invalid_argument, "quotient by a non-normal subset");
    }
    std::vector<Index> coset_of(G.size(), kNoIndex);
    std::vector<Index> reps;
    for (Index x = 0; x < G.size(); ++x) {
      if (coset_of[x] != kNoIndex) {
        continue;
      }
      for (auto n : N) {
        coset_of[G.multiply(x, n)] = reps.size();
      }
      reps.push_back(x);
    }
    std::vector<std::vector<Index>> table(reps.size(), std::vector<Index>(reps.size()));
    for (Index i = 0; i < reps.size(); ++i) {
      for (Index j = 0; j < reps.size(); ++j) {
        table[i][j] = coset_of[G.multiply(reps[i], reps[j])];
      }
    }
    auto               Q = group_from_table(table);
    std::vector<Index> map(G.size());
    for (Index x = 0; x < G.size(); ++x) {
      map[x] = Q.monoid().index_of(
          Element(ElementKind::table_index, {coset_of[x]}));
    }
    MonoidHom projection(G.monoid(), Q.monoid(), std::move(map));
    return Quotient{std::move(Q), std::move(coset_of), std::move(reps), std::move(projection)};
  }

  Subgroup m_s(FiniteGroup const& G, FiniteGroup const& S) {
    require_simple(S);
    std::vector<bool> in(G.size(), true);
    for (auto const& N : normal_subgroups(G)) {
      if (N.size() * S.size() != G.size()) {
        continue;
      }
      if (!is_isomorphic(quotient(G, N).group, S)) {
        continue;
      }
      std::vector<bool> here(G.size(), false);
      for (auto x : N) {
        here[x] = true;
      }
      for (Index x = 0; x < G.size(); ++x) {
        in[x] = in[x] && here[x];
      }
    }
    Subgroup out;
    for (Index x = 0; x < G.size(); ++x) {
      if (in[x]) {
        out.push_back(x);
      }
    }
    return out;
  }

  SRankResult s_rank(FiniteGroup const& G, FiniteGroup const& S) {
    auto        M     = m_s(G, S);
    std::size_t index = G.size() / M.size();
    std::size_t k     = 0;
    std::size_t power = 1;
    while (power < index) {
      power *= S.size();
      ++k;
    }
    if (power != index) {
      throw Error(ErrorCode::internal_inconsistency,
                  fmt::format("|G / M_S(G)| = {} is not a power of {}", index, S.size()));
    }
    if (k > 0) {
      auto Q = quotient(G, M);
      if (!is_isomorphic(Q.group, direct_power(S, k))) {
        throw Error(ErrorCode::internal_inconsistency,
                    fmt::format("G / M_S(G) is not isomorphic to S^{}", k));
      }
    }
    return {G, S, std::move(M), k};
  }

  std::size_t r_s(FiniteGroup const& G, FiniteGroup const& S) {
    return s_rank(G, S).rank;
  }

  bool check_rank_monotone(MonoidHom const& phi, FiniteGroup const& S) {
    if (!is_surjective(phi)) {
      throw Error(ErrorCode::not_surjective, "rank comparison needs a surjection");
    }
    auto G = FiniteGroup::from_monoid(phi.source());
    auto H = FiniteGroup::from_monoid(phi.target());
    return r_s(H, S) <= r_s(G, S);
  }

}  // namespace sgkit
