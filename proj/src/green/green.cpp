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

#include "sgkit/green.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "sgkit/detail/scc.hpp"
#include "sgkit/error.hpp"

namespace sgkit {

  namespace {
    std::vector<Index> all_indices(std::size_t n) {
      std::vector<Index> v(n);
      for (Index i = 0; i < n; ++i) {
        v[i] = i;
      }
      return v;
    }

    auto right_neighbours(FiniteMonoid const& M) {
      return [&M](Index v, std::vector<Index>& out) {
        for (std::size_t g = 0; g < M.generator_count(); ++g) {
          out.push_back(M.right(v, g));
        }
      };
    }

    auto left_neighbours(FiniteMonoid const& M) {
      return [&M](Index v, std::vector<Index>& out) {
        for (std::size_t g = 0; g < M.generator_count(); ++g) {
          out.push_back(M.left(v, g));
        }
      };
    }

    auto both_neighbours(FiniteMonoid const& M) {
      return [&M](Index v, std::vector<Index>& out) {
        for (std::size_t g = 0; g < M.generator_count(); ++g) {
          out.push_back(M.right(v, g));
          out.push_back(M.left(v, g));
        }
      };
    }

    template <typename Neighbours>
    ClassOrder condensed_order(FiniteMonoid const& M,
                               Partition const&    P,
                               Neighbours&&        neighbours) {
      std::vector<std::vector<Index>> below(P.size());
      std::vector<Index>              out;
      for (Index x = 0; x < M.size(); ++x) {
        out.clear();
        neighbours(x, out);
        auto c = P.class_of[x];
        for (auto y : out) {
          if (P.class_of[y] != c) {
            below[c].push_back(P.class_of[y]);
          }
        }
      }
      for (auto& b : below) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
      }
      return ClassOrder(std::move(below));
    }

    template <typename Neighbours>
    std::vector<Index> reachable(FiniteMonoid const& M,
                                 Index               x,
                                 Neighbours&&        neighbours) {
      std::vector<bool>  seen(M.size(), false);
      std::vector<Index> queue = {x}, out;
      seen[x]                  = true;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        out.clear();
        neighbours(queue[k], out);
        for (auto y : out) {
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      return queue;
    }

    bool sorted_contains(std::vector<Index> const& v, Index x) {
      return std::binary_search(v.begin(), v.end(), x);
    }
  }  // namespace

  Partition Partition::from_labels(std::vector<Index> const& labels) {
    Partition                 P;
    std::map<Index, Index>    renumber;
    P.class_of.assign(labels.size(), kNoIndex);
    for (Index x = 0; x < labels.size(); ++x) {
      if (labels[x] == kNoIndex) {
        continue;
      }
      auto [it, fresh] = renumber.emplace(labels[x], P.classes.size());
      if (fresh) {
        P.classes.emplace_back();
      }
      P.class_of[x] = it->second;
      P.classes[it->second].push_back(x);
    }
    return P;
  }

  bool ClassOrder::leq(Index c, Index d) const {
    if (c == d) {
      return true;
    }
    std::vector<bool>  seen(_below.size(), false);
    std::vector<Index> stack = {d};
    seen[d]                  = true;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : _below[x]) {
        if (y == c) {
          return true;
        }
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
    return false;
  }

  GreenStructure green_structure(FiniteMonoid const& M) {
    auto const     all = all_indices(M.size());
    GreenStructure G{M, {}, {}, {}, {}, {}, {}, {}};
    G.r = Partition::from_labels(
        detail::strongly_connected_components(M.size(), all, right_neighbours(M)));
    G.l = Partition::from_labels(
        detail::strongly_connected_components(M.size(), all, left_neighbours(M)));
    G.j = Partition::from_labels(
        detail::strongly_connected_components(M.size(), all, both_neighbours(M)));

    std::map<std::pair<Index, Index>, Index> pairs;
    std::vector<Index>                       h(M.size());
    for (Index x = 0; x < M.size(); ++x) {
      auto key = std::make_pair(G.r.class_of[x], G.l.class_of[x]);
      h[x]     = pairs.emplace(key, pairs.size()).first->second;
    }
    G.h = Partition::from_labels(h);

    G.r_order = condensed_order(M, G.r, right_neighbours(M));
    G.l_order = condensed_order(M, G.l, left_neighbours(M));
    G.j_order = condensed_order(M, G.j, both_neighbours(M));
    return G;
  }

  bool MinimalIdeal::contains(Index x) const {
    return sorted_contains(elements, x);
  }

  MinimalIdeal minimal_ideal(FiniteMonoid const& M) {
    auto comp = detail::strongly_connected_components(
        M.size(), all_indices(M.size()), both_neighbours(M));
    MinimalIdeal I;
    // Tarjan completes a sink component first.
    for (Index x = 0; x < M.size(); ++x) {
      if (comp[x] == 0) {
        I.elements.push_back(x);
        if (M.is_idempotent(x)) {
          I.idempotents.push_back(x);
        }
      }
    }
    for (auto x : I.elements) {
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        if (comp[M.right(x, g)] != 0 || comp[M.left(x, g)] != 0) {
          throw Error(ErrorCode::internal_inconsistency,
                      fmt::format("minimal ideal is not closed at {}",
                                  M.format(x)));
        }
      }
    }
    if (I.idempotents.empty()) {
      throw Error(ErrorCode::internal_inconsistency,
                  "minimal ideal without idempotents");
    }
    return I;
  }

  std::vector<Index> right_ideal(FiniteMonoid const& M, Index x) {
    return reachable(M, x, right_neighbours(M));
  }

  std::vector<Index> left_ideal(FiniteMonoid const& M, Index x) {
    return reachable(M, x, left_neighbours(M));
  }

  std::vector<Index> maximal_subgroup_elements(FiniteMonoid const& M, Index e) {
    if (!M.is_idempotent(e)) {
      throw Error(ErrorCode::not_idempotent,
                  fmt::format("{} is not idempotent", M.format(e)));
    }
    std::vector<Index> out;
    for (auto y : right_ideal(M, e)) {
      auto u = M.multiply(y, e);
      if (omega_power(M, u) == e) {
        out.push_back(u);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  FiniteGroup subgroup_on(FiniteMonoid const&       M,
                          std::vector<Index> const& members,
                          Index                     e) {
    std::vector<Index> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool>  in(sorted.size(), false);
    std::vector<Index> gens;
    auto pos = [&](Index x) -> std::size_t {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      if (it == sorted.end() || *it != x) {
        throw Error(ErrorCode::not_closed,
                    fmt::format("{} lies outside the subgroup", M.format(x)));
      }
      return it - sorted.begin();
    };
    std::vector<Index> reached = {e};
    in[pos(e)]                 = true;
    for (auto x : sorted) {
      if (in[pos(x)]) {
        continue;
      }
      gens.push_back(x);
      // Regenerate from everything reached so far times all generators.
      for (std::size_t k = 0; k < reached.size(); ++k) {
        for (auto g : gens) {
          auto z = M.multiply(reached[k], g);
          if (!in[pos(z)]) {
            in[pos(z)] = true;
            reached.push_back(z);
          }
        }
      }
    }
    auto G = FiniteGroup::from_monoid(submonoid(M, gens, e));
    if (G.size() != sorted.size()) {
      throw Error(ErrorCode::internal_inconsistency,
                  fmt::format("subgroup has {} elements, expected {}",
                              G.size(),
                              sorted.size()));
    }
    return G;
  }

  FiniteGroup maximal_subgroup(FiniteMonoid const& M, Index e) {
    auto members = maximal_subgroup_elements(M, e);
    auto I       = minimal_ideal(M);
    if (I.contains(e)) {
      std::vector<Index> eIe;
      for (auto x : I.elements) {
        eIe.push_back(M.multiply(M.multiply(e, x), e));
      }
      std::sort(eIe.begin(), eIe.end());
      eIe.erase(std::unique(eIe.begin(), eIe.end()), eIe.end());
      if (eIe != members) {
        throw Error(ErrorCode::internal_inconsistency,
                    fmt::format("eIe has {} elements but the maximal subgroup "
                                "at {} has {}",
                                eIe.size(),
                                M.format(e),
                                members.size()));
      }
    }
    return subgroup_on(M, members, e);
  }

  bool Subsemigroup::contains(Index x) const {
    return sorted_contains(elements, x);
  }

  void check_closed(Subsemigroup const& S, std::uint64_t seed) {
    auto const& M  = S.monoid;
    auto const& el = S.elements;
    auto        check = [&](Index x, Index y) {
      auto z = M.multiply(x, y);
      if (!S.contains(z)) {
        throw Error(ErrorCode::not_closed,
                    fmt::format("{} * {} = {} is outside the subsemigroup",
                                M.format(x),
                                M.format(y),
                                M.format(z)));
      }
    };
    if (el.size() <= 2000) {
      for (auto x : el) {
        for (auto y : el) {
          check(x, y);
        }
      }
      return;
    }
    Rng rng(seed);
    for (int k = 0; k < 10'000; ++k) {
      check(el[uniform(rng, el.size())], el[uniform(rng, el.size())]);
    }
  }

  bool is_simple(Subsemigroup const& S) {
    if (S.elements.empty()) {
      throw Error(ErrorCode::invalid_argument, "empty subsemigroup");
    }
    check_closed(S);
    auto const& M  = S.monoid;
    auto const  e0 = omega_power(M, S.elements[0]);
    for (auto x : S.elements) {
      auto xw = omega_power(M, x);
      if (M.multiply(x, xw) != x) {
        return false;
      }
      if (omega_power(M, M.multiply(M.multiply(e0, x), e0)) != e0) {
        return false;
      }
      if (omega_power(M, M.multiply(M.multiply(x, e0), x)) != xw) {
        return false;
      }
    }
    return true;
  }

  Subsemigroup idempotent_generated(Subsemigroup const& S) {
    auto const&        M = S.monoid;
    std::vector<Index> E;
    for (auto x : S.elements) {
      if (M.is_idempotent(x)) {
        E.push_back(x);
      }
    }
    if (E.empty()) {
      throw Error(ErrorCode::no_idempotents, "subsemigroup has no idempotents");
    }
    std::vector<bool>  seen(M.size(), false);
    std::vector<Index> queue = E;
    for (auto e : E) {
      seen[e] = true;
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (auto e : E) {
        auto z = M.multiply(queue[k], e);
        if (!seen[z]) {
          seen[z] = true;
          queue.push_back(z);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return Subsemigroup{M, std::move(queue)};
  }

  Report check_min_ideal_image(MonoidHom const& phi) {
    if (!is_surjective(phi)) {
      throw Error(ErrorCode::not_surjective,
                  "check_min_ideal_image needs a surjective map");
    }
    auto const& S  = phi.source();
    auto const& T  = phi.target();
    auto        I  = minimal_ideal(S);
    auto        J  = minimal_ideal(T);
    auto        GS = green_structure(S);
    auto        GT = green_structure(T);

    Report r("min_ideal_image");
    r.set("source_size", S.size());
    r.set("target_size", T.size());
    r.set("source_ideal_size", I.elements.size());
    r.set("target_ideal_size", J.elements.size());
    r.set("idempotents", I.idempotents.size());

    std::vector<Index> img;
    for (auto x : I.elements) {
      img.push_back(phi(x));
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    std::string witness;
    if (img != J.elements) {
      for (auto y : img) {
        if (!J.contains(y)) {
          witness = fmt::format("{} in image but not in J", T.format(y));
          break;
        }
      }
      if (witness.empty()) {
        for (auto y : J.elements) {
          if (!sorted_contains(img, y)) {
            witness = fmt::format("{} in J but not in image", T.format(y));
            break;
          }
        }
      }
    }
    r.add_check("image_is_minimal_ideal", witness.empty(), witness);

    witness.clear();
    for (auto e : I.idempotents) {
      std::vector<Index> hs;
      for (auto x : GS.h.classes[GS.h.class_of[e]]) {
        hs.push_back(phi(x));
      }
      std::sort(hs.begin(), hs.end());
      hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
      auto const& ht = GT.h.classes[GT.h.class_of[phi(e)]];
      if (hs != ht) {
        witness = fmt::format("at {}: image has {} elements, G_phi(e) has {}",
                              S.format(e),
                              hs.size(),
                              ht.size());
        break;
      }
    }
    r.add_check("maximal_subgroup_images", witness.empty(), witness);
    return r;
  }

}  // namespace sgkit
