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

#include "sgkit/isomorphism.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sgkit/error.hpp"

namespace sgkit {

  namespace {
    std::vector<std::size_t> orders(FiniteGroup const& G) {
      std::vector<std::size_t> out(G.size());
      for (Index x = 0; x < G.size(); ++x) {
        out[x] = G.order(x);
      }
      return out;
    }

    // Extends gens[i] -> imgs[i] (i < imgs.size()) to the subgroup generated
    // by those generators. Fails if the extension is not a well-defined
    // injective map.
    bool extend(FiniteGroup const&        G1,
                FiniteGroup const&        G2,
                std::vector<Index> const& gens,
                std::vector<Index> const& imgs,
                std::vector<Index>&       map) {
      std::fill(map.begin(), map.end(), kNoIndex);
      std::vector<bool>  used(G2.size(), false);
      std::vector<Index> queue = {G1.identity()};
      map[G1.identity()]       = G2.identity();
      used[G2.identity()]      = true;
      for (std::size_t k = 0; k < queue.size(); ++k) {
        auto x = queue[k];
        for (std::size_t i = 0; i < imgs.size(); ++i) {
          auto y  = G1.multiply(x, gens[i]);
          auto fy = G2.multiply(map[x], imgs[i]);
          if (map[y] == kNoIndex) {
            if (used[fy]) {
              return false;
            }
            map[y]   = fy;
            used[fy] = true;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::optional<MonoidHom> is_isomorphic(FiniteGroup const& G1,
                                         FiniteGroup const& G2) {
    if (G1.size() > kIsomorphismLimit || G2.size() > kIsomorphismLimit) {
      throw Error(ErrorCode::size_exceeded,
                  fmt::format("isomorphism test limited to {} elements, "
                              "got {} and {}",
                              kIsomorphismLimit,
                              G1.size(),
                              G2.size()));
    }
    if (G1.size() != G2.size()) {
      return std::nullopt;
    }
    auto o1 = orders(G1);
    auto o2 = orders(G2);
    {
      auto s1 = o1, s2 = o2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) {
        return std::nullopt;
      }
    }
    auto const         gens = greedy_generators(G1.monoid());
    std::vector<Index> imgs;
    std::vector<Index> map(G1.size());
    std::vector<Index> next(gens.size() + 1, 0);

    // Depth-first search over image tuples; next[d] is the next candidate
    // to try for generator d.
    std::size_t depth = 0;
    while (true) {
      if (depth == gens.size()) {
        if (extend(G1, G2, gens, imgs, map)
            && std::find(map.begin(), map.end(), kNoIndex) == map.end()) {
          return MonoidHom(G1.monoid(), G2.monoid(), map);
        }
        if (depth == 0) {
          return std::nullopt;
        }
        --depth;
        imgs.pop_back();
        continue;
      }
      bool advanced = false;
      while (next[depth] < G2.size()) {
        Index c = next[depth]++;
        if (o2[c] != o1[gens[depth]]) {
          continue;
        }
        imgs.push_back(c);
        if (extend(G1, G2, gens, imgs, map)) {
          advanced = true;
          break;
        }
        imgs.pop_back();
      }
      if (advanced) {
        ++depth;
        next[depth] = 0;
      } else {
        if (depth == 0) {
          return std::nullopt;
        }
        --depth;
        imgs.pop_back();
      }
    }
  }

}  // namespace sgkit
