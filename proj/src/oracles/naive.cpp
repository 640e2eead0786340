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

#include "sgkit/oracles.hpp"

#include <algorithm>
#include <map>

namespace sgkit::oracle {

  namespace {
    using Set = std::set<Index>;

    std::vector<Index> labels_from(std::vector<Set> const& key) {
      std::map<Set, Index> first;
      std::vector<Index>   out(key.size());
      for (Index x = 0; x < key.size(); ++x) {
        out[x] = first.emplace(key[x], x).first->second;
      }
      return out;
    }

    Index power(FiniteMonoid const& M, Index x, std::uint64_t k) {
      Index y = M.identity();
      for (std::uint64_t i = 0; i < k; ++i) {
        y = M.multiply(y, x);
      }
      return y;
    }

    std::vector<Index> subgroup_closure(FiniteGroup const& G, std::vector<Index> seeds) {
      std::vector<bool> in(G.size(), false);
      in[G.identity()] = true;
      bool grew        = true;
      for (auto s : seeds) {
        in[s] = true;
      }
      while (grew) {
        grew = false;
        for (Index x = 0; x < G.size(); ++x) {
          for (Index y = 0; y < G.size(); ++y) {
            if (in[x] && in[y] && !in[G.multiply(x, y)]) {
              in[G.multiply(x, y)] = true;
              grew                 = true;
            }
          }
        }
      }
      std::vector<Index> out;
      for (Index x = 0; x < G.size(); ++x) {
        if (in[x]) {
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  NaiveGreen green(FiniteMonoid const& M) {
    std::size_t      n = M.size();
    std::vector<Set> right(n), left(n), both(n), rl(n);
    for (Index x = 0; x < n; ++x) {
      for (Index s = 0; s < n; ++s) {
        right[x].insert(M.multiply(x, s));
        left[x].insert(M.multiply(s, x));
        for (Index t = 0; t < n; ++t) {
          both[x].insert(M.multiply(M.multiply(s, x), t));
        }
      }
    }
    NaiveGreen out{labels_from(right), labels_from(left), labels_from(both), {}};
    for (Index x = 0; x < n; ++x) {
      rl[x] = {out.r[x], out.l[x] + static_cast<Index>(n)};
    }
    out.h = labels_from(rl);
    return out;
  }

  std::vector<Index> minimal_ideal(FiniteMonoid const& M) {
    std::vector<bool> in(M.size(), true);
    for (Index x = 0; x < M.size(); ++x) {
      std::vector<bool> here(M.size(), false);
      for (Index s = 0; s < M.size(); ++s) {
        for (Index t = 0; t < M.size(); ++t) {
          here[M.multiply(M.multiply(s, x), t)] = true;
        }
      }
      for (Index y = 0; y < M.size(); ++y) {
        in[y] = in[y] && here[y];
      }
    }
    std::vector<Index> out;
    for (Index y = 0; y < M.size(); ++y) {
      if (in[y]) {
        out.push_back(y);
      }
    }
    return out;
  }

  Index omega_power(FiniteMonoid const& M, Index x) {
    Index found = kNoIndex;
    for (std::uint64_t k = 1; k <= M.size(); ++k) {
      Index y = power(M, x, k);
      if (M.multiply(y, y) == y) {
        if (found != kNoIndex && found != y) {
          return kNoIndex;
        }
        found = y;
      }
    }
    return found;
  }

  std::set<Element> closure(std::vector<Element> const& seeds, RulePtr const& rule) {
    std::set<Element> out(seeds.begin(), seeds.end());
    out.insert(rule->identity);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Element> now(out.begin(), out.end());
      for (auto const& x : now) {
        for (auto const& y : now) {
          grew = out.insert(rule->multiply(x, y)).second || grew;
        }
      }
    }
    return out;
  }

  bool is_simple(FiniteMonoid const& M, std::vector<Index> const& S) {
    Set whole(S.begin(), S.end());
    for (auto x : S) {
      Set here;
      for (auto s : S) {
        for (auto t : S) {
          here.insert(M.multiply(M.multiply(s, x), t));
        }
      }
      if (here != whole) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::vector<Index>> homomorphisms(FiniteGroup const& G, FiniteGroup const& H) {
    auto const&                     gens = G.monoid().generators();
    std::vector<std::vector<Index>> out;
    std::vector<Index>              images(gens.size(), 0);
    while (true) {
      // Extend along all words; a clash means the assignment is not a hom.
      std::vector<Index> map(G.size(), kNoIndex);
      std::vector<Index> queue = {G.identity()};
      map[G.identity()]        = H.identity();
      bool ok                  = true;
      for (std::size_t k = 0; k < queue.size() && ok; ++k) {
        Index g = queue[k];
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Index gx = G.multiply(g, gens[i]);
          Index hx = H.multiply(map[g], images[i]);
          if (map[gx] == kNoIndex) {
            map[gx] = hx;
            queue.push_back(gx);
          } else if (map[gx] != hx) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        out.push_back(std::move(map));
      }
      std::size_t i = 0;
      while (i < images.size() && ++images[i] == H.size()) {
        images[i++] = 0;
      }
      if (i == images.size()) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  NaiveRank s_rank(FiniteGroup const& G, FiniteGroup const& S) {
    std::vector<std::vector<Index>> onto;
    for (auto& f : homomorphisms(G, S)) {
      if (Set(f.begin(), f.end()).size() == S.size()) {
        onto.push_back(std::move(f));
      }
    }
    NaiveRank out;
    std::set<std::vector<Index>> image;
    for (Index g = 0; g < G.size(); ++g) {
      std::vector<Index> tuple;
      bool               in_kernel = true;
      for (auto const& f : onto) {
        tuple.push_back(f[g]);
        in_kernel = in_kernel && f[g] == S.identity();
      }
      if (in_kernel) {
        out.m_s.push_back(g);
      }
      image.insert(std::move(tuple));
    }
    out.rank       = 0;
    std::size_t sz = image.size();
    while (sz > 1 && sz % S.size() == 0) {
      sz /= S.size();
      ++out.rank;
    }
    if (sz != 1) {
      out.rank = kNoIndex;
    }
    return out;
  }

  std::vector<Index> elementary_abelian_kernel(FiniteGroup const& G, std::uint64_t p) {
    std::vector<Index> seeds;
    for (Index x = 0; x < G.size(); ++x) {
      seeds.push_back(power(G.monoid(), x, p));
      for (Index y = 0; y < G.size(); ++y) {
        seeds.push_back(G.multiply(G.multiply(G.inverse(x), G.inverse(y)), G.multiply(x, y)));
      }
    }
    return subgroup_closure(G, std::move(seeds));
  }

}  // namespace sgkit::oracle
