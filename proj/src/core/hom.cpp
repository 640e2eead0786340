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

#include "sgkit/hom.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sgkit/error.hpp"

namespace sgkit {

  MonoidHom::MonoidHom(FiniteMonoid       source,
                       FiniteMonoid       target,
                       std::vector<Index> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)) {
    if (_map.size() != _source.size()) {
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("map has {} values, expected {}",
                              _map.size(),
                              _source.size()));
    }
    for (auto v : _map) {
      if (v >= _target.size()) {
        throw Error(ErrorCode::invalid_argument,
                    fmt::format("image index {} out of range", v));
      }
    }
    if (_map[0] != _target.identity()) {
      throw Error(ErrorCode::not_well_defined,
                  "the identity is not sent to the identity");
    }
    auto const& gens = _source.generators();
    for (Index x = 0; x < _source.size(); ++x) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto lhs = _map[_source.right(x, g)];
        auto rhs = _target.multiply(_map[x], _map[gens[g]]);
        if (lhs != rhs) {
          throw Error(
              ErrorCode::not_well_defined,
              fmt::format("image of {} * {} is {} but the product of images "
                          "is {}",
                          _source.format(x),
                          _source.format(gens[g]),
                          _target.format(lhs),
                          _target.format(rhs)));
        }
      }
    }
  }

  MonoidHom hom_from_images(FiniteMonoid const&       source,
                            FiniteMonoid const&       target,
                            std::vector<Index> const& images) {
    if (images.size() != source.generator_count()) {
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("{} images given for {} generators",
                              images.size(),
                              source.generator_count()));
    }
    for (auto v : images) {
      if (v >= target.size()) {
        throw Error(ErrorCode::invalid_argument,
                    fmt::format("image index {} out of range", v));
      }
    }
    std::vector<Index> map(source.size(), target.identity());
    for (Index x = 1; x < source.size(); ++x) {
      map[x] = target.multiply(map[source.parent(x)],
                               images[source.last_letter(x)]);
    }
    // A generator may have been reached first through another word, so its
    // prescribed image has to be compared explicitly.
    auto const& gens = source.generators();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (map[gens[g]] != images[g]) {
        throw Error(ErrorCode::not_well_defined,
                    fmt::format("generator {} has images {} and {}",
                                g + 1,
                                target.format(map[gens[g]]),
                                target.format(images[g])));
      }
    }
    MonoidHom f(source, target, std::move(map));
    if (!respects_products(f)) {
      throw Error(ErrorCode::not_well_defined,
                  "map does not respect products");
    }
    return f;
  }

  MonoidHom hom_from_images(FiniteMonoid const&         source,
                            FiniteMonoid const&         target,
                            std::vector<Element> const& images) {
    std::vector<Index> idx;
    for (auto const& x : images) {
      idx.push_back(target.index_of(x));
    }
    return hom_from_images(source, target, idx);
  }

  bool respects_products(MonoidHom const& f, std::uint64_t seed) {
    auto const& S = f.source();
    auto const& T = f.target();
    auto        n = S.size();
    auto        ok = [&](Index a, Index b) {
      return f(S.multiply(a, b)) == T.multiply(f(a), f(b));
    };
    if (n <= 200) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          if (!ok(a, b)) {
            return false;
          }
        }
      }
      return true;
    }
    Rng rng(seed);
    for (int k = 0; k < 10'000; ++k) {
      auto a = static_cast<Index>(uniform(rng, n));
      auto b = static_cast<Index>(uniform(rng, n));
      if (!ok(a, b)) {
        return false;
      }
    }
    return true;
  }

  MonoidHom identity_hom(FiniteMonoid const& M) {
    std::vector<Index> map(M.size());
    for (Index x = 0; x < M.size(); ++x) {
      map[x] = x;
    }
    return MonoidHom(M, M, std::move(map));
  }

  MonoidHom compose(MonoidHom const& f, MonoidHom const& g) {
    if (!f.target().same_as(g.source())) {
      throw Error(ErrorCode::invalid_argument,
                  "composing maps whose codomain and domain differ");
    }
    std::vector<Index> map(f.source().size());
    for (Index x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return MonoidHom(f.source(), g.target(), std::move(map));
  }

  MonoidHom inverse(MonoidHom const& f) {
    if (!is_injective(f) || !is_surjective(f)) {
      throw Error(ErrorCode::invalid_argument, "map is not bijective");
    }
    std::vector<Index> map(f.target().size());
    for (Index x = 0; x < f.source().size(); ++x) {
      map[f(x)] = x;
    }
    return MonoidHom(f.target(), f.source(), std::move(map));
  }

  std::vector<Index> image(MonoidHom const& f) {
    std::vector<Index> out = f.map();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_surjective(MonoidHom const& f) {
    return image(f).size() == f.target().size();
  }

  bool is_injective(MonoidHom const& f) {
    return image(f).size() == f.source().size();
  }

  std::vector<Index> kernel(MonoidHom const& f) {
    std::vector<Index> out;
    for (Index x = 0; x < f.source().size(); ++x) {
      if (f(x) == f.target().identity()) {
        out.push_back(x);
      }
    }
    return out;
  }

  Section canonical_section(MonoidHom const& alpha) {
    std::vector<Index> map(alpha.target().size(), kNoIndex);
    for (Index h = alpha.source().size(); h-- > 0;) {
      map[alpha(h)] = h;
    }
    map[0] = alpha.source().identity();
    for (Index k = 0; k < map.size(); ++k) {
      if (map[k] == kNoIndex) {
        throw Error(ErrorCode::not_surjective,
                    fmt::format("{} has no preimage",
                                alpha.target().format(k)));
      }
    }
    return Section{alpha, std::move(map)};
  }

  Pullback pullback(MonoidHom const& alpha, MonoidHom const& rho) {
    if (!alpha.target().same_as(rho.target())) {
      throw Error(ErrorCode::invalid_argument,
                  "pullback of maps with different codomains");
    }
    if (!is_surjective(alpha) || !is_surjective(rho)) {
      throw Error(ErrorCode::not_surjective,
                  "pullback needs surjective maps");
    }
    auto const& H  = alpha.source();
    auto const& K1 = rho.source();
    auto        rule = tuple_rule({H.rule(), K1.rule()});
    std::vector<Element> fibre;
    for (Index h = 0; h < H.size(); ++h) {
      for (Index k = 0; k < K1.size(); ++k) {
        if (alpha(h) == rho(k)) {
          Element parts[] = {H.at(h), K1.at(k)};
          fibre.push_back(Element::tuple(parts));
        }
      }
    }
    auto                 full = generate_monoid(fibre, rule, fibre.size());
    std::vector<Element> seeds;
    for (auto g : greedy_generators(full)) {
      seeds.push_back(full.at(g));
    }
    auto P = FiniteGroup::from_monoid(generate_monoid(seeds, rule, fibre.size()));

    std::vector<Index> first(P.size()), second(P.size());
    for (Index x = 0; x < P.size(); ++x) {
      auto parts = P.monoid().at(x).components();
      first[x]   = H.index_of(parts[0]);
      second[x]  = K1.index_of(parts[1]);
    }
    MonoidHom to_first(P.monoid(), H, std::move(first));
    MonoidHom to_second(P.monoid(), K1, std::move(second));
    return Pullback{std::move(P), std::move(to_first), std::move(to_second)};
  }

}  // namespace sgkit
