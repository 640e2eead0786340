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

#include "sgkit/rees.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sgkit/detail/scc.hpp"
#include "sgkit/error.hpp"

namespace sgkit {

  namespace {
    // Classes of the partition of I induced by `labels`, with the class of
    // e first and the others by least element.
    std::vector<std::vector<Index>> ordered_classes(std::vector<Index> const& labels,
                                                    Index                     e,
                                                    std::vector<Index>&       class_of) {
      auto P = Partition::from_labels(labels);
      auto c = P.class_of[e];
      std::vector<std::vector<Index>> out;
      out.push_back(P.classes[c]);
      for (Index k = 0; k < P.size(); ++k) {
        if (k != c) {
          out.push_back(P.classes[k]);
        }
      }
      class_of.assign(labels.size(), kNoIndex);
      for (Index k = 0; k < out.size(); ++k) {
        for (auto x : out[k]) {
          class_of[x] = k;
        }
      }
      return out;
    }
  }  // namespace

  ReesTriple ReesCoordinates::coord(Index x) const {
    if (x >= a_of.size() || a_of[x] == kNoIndex) {
      throw Error(ErrorCode::not_in_minimal_ideal,
                  fmt::format("{} is not in the minimal ideal",
                              monoid.format(x)));
    }
    auto g = monoid_to_group[monoid.multiply(monoid.multiply(base, x), base)];
    return {a_of[x], g, b_of[x]};
  }

  Index ReesCoordinates::element_at(ReesTriple const& t) const {
    auto y = monoid.multiply(row_reps.at(t.a), group_to_monoid.at(t.g));
    return monoid.multiply(y, col_reps.at(t.b));
  }

  ReesTriple ReesCoordinates::multiply(ReesTriple const& s,
                                       ReesTriple const& t) const {
    auto g = group.multiply(group.multiply(s.g, C(s.b, t.a)), t.g);
    return {s.a, g, t.b};
  }

  ReesCoordinates rees_coordinates(FiniteMonoid const& M,
                                   MinimalIdeal const& I,
                                   Index               e) {
    if (!M.is_idempotent(e)) {
      throw Error(ErrorCode::not_idempotent,
                  fmt::format("{} is not idempotent", M.format(e)));
    }
    if (!I.contains(e)) {
      throw Error(ErrorCode::not_in_minimal_ideal,
                  fmt::format("{} is not in the minimal ideal", M.format(e)));
    }
    auto right = [&M](Index v, std::vector<Index>& out) {
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        out.push_back(M.right(v, g));
      }
    };
    auto left = [&M](Index v, std::vector<Index>& out) {
      for (std::size_t g = 0; g < M.generator_count(); ++g) {
        out.push_back(M.left(v, g));
      }
    };
    std::vector<Index> a_of, b_of;
    auto a_classes = ordered_classes(
        detail::strongly_connected_components(M.size(), I.elements, right), e, a_of);
    auto b_classes = ordered_classes(
        detail::strongly_connected_components(M.size(), I.elements, left), e, b_of);

    std::vector<Index> members;
    std::vector<Index> row_reps(a_classes.size(), kNoIndex);
    std::vector<Index> col_reps(b_classes.size(), kNoIndex);
    for (auto x : I.elements) {
      if (a_of[x] == 0 && b_of[x] == 0) {
        members.push_back(x);
      }
      if (M.is_idempotent(x)) {
        if (b_of[x] == 0) {
          row_reps[a_of[x]] = x;
        }
        if (a_of[x] == 0) {
          col_reps[b_of[x]] = x;
        }
      }
    }
    for (auto v : row_reps) {
      if (v == kNoIndex) {
        throw Error(ErrorCode::internal_inconsistency,
                    "an H-class of the minimal ideal has no idempotent");
      }
    }
    for (auto v : col_reps) {
      if (v == kNoIndex) {
        throw Error(ErrorCode::internal_inconsistency,
                    "an H-class of the minimal ideal has no idempotent");
      }
    }
    auto G = subgroup_on(M, members, e);

    std::vector<Index> g2m(G.size()), m2g(M.size(), kNoIndex);
    for (Index g = 0; g < G.size(); ++g) {
      g2m[g]      = M.index_of(G.monoid().at(g));
      m2g[g2m[g]] = g;
    }
    std::vector<Index> sandwich(a_classes.size() * b_classes.size());
    for (Index b = 0; b < b_classes.size(); ++b) {
      for (Index a = 0; a < a_classes.size(); ++a) {
        auto c = m2g[M.multiply(col_reps[b], row_reps[a])];
        if (c == kNoIndex) {
          throw Error(ErrorCode::internal_inconsistency,
                      "sandwich entry outside the maximal subgroup");
        }
        sandwich[b * a_classes.size() + a] = c;
      }
    }
    return ReesCoordinates{M,
                           I,
                           e,
                           std::move(a_classes),
                           std::move(b_classes),
                           std::move(G),
                           std::move(g2m),
                           std::move(m2g),
                           std::move(row_reps),
                           std::move(col_reps),
                           std::move(sandwich),
                           std::move(a_of),
                           std::move(b_of)};
  }

  ReesCoordinates rees_coordinates(FiniteMonoid const& M) {
    auto I = minimal_ideal(M);
    auto e = I.idempotents.front();
    return rees_coordinates(M, I, e);
  }

  Report verify_rees(ReesCoordinates const& R, std::uint64_t seed) {
    auto const& M  = R.monoid;
    auto const& el = R.ideal.elements;
    Report      r("rees");
    r.set("A", R.a_size());
    r.set("B", R.b_size());
    r.set("G", R.group.size());
    r.set("I", el.size());

    std::string w;
    for (Index a = 0; a < R.a_size() && w.empty(); ++a) {
      if (R.C(0, a) != R.group.identity()) {
        w = fmt::format("C(b0, {}) is not 1", a);
      }
    }
    for (Index b = 0; b < R.b_size() && w.empty(); ++b) {
      if (R.C(b, 0) != R.group.identity()) {
        w = fmt::format("C({}, a0) is not 1", b);
      }
    }
    r.add_check("normalized", w.empty(), w);
    r.add_check("base_coordinates",
                R.coord(R.base) == ReesTriple{0, R.group.identity(), 0});

    w.clear();
    if (R.a_size() * R.group.size() * R.b_size() != el.size()) {
      w = "|A| |G| |B| differs from |I|";
    }
    for (auto x : el) {
      if (!w.empty()) {
        break;
      }
      if (R.element_at(R.coord(x)) != x) {
        w = fmt::format("{} is not recovered from its coordinates", M.format(x));
      }
    }
    r.add_check("bijective", w.empty(), w);

    w.clear();
    auto check = [&](Index x, Index y) {
      if (R.coord(M.multiply(x, y)) != R.multiply(R.coord(x), R.coord(y))) {
        w = fmt::format("coord({} * {})", M.format(x), M.format(y));
      }
    };
    if (el.size() <= 2000) {
      for (std::size_t i = 0; i < el.size() && w.empty(); ++i) {
        for (std::size_t j = 0; j < el.size() && w.empty(); ++j) {
          check(el[i], el[j]);
        }
      }
    } else {
      Rng rng(seed);
      for (int k = 0; k < 10'000 && w.empty(); ++k) {
        check(el[uniform(rng, el.size())], el[uniform(rng, el.size())]);
      }
      r.note("multiplicativity sampled on 10000 pairs");
    }
    r.add_check("multiplicative", w.empty(), w);
    return r;
  }

}  // namespace sgkit
