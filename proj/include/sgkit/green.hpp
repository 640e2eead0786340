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

#ifndef SGKIT_GREEN_HPP_
#define SGKIT_GREEN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"
#include "sgkit/monoid.hpp"
#include "sgkit/report.hpp"

namespace sgkit {

  //! A partition of (part of) the element set of a monoid. Classes are sorted
  //! and listed by least element.
  struct Partition {
    //! Class number of each element, kNoIndex for elements not covered.
    std::vector<Index>              class_of;
    std::vector<std::vector<Index>> classes;

    std::size_t size() const noexcept {
      return classes.size();
    }
    bool same(Index x, Index y) const {
      return class_of.at(x) == class_of.at(y);
    }

    //! Builds the partition from arbitrary class labels (kNoIndex =
    //! uncovered).
    static Partition from_labels(std::vector<Index> const& labels);
  };

  //! A preorder on the classes of a partition, stored as the covering edges
  //! of the condensed Cayley graph.
  class ClassOrder {
   public:
    ClassOrder() = default;
    explicit ClassOrder(std::vector<std::vector<Index>> below)
        : _below(std::move(below)) {}

    //! True iff class `c` lies below (or equals) class `d`.
    bool leq(Index c, Index d) const;
    //! Classes directly below `c` (not necessarily covers).
    std::vector<Index> const& below(Index c) const {
      return _below.at(c);
    }

   private:
    std::vector<std::vector<Index>> _below;
  };

  struct GreenStructure {
    FiniteMonoid monoid;
    Partition    r, l, j, h;
    ClassOrder   r_order, l_order, j_order;
  };

  //! R-, L- and J-classes are the strongly connected components of the
  //! right, left and two-sided Cayley graphs; H = R meet L.
  GreenStructure green_structure(FiniteMonoid const& M);

  struct MinimalIdeal {
    //! Sorted.
    std::vector<Index> elements;
    //! Sorted.
    std::vector<Index> idempotents;

    bool contains(Index x) const;
  };

  //! The least J-class: the unique sink component of the two-sided Cayley
  //! graph. Checks that no product leaves it.
  MinimalIdeal minimal_ideal(FiniteMonoid const& M);

  //! Elements reachable from `x` in the right (resp. left) Cayley graph,
  //! that is xM (resp. Mx), sorted.
  std::vector<Index> right_ideal(FiniteMonoid const& M, Index x);
  std::vector<Index> left_ideal(FiniteMonoid const& M, Index x);

  //! The group of units of eMe, as a group on elements of M with identity e.
  //! When e lies in the minimal ideal the result is compared with eIe.
  //! Throws NotIdempotent.
  FiniteGroup maximal_subgroup(FiniteMonoid const& M, Index e);

  //! The sorted element indices of the maximal subgroup at `e`, without
  //! building the group.
  std::vector<Index> maximal_subgroup_elements(FiniteMonoid const& M, Index e);

  //! Group on the given elements of M (closed under the product, with `e`
  //! as identity).
  FiniteGroup subgroup_on(FiniteMonoid const&       M,
                          std::vector<Index> const& members,
                          Index                     e);

  //! A subsemigroup of a finite monoid, as a sorted list of indices.
  struct Subsemigroup {
    FiniteMonoid       monoid;
    std::vector<Index> elements;

    bool contains(Index x) const;
  };

  //! Throws NotClosed unless S is closed: checked exhaustively for
  //! |S| <= 2000 and on 10 000 random pairs otherwise.
  void check_closed(Subsemigroup const& S, std::uint64_t seed = 0);

  //! True iff SxS = S for every x in S. Decided via: S is a union of groups,
  //! and for a fixed idempotent e0 and every x, (e0 x e0)^w = e0 and
  //! (x e0 x)^w = x^w. Throws NotClosed.
  bool is_simple(Subsemigroup const& S);

  //! The subsemigroup generated by the idempotents of S. Throws NoIdempotents
  //! if S has none.
  Subsemigroup idempotent_generated(Subsemigroup const& S);

  //! Checks phi(I) = J and phi(G_e) = G_phi(e) for every idempotent e of the
  //! minimal ideal I of the source, J that of the target. Throws
  //! NotSurjective.
  Report check_min_ideal_image(MonoidHom const& phi);

}  // namespace sgkit

#endif  // SGKIT_GREEN_HPP_
