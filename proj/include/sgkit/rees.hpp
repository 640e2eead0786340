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

#ifndef SGKIT_REES_HPP_
#define SGKIT_REES_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgkit/green.hpp"

namespace sgkit {

  //! Coordinates (a, g, b) of an element of a minimal ideal. `g` indexes the
  //! elements of ReesCoordinates::group.
  struct ReesTriple {
    Index a;
    Index g;
    Index b;

    friend bool operator==(ReesTriple const&, ReesTriple const&) = default;
  };

  //! Normalised Rees matrix coordinates of the minimal ideal I at an
  //! idempotent e.
  //!
  //! A lists the R-classes of I and B its L-classes, each starting with the
  //! class of e. For every a the idempotent delta_a of R_a meet L_e, and for
  //! every b the idempotent eps_b of R_e meet L_b, are fixed; an element x
  //! in R_a meet L_b then factors uniquely as x = delta_a (e x e) eps_b, and
  //! the sandwich entry C(b, a) is eps_b delta_a. Row b0 and column a0 of C
  //! are the identity e, and e itself has coordinates (a0, 1, b0).
  struct ReesCoordinates {
    FiniteMonoid monoid;
    MinimalIdeal ideal;
    Index        base;

    std::vector<std::vector<Index>> a_classes;
    std::vector<std::vector<Index>> b_classes;
    //! The maximal subgroup eIe as a group on elements of `monoid`.
    FiniteGroup group;
    //! group index -> monoid index and back (kNoIndex off the group).
    std::vector<Index> group_to_monoid;
    std::vector<Index> monoid_to_group;
    //! delta_a and eps_b as monoid indices.
    std::vector<Index> row_reps;
    std::vector<Index> col_reps;
    //! C(b, a) at b * |A| + a, as group indices.
    std::vector<Index> sandwich;
    //! Per monoid index; kNoIndex outside I.
    std::vector<Index> a_of;
    std::vector<Index> b_of;

    std::size_t a_size() const noexcept {
      return a_classes.size();
    }
    std::size_t b_size() const noexcept {
      return b_classes.size();
    }
    Index C(Index b, Index a) const {
      return sandwich.at(b * a_size() + a);
    }

    //! Throws NotInMinimalIdeal.
    ReesTriple coord(Index x) const;
    Index      element_at(ReesTriple const& t) const;
    //! (a, g, b)(a', g', b') = (a, g C(b, a') g', b')
    ReesTriple multiply(ReesTriple const& s, ReesTriple const& t) const;
  };

  //! Throws NotIdempotent or NotInMinimalIdeal.
  ReesCoordinates rees_coordinates(FiniteMonoid const& M,
                                   MinimalIdeal const& I,
                                   Index               e);

  //! rees_coordinates at the least idempotent of the minimal ideal.
  ReesCoordinates rees_coordinates(FiniteMonoid const& M);

  //! Checks coord(xy) = coord(x) coord(y) on all pairs of I when |I| <= 2000,
  //! otherwise on 10 000 random pairs; also checks the normalisation.
  Report verify_rees(ReesCoordinates const& R, std::uint64_t seed = 0);

}  // namespace sgkit

#endif  // SGKIT_REES_HPP_
