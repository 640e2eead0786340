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

#ifndef SGKIT_SCHUTZENBERGER_HPP_
#define SGKIT_SCHUTZENBERGER_HPP_

#include <optional>
#include <utility>

#include "sgkit/hom.hpp"
#include "sgkit/rees.hpp"
#include "sgkit/row_monomial.hpp"

namespace sgkit {

  //! The right action of M on the set B of L-classes of its minimal ideal.
  struct Rlm {
    //! Transformation monoid of degree |B|, generated by the actions of the
    //! generators of M.
    FiniteMonoid action;
    MonoidHom    hom;
  };

  //! Point b goes to the L-class of eps_b s.
  Rlm rlm(ReesCoordinates const& R);
  Rlm rlm(FiniteMonoid const& M);

  //! The right Schutzenberger representation of M on its minimal ideal, with
  //! values |B| x |B| row-monomial matrices over the maximal subgroup.
  struct SchutzenbergerRep {
    ReesCoordinates rees;
    FiniteMonoid    image;
    MonoidHom       hom;

    //! The matrix of s: row b goes to column L(eps_b s) with entry
    //! e eps_b s e.
    RowMonomialMatrix matrix_of(Index s) const;
  };

  SchutzenbergerRep schutz_rep(ReesCoordinates const& R);
  SchutzenbergerRep schutz_rep(FiniteMonoid const& M);

  //! Two distinct elements of M with the same matrix, if any.
  std::optional<std::pair<Index, Index>> faithfulness_witness(
      SchutzenbergerRep const& rep);

  //! True iff the Schutzenberger representation is injective on M.
  bool is_faithful_on_min_ideal(FiniteMonoid const& M);

  struct FaithfulQuotient {
    FiniteMonoid monoid;
    MonoidHom    hom;
  };

  //! The image of M under its Schutzenberger representation, with the same
  //! generator list.
  FaithfulQuotient schutz_faithful_quotient(FiniteMonoid const& M);

}  // namespace sgkit

#endif  // SGKIT_SCHUTZENBERGER_HPP_
