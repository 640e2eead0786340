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

#ifndef SGKIT_COVER_HPP_
#define SGKIT_COVER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sgkit/green.hpp"
#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"
#include "sgkit/report.hpp"
#include "sgkit/row_monomial.hpp"

namespace sgkit {

  enum class CoverMode { full, cheap };

  struct CoverOptions {
    CoverMode   mode = CoverMode::full;
    std::size_t cap  = kDefaultCap;
    //! If set, n must be one of these (models a variety of groups that
    //! contains only some cyclic groups).
    std::optional<std::vector<std::size_t>> allowed_moduli;
  };

  //! The monoid M generated by x = (e-bar, (0 1 ... n-1)) and y = (Y, 0-bar)
  //! in H wr ([n], C_n) augmented by constants, where row j of y has entry
  //! h_j (the j-th element of H, identity first) for j < |H| and the
  //! identity below, all in column 0.
  struct CoverResult {
    FiniteGroup       group;
    std::size_t       n;
    CoverMode         mode;
    RowMonomialMatrix x;
    RowMonomialMatrix y;

    // Full mode only.
    std::optional<FiniteMonoid> monoid;
    std::optional<MinimalIdeal> ideal;
    //! Sorted indices of the maximal subgroup G_y.
    std::vector<Index> g_y;
    //! G_y -> H, the entry in row 0.
    std::optional<MonoidHom> theta;

    //! Row-0 entry of a constant-column-0 matrix, as an index of H.
    Index theta_of(RowMonomialMatrix const& z) const;
  };

  //! Throws NTooSmall if n < max(2, 2|H| - 1), ModulusNotAllowed, and in
  //! full mode CapExceeded if |H|^n n exceeds the cap.
  CoverResult build_idempotent_cover(FiniteGroup const&  H,
                                     std::size_t         n,
                                     CoverOptions const& options = {});

  struct CoverWitness {
    //! Index in H of the element witnessed.
    Index h;
    //! Idempotent factors: [y] for the identity, else
    //! [y, x^j y x^-j, y].
    std::vector<RowMonomialMatrix> factors;
    RowMonomialMatrix              product;
  };

  //! One witness per element of H, in H's element order.
  std::vector<CoverWitness> cover_idempotent_witnesses(CoverResult const& c);

  //! Full mode checks every property of the construction; cheap mode only
  //! the witnesses and that their images generate H.
  Report verify_cover(CoverResult const& c, CoverMode mode);

}  // namespace sgkit

#endif  // SGKIT_COVER_HPP_
