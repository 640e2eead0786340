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

#ifndef SGKIT_WREATH_HPP_
#define SGKIT_WREATH_HPP_

#include <cstddef>

#include "sgkit/green.hpp"
#include "sgkit/group.hpp"
#include "sgkit/row_monomial.hpp"

namespace sgkit {

  //! G wr (B, constants) as |B| x |B| row-monomial matrices over G with all
  //! non-zero entries in one column, together with the identity matrix.
  struct ConstantWreath {
    FiniteGroup  group;
    std::size_t  degree;
    FiniteMonoid monoid;
    //! The constant-column matrices (everything when |B| = 1).
    Subsemigroup simple_part;
  };

  //! Builds G wr (B, constants) for |B| = degree and checks that the simple
  //! part is simple with every maximal subgroup isomorphic to G. Throws
  //! CapExceeded if |G|^|B| |B| exceeds `cap`, InternalInconsistency if a
  //! check fails.
  ConstantWreath constant_wreath(FiniteGroup const& G,
                                 std::size_t        degree,
                                 std::size_t        cap = kDefaultCap);

  //! For an idempotent e = (f, b) and s = (f', b) in eSe, the entry of s in
  //! row b and column b, as an index of the group. Throws NotIdempotent or
  //! NotInLocalMonoid.
  Index psi(ConstantWreath const& W, Index e, Index s);

}  // namespace sgkit

#endif  // SGKIT_WREATH_HPP_
