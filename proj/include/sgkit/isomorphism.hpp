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

#ifndef SGKIT_ISOMORPHISM_HPP_
#define SGKIT_ISOMORPHISM_HPP_

#include <cstddef>
#include <optional>

#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"

namespace sgkit {

  inline constexpr std::size_t kIsomorphismLimit = 200;

  //! An isomorphism G1 -> G2 if there is one. Images of a greedy generating
  //! set of G1 are found by backtracking, pruned by element orders. Throws
  //! SizeExceeded if either group has more than 200 elements.
  std::optional<MonoidHom> is_isomorphic(FiniteGroup const& G1,
                                         FiniteGroup const& G2);

}  // namespace sgkit

#endif  // SGKIT_ISOMORPHISM_HPP_
