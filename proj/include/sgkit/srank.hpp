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

#ifndef SGKIT_SRANK_HPP_
#define SGKIT_SRANK_HPP_

#include <cstddef>
#include <vector>

#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"

namespace sgkit {

  //! A subgroup as a sorted list of element indices.
  using Subgroup = std::vector<Index>;

  inline constexpr std::size_t kNormalSubgroupLimit = 200;

  //! The least normal subgroup containing `seeds`.
  Subgroup normal_closure(FiniteGroup const& G, std::vector<Index> const& seeds);

  //! All normal subgroups, ordered by size and then lexicographically.
  //! Every normal subgroup is a product of normal closures of single
  //! elements. Throws SizeExceeded if |G| > 200.
  std::vector<Subgroup> normal_subgroups(FiniteGroup const& G);

  //! Non-trivial with no proper non-trivial normal subgroup.
  bool is_simple_group(FiniteGroup const& G);

  struct Quotient {
    //! Cosets are numbered by their least element; the coset of g is
    //! Element(table_index, {coset}).
    FiniteGroup group;
    //! Coset number of each element of G.
    std::vector<Index> coset_of;
    //! Least element of each coset.
    std::vector<Index> representatives;
    MonoidHom          projection;
  };

  //! G / N for a normal subgroup N (InvalidArgument otherwise).
  Quotient quotient(FiniteGroup const& G, Subgroup const& N);

  //! The intersection of all normal subgroups N with G/N isomorphic to S
  //! (all of G if there is none). Throws NotSimple.
  Subgroup m_s(FiniteGroup const& G, FiniteGroup const& S);

  struct SRankResult {
    FiniteGroup group;
    FiniteGroup simple;
    Subgroup    m_s;
    std::size_t rank;
  };

  //! The k with G / M_S(G) isomorphic to S^k. Throws NotSimple, and
  //! InternalInconsistency if |G / M_S(G)| is not a power of |S| or the
  //! quotient is not isomorphic to S^k.
  SRankResult s_rank(FiniteGroup const& G, FiniteGroup const& S);
  std::size_t r_s(FiniteGroup const& G, FiniteGroup const& S);

  //! r_S(target) <= r_S(source) for a surjective group homomorphism. Throws
  //! NotSurjective.
  bool check_rank_monotone(MonoidHom const& phi, FiniteGroup const& S);

}  // namespace sgkit

#endif  // SGKIT_SRANK_HPP_
