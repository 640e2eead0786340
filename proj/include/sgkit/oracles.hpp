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

#ifndef SGKIT_ORACLES_HPP_
#define SGKIT_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "sgkit/group.hpp"
#include "sgkit/monoid.hpp"

// Brute-force versions of the library algorithms, written straight from the
// definitions. They share nothing with the fast code beyond the product.
namespace sgkit::oracle {

  //! Class labels: x and y get the same label iff xM = yM (resp. Mx = My,
  //! MxM = MyM, both of the first two). Labels are the least element of the
  //! class.
  struct NaiveGreen {
    std::vector<Index> r, l, j, h;
  };
  NaiveGreen green(FiniteMonoid const& M);

  //! The intersection of all two-sided principal ideals MxM, sorted.
  std::vector<Index> minimal_ideal(FiniteMonoid const& M);

  //! The unique idempotent among x, x^2, ..., x^|M|.
  Index omega_power(FiniteMonoid const& M, Index x);

  //! Closure of seeds and identity under pairwise products of the rule.
  std::set<Element> closure(std::vector<Element> const& seeds, RulePtr const& rule);

  //! S x S = S for every x in S.
  bool is_simple(FiniteMonoid const& M, std::vector<Index> const& S);

  //! All homomorphisms G -> H given by images of the generators of G.
  std::vector<std::vector<Index>> homomorphisms(FiniteGroup const& G, FiniteGroup const& H);

  struct NaiveRank {
    //! Sorted.
    std::vector<Index> m_s;
    std::size_t        rank;
  };
  //! M_S(G) as the intersection of the kernels of all surjections G -> S;
  //! the rank counts factors of |S| in the image of G in the product of all
  //! of them.
  NaiveRank s_rank(FiniteGroup const& G, FiniteGroup const& S);

  //! The subgroup generated by all commutators and p-th powers, sorted.
  std::vector<Index> elementary_abelian_kernel(FiniteGroup const& G, std::uint64_t p);

}  // namespace sgkit::oracle

#endif  // SGKIT_ORACLES_HPP_
