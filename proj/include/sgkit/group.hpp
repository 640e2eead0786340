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

#ifndef SGKIT_GROUP_HPP_
#define SGKIT_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgkit/monoid.hpp"

namespace sgkit {

  //! A finite monoid in which every element is invertible.
  class FiniteGroup {
   public:
    //! Throws NotAGroup if some element of `M` has no inverse.
    static FiniteGroup from_monoid(FiniteMonoid M);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }
    std::size_t size() const noexcept {
      return _monoid.size();
    }
    static constexpr Index identity() noexcept {
      return 0;
    }
    Index multiply(Index x, Index y) const {
      return _monoid.multiply(x, y);
    }
    Index inverse(Index x) const {
      return _inverse.at(x);
    }
    std::size_t order(Index x) const;

   private:
    explicit FiniteGroup(FiniteMonoid M, std::vector<Index> inverse)
        : _monoid(std::move(M)), _inverse(std::move(inverse)) {}

    FiniteMonoid       _monoid;
    std::vector<Index> _inverse;
  };

  //! Greedy generating set: the least element not in the subgroup generated
  //! so far, repeatedly.
  std::vector<Index> greedy_generators(FiniteMonoid const& G);

  //! Group whose elements are Element(table_index, {i}) for the rows of
  //! `table`. The identity row must exist; generators are chosen greedily.
  FiniteGroup group_from_table(std::vector<std::vector<Index>> const& table);
  FiniteGroup group_from_rule(std::size_t                        n,
                              std::function<Index(Index, Index)> mul);
  FiniteGroup group_from_permutations(std::size_t          degree,
                                      std::vector<Element> gens);

  //! Componentwise product on tuple elements.
  RulePtr tuple_rule(std::vector<RulePtr> parts);

  FiniteGroup cyclic_group(std::size_t n);
  //! Tuple elements, one generator per generator of each factor.
  FiniteGroup direct_product(std::vector<FiniteGroup> const& factors);
  FiniteGroup direct_power(FiniteGroup const& G, std::size_t k);
  //! <a, x | a^n = 1, x^t = a^u, x a x^-1 = a^r>, order n * t. Requires r^t
  //! = 1 and r u = u mod n.
  FiniteGroup metacyclic_group(std::uint64_t n,
                               std::uint64_t t,
                               std::uint64_t u,
                               std::uint64_t r);
  //! Dihedral group of order 2n.
  FiniteGroup dihedral_group(std::size_t n);
  //! Dicyclic group of order 4n (Q8 for n = 2).
  FiniteGroup dicyclic_group(std::size_t n);
  FiniteGroup symmetric_group(std::size_t n);
  FiniteGroup alternating_group(std::size_t n);

  //! Looks up a group by name: Cn, Sn, An, Dn (order 2n), Dicn, Q8, Q16,
  //! SD16, M16, C4:C4, and products joined by 'x' such as C2xC2xS3.
  std::optional<FiniteGroup> library_group(std::string_view name);

  struct NamedGroup {
    std::string name;
    FiniteGroup group;
  };

  //! One representative per isomorphism type of order at most 15, and 12 of
  //! the 14 types of order 16.
  std::vector<NamedGroup> const& small_group_library();

  //! Name of the library group isomorphic to `G`, if there is one.
  std::optional<std::string> identify_group(FiniteGroup const& G);

}  // namespace sgkit

#endif  // SGKIT_GROUP_HPP_
