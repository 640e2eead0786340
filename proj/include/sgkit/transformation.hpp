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

#ifndef SGKIT_TRANSFORMATION_HPP_
#define SGKIT_TRANSFORMATION_HPP_

#include <cstddef>
#include <vector>

#include "sgkit/element.hpp"
#include "sgkit/monoid.hpp"

namespace sgkit {

  // Transformations act on the right: (x * y)(i) = y(x(i)). Points are
  // 0-based.

  RulePtr transformation_rule(std::size_t degree);

  Element transformation(std::vector<Element::value_type> images);
  Element identity_transformation(std::size_t degree);
  Element constant_transformation(std::size_t degree, Element::value_type to);
  //! The cycle i -> i + 1 mod degree.
  Element cycle_transformation(std::size_t degree);
  //! Product of the given (0-based) disjoint or overlapping cycles, applied
  //! left to right.
  Element permutation_from_cycles(
      std::size_t                                   degree,
      std::vector<std::vector<Element::value_type>> const& cycles);

  bool is_permutation(Element const& x);
  bool is_constant(Element const& x);

  FiniteMonoid transformation_monoid(std::size_t          degree,
                                     std::vector<Element> gens,
                                     std::size_t          cap = kDefaultCap);

  //! The augmented transformation monoid: the monoid generated by `gens`
  //! together with every constant map on the `degree` points.
  FiniteMonoid augmented_transformation_monoid(std::size_t          degree,
                                               std::vector<Element> gens,
                                               std::size_t cap = kDefaultCap);

}  // namespace sgkit

#endif  // SGKIT_TRANSFORMATION_HPP_
