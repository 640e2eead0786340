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

#ifndef SGKIT_TESTS_SUPPORT_HPP_
#define SGKIT_TESTS_SUPPORT_HPP_

#include <optional>
#include <vector>

#include "sgkit/error.hpp"
#include "sgkit/group.hpp"
#include "sgkit/monoid.hpp"
#include "sgkit/transformation.hpp"

namespace sgkit::test {

  //! The code of the Error thrown by f, if any.
  template <typename F>
  std::optional<ErrorCode> error_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

  inline FiniteGroup group(char const* name) {
    return *library_group(name);
  }

  //! {1, 0} with generators 1 and 0.
  inline FiniteMonoid one_zero() {
    return transformation_monoid(
        2, {identity_transformation(2), constant_transformation(2, 0)});
  }

  //! C2 with generators g, g.
  inline FiniteMonoid cyclic_base() {
    auto g = permutation_from_cycles(2, {{0, 1}});
    return transformation_monoid(2, {g, g});
  }

  inline FiniteMonoid full_transformation_monoid(std::size_t n) {
    std::vector<Element> gens = {cycle_transformation(n)};
    if (n > 1) {
      gens.push_back(permutation_from_cycles(n, {{0, 1}}));
      std::vector<Element::value_type> images(n);
      for (std::size_t i = 0; i < n; ++i) {
        images[i] = i;
      }
      images[1] = 0;
      gens.push_back(transformation(images));
    }
    return transformation_monoid(n, gens);
  }

  //! Sorted element indices of M.
  inline std::vector<Index> all_of(FiniteMonoid const& M) {
    std::vector<Index> out(M.size());
    for (Index i = 0; i < M.size(); ++i) {
      out[i] = i;
    }
    return out;
  }

}  // namespace sgkit::test

#endif  // SGKIT_TESTS_SUPPORT_HPP_
