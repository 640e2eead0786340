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

#include "sgkit/transformation.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sgkit/error.hpp"

namespace sgkit {

  RulePtr transformation_rule(std::size_t degree) {
    auto rule      = std::make_shared<ProductRule>();
    rule->identity = identity_transformation(degree);
    rule->multiply = [](Element const& x, Element const& y) {
      auto const& a = x.code();
      auto const& b = y.code();
      std::vector<Element::value_type> out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = b[a[i]];
      }
      return Element(ElementKind::transformation, std::move(out));
    };
    rule->valid = [degree](Element const& x) {
      return x.code().size() == degree
             && std::all_of(x.code().begin(), x.code().end(), [degree](auto v) {
                  return v < degree;
                });
    };
    rule->format = [](Element const& x) {
      std::vector<Element::value_type> one_based;
      for (auto v : x.code()) {
        one_based.push_back(v + 1);
      }
      return fmt::format("[{}]", fmt::join(one_based, " "));
    };
    return rule;
  }

  Element transformation(std::vector<Element::value_type> images) {
    return Element(ElementKind::transformation, std::move(images));
  }

  Element identity_transformation(std::size_t degree) {
    std::vector<Element::value_type> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Element::value_type>(i);
    }
    return transformation(std::move(images));
  }

  Element constant_transformation(std::size_t degree, Element::value_type to) {
    return transformation(std::vector<Element::value_type>(degree, to));
  }

  Element cycle_transformation(std::size_t degree) {
    std::vector<Element::value_type> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = static_cast<Element::value_type>((i + 1) % degree);
    }
    return transformation(std::move(images));
  }

  Element permutation_from_cycles(
      std::size_t                                          degree,
      std::vector<std::vector<Element::value_type>> const& cycles) {
    auto rule   = transformation_rule(degree);
    auto result = identity_transformation(degree);
    for (auto const& cycle : cycles) {
      std::vector<Element::value_type> images(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        images[i] = static_cast<Element::value_type>(i);
      }
      std::vector<bool> seen(degree, false);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (cycle[k] >= degree || seen[cycle[k]]) {
          throw Error(ErrorCode::invalid_argument,
                      fmt::format("bad cycle ({}) on {} points",
                                  fmt::join(cycle, " "),
                                  degree));
        }
        seen[cycle[k]]     = true;
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      }
      result = rule->multiply(result, transformation(std::move(images)));
    }
    return result;
  }

  bool is_permutation(Element const& x) {
    std::vector<bool> hit(x.code().size(), false);
    for (auto v : x.code()) {
      if (v >= hit.size() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  bool is_constant(Element const& x) {
    auto const& c = x.code();
    return !c.empty()
           && std::all_of(c.begin(), c.end(), [&c](auto v) { return v == c[0]; });
  }

  FiniteMonoid transformation_monoid(std::size_t          degree,
                                     std::vector<Element> gens,
                                     std::size_t          cap) {
    return generate_monoid(gens, transformation_rule(degree), cap);
  }

  FiniteMonoid augmented_transformation_monoid(std::size_t          degree,
                                               std::vector<Element> gens,
                                               std::size_t          cap) {
    for (std::size_t j = 0; j < degree; ++j) {
      gens.push_back(
          constant_transformation(degree, static_cast<Element::value_type>(j)));
    }
    return generate_monoid(gens, transformation_rule(degree), cap);
  }

}  // namespace sgkit
