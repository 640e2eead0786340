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

#ifndef SGKIT_HOM_HPP_
#define SGKIT_HOM_HPP_

#include <cstdint>
#include <vector>

#include "sgkit/group.hpp"
#include "sgkit/monoid.hpp"

namespace sgkit {

  //! A monoid homomorphism stored as a total map on element indices.
  class MonoidHom {
   public:
    //! Checks map(1) = 1 and map(x g) = map(x) map(g) for every element x
    //! and generator g of the source; throws NotWellDefined otherwise.
    MonoidHom(FiniteMonoid source, FiniteMonoid target, std::vector<Index> map);

    FiniteMonoid const& source() const noexcept {
      return _source;
    }
    FiniteMonoid const& target() const noexcept {
      return _target;
    }
    std::vector<Index> const& map() const noexcept {
      return _map;
    }
    Index operator()(Index x) const {
      return _map.at(x);
    }

   private:
    FiniteMonoid       _source;
    FiniteMonoid       _target;
    std::vector<Index> _map;
  };

  //! The homomorphism sending the i-th generator of `source` to `images[i]`,
  //! extended along witness words. Throws NotWellDefined if no such
  //! homomorphism exists.
  MonoidHom hom_from_images(FiniteMonoid const&       source,
                            FiniteMonoid const&       target,
                            std::vector<Index> const& images);
  //! As above with images given as elements of `target`.
  MonoidHom hom_from_images(FiniteMonoid const&         source,
                            FiniteMonoid const&         target,
                            std::vector<Element> const& images);

  //! Checks map(a) map(b) = map(ab): on all pairs when |source| <= 200,
  //! otherwise on 10 000 random pairs.
  bool respects_products(MonoidHom const& f, std::uint64_t seed = 0);

  MonoidHom identity_hom(FiniteMonoid const& M);
  //! g after f.
  MonoidHom compose(MonoidHom const& f, MonoidHom const& g);
  //! Throws InvalidArgument unless f is bijective.
  MonoidHom inverse(MonoidHom const& f);

  bool               is_surjective(MonoidHom const& f);
  bool               is_injective(MonoidHom const& f);
  //! Sorted list of the indices in the image.
  std::vector<Index> image(MonoidHom const& f);
  //! Preimage of the identity.
  std::vector<Index> kernel(MonoidHom const& f);

  //! A set-theoretic right inverse of a surjective homomorphism.
  struct Section {
    MonoidHom          alpha;
    std::vector<Index> map;

    Index operator()(Index k) const {
      return map.at(k);
    }
  };

  //! sigma(1) = 1 and otherwise sigma(k) is the least preimage of k. Throws
  //! NotSurjective.
  Section canonical_section(MonoidHom const& alpha);

  struct Pullback {
    FiniteGroup group;
    //! Projections onto the source of alpha and the source of rho.
    MonoidHom to_first;
    MonoidHom to_second;
  };

  //! The fibre product {(h, k') : alpha(h) = rho(k')} of alpha: H -> K and
  //! rho: K' -> K. Throws NotSurjective if either map is not onto, and
  //! InvalidArgument if the codomains differ.
  Pullback pullback(MonoidHom const& alpha, MonoidHom const& rho);

}  // namespace sgkit

#endif  // SGKIT_HOM_HPP_
