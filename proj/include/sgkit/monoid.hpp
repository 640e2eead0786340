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

#ifndef SGKIT_MONOID_HPP_
#define SGKIT_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sgkit/element.hpp"

namespace sgkit {

  using Index = std::uint32_t;
  using Word  = std::vector<Index>;

  inline constexpr Index       kNoIndex    = std::numeric_limits<Index>::max();
  inline constexpr std::size_t kDefaultCap = 500'000;

  //! The ambient multiplication that a generated monoid lives in.
  struct ProductRule {
    Element                                            identity;
    std::function<Element(Element const&, Element const&)> multiply;
    //! Optional membership test for the representable domain.
    std::function<bool(Element const&)> valid;
    //! Optional pretty printer.
    std::function<std::string(Element const&)> format;
  };

  using RulePtr = std::shared_ptr<ProductRule const>;

  //! A finite monoid given by an ordered generator list.
  //!
  //! Elements are numbered in breadth-first order by word length over the
  //! generators, ties broken by the order of the canonical encodings. Index 0
  //! is always the identity. Each element records the word through which it
  //! was first reached. The right and left Cayley graphs are stored, and for
  //! small monoids so is the full multiplication table.
  //!
  //! Copies share the (immutable) enumerated data.
  class FiniteMonoid {
   public:
    static constexpr std::size_t kTableLimit = 2048;

    std::size_t size() const noexcept;

    Element const&              at(Index i) const;
    std::vector<Element> const& elements() const noexcept;
    std::optional<Index>        find(Element const& x) const;
    //! Throws InvalidArgument if `x` is not an element.
    Index index_of(Element const& x) const;

    static constexpr Index identity() noexcept {
      return 0;
    }

    //! Element index of each generator, in the order the seeds were given.
    //! Repeated seeds are allowed.
    std::vector<Index> const& generators() const noexcept;
    std::size_t               generator_count() const noexcept;

    //! i * generators()[g]
    Index right(Index i, std::size_t g) const;
    //! generators()[g] * i
    Index left(Index i, std::size_t g) const;

    //! The witness word (generator positions) recorded at enumeration time.
    Word        word(Index i) const;
    std::size_t word_length(Index i) const;
    Index       parent(Index i) const;
    Index       last_letter(Index i) const;

    Index multiply(Index x, Index y) const;
    Index evaluate(Word const& w) const;
    Index power(Index x, std::uint64_t k) const;
    bool  is_idempotent(Index x) const;

    RulePtr const& rule() const noexcept;
    std::string    format(Index i) const;
    std::string    format(Element const& x) const;

    //! True iff both handles refer to the same enumeration.
    bool same_as(FiniteMonoid const& other) const noexcept {
      return _data == other._data;
    }

    bool has_table() const noexcept;

   private:
    struct Data;
    explicit FiniteMonoid(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;

    friend FiniteMonoid generate_monoid(std::vector<Element> const&,
                                        RulePtr,
                                        std::size_t);
  };

  //! Closure of `seeds` and the rule's identity under the rule's product.
  //!
  //! Throws CapExceeded if more than `cap` elements are found and
  //! InconsistentProduct if the rule leaves its representable domain.
  FiniteMonoid generate_monoid(std::vector<Element> const& seeds,
                               RulePtr                     rule,
                               std::size_t                 cap = kDefaultCap);

  //! The submonoid of `M` generated by `seeds` with identity `identity`
  //! (which need not be the identity of M, e.g. for local monoids eMe).
  FiniteMonoid submonoid(FiniteMonoid const&   M,
                         std::span<Index const> seeds,
                         Index                 identity);

  //! x^k for the least k >= 1 with x^k idempotent.
  Index omega_power(FiniteMonoid const& M, Index x);

  //! The least k >= 1 with x^k idempotent.
  std::uint64_t omega_exponent(FiniteMonoid const& M, Index x);

  std::vector<Index> idempotents(FiniteMonoid const& M);

  //! Checks (xy)z = x(yz) using the product rule directly: exhaustively
  //! when |M| <= 200, otherwise on 10 000 random triples drawn with `seed`.
  bool is_associative(FiniteMonoid const& M, std::uint64_t seed = 0);

  using Rng = std::mt19937_64;

  //! Draw from [0, n). Unlike std::uniform_int_distribution the sequence is
  //! the same for every standard library.
  inline std::uint64_t uniform(Rng& rng, std::uint64_t n) {
    return rng() % n;
  }

}  // namespace sgkit

#endif  // SGKIT_MONOID_HPP_
