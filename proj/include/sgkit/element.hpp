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

#ifndef SGKIT_ELEMENT_HPP_
#define SGKIT_ELEMENT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sgkit {

  //! How the code of an Element is to be read.
  //!
  //! * transformation: the images of 0, ..., k - 1.
  //! * row_monomial: column and entry index of each row, interleaved
  //!   (c_0, v_0, c_1, v_1, ...). Entries index into the entry monoid.
  //! * table_index: a single index into a multiplication table.
  //! * tuple: component count, then (kind, length, code...) per component.
  enum class ElementKind : std::uint8_t {
    transformation = 0,
    row_monomial   = 1,
    table_index    = 2,
    tuple          = 3
  };

  //! A canonical encoding of an element of some finite monoid.
  //!
  //! Two elements are equal exactly when their kinds and codes agree, so
  //! elements can be hashed and ordered without knowing the monoid.
  class Element {
   public:
    using value_type = std::uint32_t;

    Element() = default;
    Element(ElementKind kind, std::vector<value_type> code)
        : _kind(kind), _code(std::move(code)) {}

    ElementKind kind() const noexcept {
      return _kind;
    }

    std::vector<value_type> const& code() const noexcept {
      return _code;
    }

    std::size_t hash() const noexcept;

    friend bool operator==(Element const&, Element const&) = default;

    friend std::strong_ordering operator<=>(Element const& x,
                                            Element const& y) noexcept {
      if (x._kind != y._kind) {
        return x._kind <=> y._kind;
      }
      return std::lexicographical_compare_three_way(
          x._code.begin(), x._code.end(), y._code.begin(), y._code.end());
    }

    static Element tuple(std::span<Element const> parts);
    std::vector<Element> components() const;

   private:
    ElementKind             _kind = ElementKind::table_index;
    std::vector<value_type> _code;
  };

  struct ElementHash {
    std::size_t operator()(Element const& x) const noexcept {
      return x.hash();
    }
  };

  std::string to_string(Element const& x);

}  // namespace sgkit

#endif  // SGKIT_ELEMENT_HPP_
