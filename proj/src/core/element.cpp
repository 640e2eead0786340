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

#include "sgkit/element.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "sgkit/error.hpp"

namespace sgkit {

  std::size_t Element::hash() const noexcept {
    // FNV-1a over the kind and the code words.
    std::uint64_t h = 1469598103934665603ULL;
    auto          mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(_kind));
    for (auto v : _code) {
      mix(v);
    }
    return static_cast<std::size_t>(h);
  }

  Element Element::tuple(std::span<Element const> parts) {
    std::vector<value_type> code;
    code.push_back(static_cast<value_type>(parts.size()));
    for (auto const& part : parts) {
      code.push_back(static_cast<value_type>(part.kind()));
      code.push_back(static_cast<value_type>(part.code().size()));
      code.insert(code.end(), part.code().begin(), part.code().end());
    }
    return Element(ElementKind::tuple, std::move(code));
  }

  std::vector<Element> Element::components() const {
    if (_kind != ElementKind::tuple || _code.empty()) {
      throw Error(ErrorCode::invalid_argument, "element is not a tuple");
    }
    std::vector<Element> result;
    std::size_t          pos = 1;
    for (value_type i = 0; i < _code[0]; ++i) {
      if (pos + 2 > _code.size()) {
        throw Error(ErrorCode::invalid_argument, "malformed tuple encoding");
      }
      auto kind = static_cast<ElementKind>(_code[pos]);
      auto len  = _code[pos + 1];
      pos += 2;
      if (pos + len > _code.size()) {
        throw Error(ErrorCode::invalid_argument, "malformed tuple encoding");
      }
      result.emplace_back(
          kind,
          std::vector<value_type>(_code.begin() + pos,
                                  _code.begin() + pos + len));
      pos += len;
    }
    return result;
  }

  std::string to_string(Element const& x) {
    switch (x.kind()) {
      case ElementKind::transformation:
        return fmt::format("t[{}]", fmt::join(x.code(), " "));
      case ElementKind::row_monomial: {
        std::string out = "rm{";
        for (std::size_t i = 0; i + 1 < x.code().size(); i += 2) {
          out += fmt::format(
              "{}{}:{}", i == 0 ? "" : " ", x.code()[i], x.code()[i + 1]);
        }
        return out + "}";
      }
      case ElementKind::table_index:
        return fmt::format("#{}", fmt::join(x.code(), " "));
      case ElementKind::tuple: {
        std::string out = "(";
        bool        first = true;
        for (auto const& c : x.components()) {
          out += (first ? "" : ", ") + to_string(c);
          first = false;
        }
        return out + ")";
      }
    }
    return "?";
  }

}  // namespace sgkit
