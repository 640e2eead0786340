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

#ifndef SGKIT_CLI_HPP_
#define SGKIT_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgkit/cover.hpp"
#include "sgkit/error.hpp"
#include "sgkit/group.hpp"
#include "sgkit/hom.hpp"
#include "sgkit/monoid.hpp"
#include "sgkit/report.hpp"

namespace sgkit::cli {

  //! How element literals of an object are written in a definition file.
  enum class Literal {
    //! `[i1 ... ik]` images or cycles `(1 2)(3 4)`, 1-based.
    transformation,
    //! A row index of the multiplication table.
    table,
    //! `{c:lit; ...}` with 1-based columns.
    row_monomial,
    //! Only the generic `@i` form.
    index_only
  };

  struct Object {
    std::string                name;
    FiniteMonoid               monoid;
    std::optional<FiniteGroup> group;
    Literal                    literal = Literal::index_only;
    //! Degree of transformations or size of row-monomial matrices.
    std::size_t degree = 0;
    //! Entry object of a row-monomial monoid.
    std::string entries;
    std::size_t line = 0;
  };

  struct Problem {
    std::string name;
    std::string base;
    std::string alpha;
  };

  struct HomDecl {
    std::string name;
    std::string from;
    std::string to;
    MonoidHom   hom;
  };

  //! The objects of a definition file. Lookups throw UnknownObject.
  class Definitions {
   public:
    Object const&  object(std::string const& name) const;
    FiniteGroup    group(std::string const& name) const;
    HomDecl const& hom(std::string const& name) const;
    Problem const& problem(std::string const& name) const;

    bool has_object(std::string const& name) const;
    //! Declaration order of every name.
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    //! Parses `text`; `source` prefixes error locations. Every object is
    //! built and validated; a failure is rethrown with its location.
    static Definitions parse(std::string_view   text,
                             std::string const& source = "<input>",
                             std::size_t        cap    = kDefaultCap);
    static Definitions load(std::string const& path, std::size_t cap = kDefaultCap);

    //! Parses an element literal for `target`.
    Element literal(Object const& target, std::string_view text) const;

   private:
    friend class Parser;
    std::map<std::string, Object>  _objects;
    std::map<std::string, HomDecl> _homs;
    std::map<std::string, Problem> _problems;
    std::vector<std::string>       _names;
  };

  //! A definition file declaring the cover group as a table group and the
  //! cover monoid by its generators x and y.
  std::string write_cover(CoverResult const& c,
                          std::string const& group_name  = "H",
                          std::string const& monoid_name = "M");

  //! Library name, or a group declared in `defs`.
  FiniteGroup resolve_group(std::string const& name, Definitions const* defs);

  struct Options {
    std::size_t                  cap = kDefaultCap;
    std::optional<std::uint64_t> prime;
    CoverMode                    mode   = CoverMode::full;
    std::size_t                  sample = 1000;
    std::uint64_t                seed   = 0;
    std::optional<std::string>   out;
  };

  Report cmd_analyze(Definitions const& defs, std::string const& name, Options const& opts);
  Report cmd_cover(FiniteGroup const& H,
                   std::string const& name,
                   std::size_t        n,
                   Options const&     opts);
  //! `base` names a monoid and `alpha` a hom between groups.
  Report cmd_embed(Definitions const& defs,
                   std::string const& base,
                   std::string const& alpha,
                   Options const&     opts);
  Report cmd_srank(FiniteGroup const& G,
                   FiniteGroup const& S,
                   std::string const& g_name,
                   std::string const& s_name);

  //! 2 for input errors, 3 for CapExceeded, 1 otherwise.
  int exit_code(Error const& e);

}  // namespace sgkit::cli

#endif  // SGKIT_CLI_HPP_
