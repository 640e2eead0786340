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

#include <cctype>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "sgkit/cli.hpp"
#include "sgkit/row_monomial.hpp"
#include "sgkit/transformation.hpp"

namespace sgkit::cli {

  namespace {
    struct Token {
      enum Kind { word, number, punct, end } kind;
      std::string text;
      std::size_t line;
      std::size_t col;
    };

    bool is_word_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_word_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string_view constexpr kPunct = "()[]{}:;,@";
  }  // namespace

  class Parser {
   public:
    Parser(Definitions& defs, std::string source, std::size_t cap)
        : _defs(defs), _source(std::move(source)), _cap(cap) {}

    void tokenize(std::string_view text) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '\n') {
          ++line;
          col = 1;
          ++i;
        } else if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            ++i;
          }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          ++col;
        } else {
          std::size_t j = i + 1;
          Token::Kind kind;
          if (std::isdigit(static_cast<unsigned char>(c))) {
            kind = Token::number;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
              ++j;
            }
            if (j < text.size() && is_word_char(text[j])) {
              fail(line, col, "malformed number");
            }
          } else if (is_word_start(c)) {
            kind = Token::word;
            while (j < text.size() && is_word_char(text[j])) {
              ++j;
            }
          } else if (kPunct.find(c) != std::string_view::npos) {
            kind = Token::punct;
          } else {
            fail(line, col, fmt::format("unexpected character '{}'", c));
          }
          _tokens.push_back({kind, std::string(text.substr(i, j - i)), line, col});
          col += j - i;
          i = j;
        }
      }
      _tokens.push_back({Token::end, "", line, col});
    }

    void parse_file() {
      _pos = 0;
      while (peek().kind != Token::end) {
        if (peek().col != 1) {
          fail(peek(), "declarations start in column 1");
        }
        // A declaration runs up to the next token in column 1.
        _end = _pos + 1;
        while (_tokens[_end].kind != Token::end && _tokens[_end].col != 1) {
          ++_end;
        }
        declaration();
        if (_pos != _end) {
          fail(peek(), fmt::format("unexpected '{}'", peek().text));
        }
      }
    }

    // Parses a whole token stream as one literal of `target`.
    Element standalone_literal(Object const& target) {
      _pos = 0;
      _end = _tokens.size() - 1;
      auto x = member(target);
      if (_pos != _end) {
        fail(peek(), fmt::format("unexpected '{}'", peek().text));
      }
      return x;
    }

   private:
    [[noreturn]] void fail(std::size_t line, std::size_t col, std::string const& msg) const {
      throw Error(ErrorCode::parse_error, fmt::format("{}:{}:{}: {}", _source, line, col, msg));
    }

    [[noreturn]] void fail(Token const& t, std::string const& msg) const {
      fail(t.line, t.col, msg);
    }

    [[noreturn]] void unknown(Token const& t, std::string const& what) const {
      throw Error(ErrorCode::unknown_object,
                  fmt::format("{}:{}:{}: unknown {} '{}'", _source, t.line, t.col, what, t.text));
    }

    Token const& peek() const {
      return _pos < _end ? _tokens[_pos] : _tokens[_end < _tokens.size() ? _end : _tokens.size() - 1];
    }

    Token const& next() {
      if (_pos >= _end) {
        fail(peek(), "unexpected end of declaration");
      }
      return _tokens[_pos++];
    }

    bool at(std::string_view punct) const {
      return _pos < _end && peek().kind == Token::punct && peek().text == punct;
    }

    Token const& expect(std::string_view punct) {
      auto const& t = next();
      if (t.kind != Token::punct || t.text != punct) {
        fail(t, fmt::format("expected '{}', found '{}'", punct, t.text));
      }
      return t;
    }

    Token const& expect_word(std::string_view word = {}) {
      auto const& t = next();
      if (t.kind != Token::word || (!word.empty() && t.text != word)) {
        fail(t,
             word.empty() ? fmt::format("expected a name, found '{}'", t.text)
                          : fmt::format("expected '{}', found '{}'", word, t.text));
      }
      return t;
    }

    std::size_t number() {
      auto const& t = next();
      if (t.kind != Token::number || t.text.size() > 9) {
        fail(t, fmt::format("expected a number, found '{}'", t.text));
      }
      return std::stoul(t.text);
    }

    std::size_t point(std::size_t degree) {
      auto const& t = peek();
      auto        k = number();
      if (k < 1 || k > degree) {
        fail(t, fmt::format("point {} is outside 1..{}", k, degree));
      }
      return k - 1;
    }

    Object const& object_ref() {
      auto const& t = expect_word();
      auto        it = _defs._objects.find(t.text);
      if (it == _defs._objects.end()) {
        unknown(t, "object");
      }
      return it->second;
    }

    Element transformation_literal(std::size_t degree) {
      if (at("[")) {
        next();
        std::vector<Element::value_type> images;
        while (!at("]")) {
          images.push_back(point(degree));
        }
        auto const& close = expect("]");
        if (images.size() != degree) {
          fail(close, fmt::format("expected {} images, found {}", degree, images.size()));
        }
        return transformation(std::move(images));
      }
      if (!at("(")) {
        fail(peek(), fmt::format("expected '[' or '(', found '{}'", peek().text));
      }
      std::vector<std::vector<Element::value_type>> cycles;
      while (at("(")) {
        next();
        std::vector<Element::value_type> cycle;
        while (!at(")")) {
          auto const& t = peek();
          auto        k = point(degree);
          if (std::find(cycle.begin(), cycle.end(), k) != cycle.end()) {
            fail(t, fmt::format("point {} repeats in a cycle", k + 1));
          }
          cycle.push_back(k);
        }
        next();
        if (!cycle.empty()) {
          cycles.push_back(std::move(cycle));
        }
      }
      return permutation_from_cycles(degree, cycles);
    }

    Element row_monomial_literal(std::size_t degree, Object const& entries) {
      auto const&                         open = expect("{");
      std::vector<RowMonomialMatrix::Row> rows;
      while (true) {
        auto c = point(degree);
        expect(":");
        auto v = member(entries);
        rows.push_back({static_cast<Index>(c), entries.monoid.index_of(v)});
        if (at(";")) {
          next();
          continue;
        }
        expect("}");
        break;
      }
      if (rows.size() != degree) {
        fail(open, fmt::format("expected {} rows, found {}", degree, rows.size()));
      }
      return RowMonomialMatrix(entries.monoid, std::move(rows)).to_element();
    }

    // An element literal in the notation of `kind`, not yet checked for
    // membership.
    Element raw(Literal kind, std::size_t degree, Object const* entries) {
      switch (kind) {
        case Literal::transformation:
          return transformation_literal(degree);
        case Literal::table:
          return Element(ElementKind::table_index,
                         {static_cast<Element::value_type>(number())});
        case Literal::row_monomial:
          return row_monomial_literal(degree, *entries);
        case Literal::index_only:
          break;
      }
      fail(peek(), "expected '@' and an element index");
    }

    Element member(Object const& target) {
      auto const& t = peek();
      if (at("@")) {
        next();
        auto const& n = peek();
        auto        i = number();
        if (i >= target.monoid.size()) {
          fail(n, fmt::format("{} has only {} elements", target.name, target.monoid.size()));
        }
        return target.monoid.at(i);
      }
      Object const* entries = nullptr;
      if (target.literal == Literal::row_monomial) {
        entries = &_defs._objects.at(target.entries);
      }
      auto x = raw(target.literal, target.degree, entries);
      if (!target.monoid.find(x)) {
        fail(t, fmt::format("not an element of {}", target.name));
      }
      return x;
    }

    std::vector<Element> generator_list(Literal kind, std::size_t degree, Object const* entries,
                                        bool commas) {
      std::vector<Element> out;
      while (_pos < _end) {
        out.push_back(raw(kind, degree, entries));
        if (commas && _pos < _end) {
          expect(",");
        }
      }
      return out;
    }

    void declare(Token const& name) {
      if (_defs._objects.count(name.text) || _defs._homs.count(name.text)
          || _defs._problems.count(name.text)) {
        fail(name, fmt::format("'{}' is declared twice", name.text));
      }
      _defs._names.push_back(name.text);
    }

    // Runs a constructor, rethrowing library errors at `where`.
    template <typename F>
    auto located(Token const& where, F&& f) {
      try {
        return f();
      } catch (Error const& e) {
        if (e.code() == ErrorCode::parse_error || e.code() == ErrorCode::unknown_object) {
          throw;
        }
        std::string_view msg    = e.what();
        auto             prefix = fmt::format("{}: ", to_string(e.code()));
        if (msg.substr(0, prefix.size()) == prefix) {
          msg.remove_prefix(prefix.size());
        }
        throw Error(e.code(),
                    fmt::format("{}:{}:{}: {}", _source, where.line, where.col, msg));
      }
    }

    static Literal literal_of(FiniteMonoid const& M, std::size_t& degree) {
      auto const& x = M.at(0);
      if (x.kind() == ElementKind::transformation) {
        degree = x.code().size();
        return Literal::transformation;
      }
      return x.kind() == ElementKind::table_index ? Literal::table : Literal::index_only;
    }

    void declaration() {
      auto const& keyword = expect_word();
      if (keyword.text == "group") {
        group_declaration();
      } else if (keyword.text == "monoid") {
        monoid_declaration();
      } else if (keyword.text == "hom") {
        hom_declaration();
      } else if (keyword.text == "problem") {
        problem_declaration();
      } else {
        fail(keyword, fmt::format("unknown declaration '{}'", keyword.text));
      }
    }

    void group_declaration() {
      auto const& name = expect_word();
      declare(name);
      auto const&                how = expect_word();
      std::size_t                degree = 0;
      std::optional<FiniteGroup> group;
      if (how.text == "library") {
        std::string spec;
        while (_pos < _end) {
          spec += next().text;
        }
        auto G = library_group(spec);
        if (!G) {
          fail(how, fmt::format("unknown library group '{}'", spec));
        }
        group = std::move(*G);
      } else if (how.text == "perm") {
        degree = number();
        expect(":");
        auto gens = generator_list(Literal::transformation, degree, nullptr, true);
        group     = located(name, [&] { return group_from_permutations(degree, gens); });
      } else if (how.text == "table") {
        auto const& k = peek();
        auto        n = number();
        if (n == 0) {
          fail(k, "a table needs at least one row");
        }
        expect(":");
        std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
        for (auto& row : table) {
          for (auto& entry : row) {
            auto const& t = peek();
            entry         = number();
            if (entry >= n) {
              fail(t, fmt::format("entry {} is outside 0..{}", entry, n - 1));
            }
          }
        }
        group = located(name, [&] { return group_from_table(table); });
      } else {
        fail(how, fmt::format("expected 'perm', 'table' or 'library', found '{}'", how.text));
      }
      auto   literal = literal_of(group->monoid(), degree);
      Object obj{name.text, group->monoid(), group, literal, degree, "", name.line};
      _defs._objects.emplace(obj.name, std::move(obj));
    }

    void monoid_declaration() {
      auto const& name = expect_word();
      declare(name);
      auto const&                 how    = expect_word();
      auto                        degree = number();
      std::optional<FiniteMonoid> M;
      std::string                 entries_name;
      Literal                     literal;
      if (how.text == "transf") {
        expect(":");
        auto gens = generator_list(Literal::transformation, degree, nullptr, false);
        M         = located(name, [&] {
          return transformation_monoid(degree, std::move(gens), _cap);
        });
        literal   = Literal::transformation;
      } else if (how.text == "rowmono") {
        if (degree == 0) {
          fail(how, "matrices need at least one row");
        }
        expect_word("over");
        auto const& entries = object_ref();
        expect(":");
        entries_name = entries.name;
        auto gens    = generator_list(Literal::row_monomial, degree, &entries, false);
        M            = located(name, [&] {
          return generate_monoid(gens, row_monomial_rule(entries.monoid, degree), _cap);
        });
        literal      = Literal::row_monomial;
      } else {
        fail(how, fmt::format("expected 'transf' or 'rowmono', found '{}'", how.text));
      }
      Object obj{name.text, std::move(*M), std::nullopt, literal, degree, entries_name, name.line};
      _defs._objects.emplace(obj.name, std::move(obj));
    }

    void hom_declaration() {
      auto const& name = expect_word();
      declare(name);
      expect_word("from");
      auto const& from = object_ref();
      expect_word("to");
      auto const& to    = object_ref();
      auto const& colon = expect(":");
      std::vector<Element> images;
      while (_pos < _end) {
        images.push_back(member(to));
        if (_pos < _end) {
          expect(",");
        }
      }
      if (images.size() != from.monoid.generator_count()) {
        fail(colon,
             fmt::format("{} has {} generators but {} images are given",
                         from.name,
                         from.monoid.generator_count(),
                         images.size()));
      }
      auto hom = located(name, [&] { return hom_from_images(from.monoid, to.monoid, images); });
      _defs._homs.emplace(name.text, HomDecl{name.text, from.name, to.name, std::move(hom)});
    }

    void problem_declaration() {
      auto const& name = expect_word();
      declare(name);
      expect_word("base");
      auto const& base = object_ref();
      expect_word("alpha");
      auto const& alpha = expect_word();
      if (!_defs._homs.count(alpha.text)) {
        unknown(alpha, "hom");
      }
      _defs._problems.emplace(name.text, Problem{name.text, base.name, alpha.text});
    }

    Definitions&       _defs;
    std::string        _source;
    std::size_t        _cap;
    std::vector<Token> _tokens;
    std::size_t        _pos = 0;
    std::size_t        _end = 0;
  };

  namespace {
    [[noreturn]] void unknown_name(std::string const& what, std::string const& name) {
      throw Error(ErrorCode::unknown_object, fmt::format("unknown {} '{}'", what, name));
    }
  }  // namespace

  Object const& Definitions::object(std::string const& name) const {
    auto it = _objects.find(name);
    if (it == _objects.end()) {
      unknown_name("object", name);
    }
    return it->second;
  }

  FiniteGroup Definitions::group(std::string const& name) const {
    auto const& obj = object(name);
    if (obj.group) {
      return *obj.group;
    }
    return FiniteGroup::from_monoid(obj.monoid);
  }

  HomDecl const& Definitions::hom(std::string const& name) const {
    auto it = _homs.find(name);
    if (it == _homs.end()) {
      unknown_name("hom", name);
    }
    return it->second;
  }

  Problem const& Definitions::problem(std::string const& name) const {
    auto it = _problems.find(name);
    if (it == _problems.end()) {
      unknown_name("problem", name);
    }
    return it->second;
  }

  bool Definitions::has_object(std::string const& name) const {
    return _objects.count(name) != 0;
  }

  Definitions Definitions::parse(std::string_view text, std::string const& source, std::size_t cap) {
    Definitions defs;
    Parser      parser(defs, source, cap);
    parser.tokenize(text);
    parser.parse_file();
    return defs;
  }

  Definitions Definitions::load(std::string const& path, std::size_t cap) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::parse_error, fmt::format("{}: cannot be read", path));
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path, cap);
  }

  Element Definitions::literal(Object const& target, std::string_view text) const {
    Parser parser(const_cast<Definitions&>(*this), "<literal>", kDefaultCap);
    parser.tokenize(text);
    return parser.standalone_literal(target);
  }

  std::string write_cover(CoverResult const& c,
                          std::string const& group_name,
                          std::string const& monoid_name) {
    auto const& H   = c.group;
    std::string out = fmt::format("# cover of a group of order {} with n = {}\n", H.size(), c.n);
    out += fmt::format("group {} table {}:\n", group_name, H.size());
    for (Index i = 0; i < H.size(); ++i) {
      out += " ";
      for (Index j = 0; j < H.size(); ++j) {
        out += fmt::format(" {}", H.multiply(i, j));
      }
      out += "\n";
    }
    out += fmt::format("monoid {} rowmono {} over {}:\n", monoid_name, c.n, group_name);
    for (auto const* X : {&c.x, &c.y}) {
      out += "  {";
      for (std::size_t i = 0; i < X->size(); ++i) {
        out += fmt::format("{}{}:{}", i == 0 ? "" : "; ", X->column(i) + 1, X->value(i));
      }
      out += "}\n";
    }
    return out;
  }

}  // namespace sgkit::cli
