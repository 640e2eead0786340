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

#include "sgkit/group.hpp"

#include <charconv>
#include <memory>

#include <fmt/format.h>

#include "sgkit/error.hpp"
#include "sgkit/isomorphism.hpp"
#include "sgkit/transformation.hpp"

namespace sgkit {

  FiniteGroup FiniteGroup::from_monoid(FiniteMonoid M) {
    std::vector<Index> inverse(M.size(), kNoIndex);
    for (Index x = 0; x < M.size(); ++x) {
      // walk x, x^2, ... until the identity (or a repeat) shows up
      Index prev = M.identity();
      Index y    = x;
      for (std::size_t k = 0; k <= M.size(); ++k) {
        if (y == M.identity()) {
          inverse[x] = prev;
          break;
        }
        prev = y;
        y    = M.multiply(y, x);
      }
      if (inverse[x] == kNoIndex) {
        throw Error(ErrorCode::not_a_group,
                    fmt::format("{} has no inverse", M.format(x)));
      }
    }
    return FiniteGroup(std::move(M), std::move(inverse));
  }

  std::size_t FiniteGroup::order(Index x) const {
    std::size_t k = 1;
    for (Index y = x; y != identity(); y = multiply(y, x)) {
      ++k;
    }
    return k;
  }

  namespace {
    template <typename Mul>
    std::vector<Index> greedy_generators_impl(std::size_t n, Mul&& mul) {
      std::vector<Index> gens;
      std::vector<bool>  in(n, false);
      in[0] = true;
      for (Index x = 1; x < n; ++x) {
        if (in[x]) {
          continue;
        }
        gens.push_back(x);
        std::vector<Index> members;
        for (Index y = 0; y < n; ++y) {
          if (in[y]) {
            members.push_back(y);
          }
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
          for (auto g : gens) {
            auto z = mul(members[k], g);
            if (!in[z]) {
              in[z] = true;
              members.push_back(z);
            }
          }
        }
      }
      return gens;
    }

  }  // namespace

  RulePtr tuple_rule(std::vector<RulePtr> parts) {
    std::vector<Element> ids;
    for (auto const& r : parts) {
      ids.push_back(r->identity);
    }
    auto rule      = std::make_shared<ProductRule>();
    rule->identity = Element::tuple(ids);
    rule->multiply = [parts](Element const& x, Element const& y) {
      auto                 a = x.components();
      auto                 b = y.components();
      std::vector<Element> out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out.push_back(parts[i]->multiply(a[i], b[i]));
      }
      return Element::tuple(out);
    };
    rule->valid = [parts](Element const& x) {
      auto c = x.components();
      if (c.size() != parts.size()) {
        return false;
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (c[i].kind() != parts[i]->identity.kind()
            || (parts[i]->valid && !parts[i]->valid(c[i]))) {
          return false;
        }
      }
      return true;
    };
    rule->format = [parts](Element const& x) {
      auto        c   = x.components();
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += i == 0 ? "" : ", ";
        out += parts[i]->format ? parts[i]->format(c[i]) : to_string(c[i]);
      }
      return out + ")";
    };
    return rule;
  }

  std::vector<Index> greedy_generators(FiniteMonoid const& G) {
    return greedy_generators_impl(
        G.size(), [&G](Index x, Index y) { return G.multiply(x, y); });
  }

  FiniteGroup group_from_table(std::vector<std::vector<Index>> const& table) {
    auto const n = table.size();
    if (n == 0) {
      throw Error(ErrorCode::invalid_argument, "empty multiplication table");
    }
    for (auto const& row : table) {
      if (row.size() != n) {
        throw Error(ErrorCode::invalid_argument,
                    "multiplication table is not square");
      }
      for (auto v : row) {
        if (v >= n) {
          throw Error(ErrorCode::invalid_argument,
                      fmt::format("table entry {} out of range", v));
        }
      }
    }
    std::optional<Index> id;
    for (Index e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (Index j = 0; j < n && ok; ++j) {
        ok = table[e][j] == j && table[j][e] == j;
      }
      if (ok) {
        id = e;
      }
    }
    if (!id) {
      throw Error(ErrorCode::not_a_group, "table has no identity");
    }
    auto shared = std::make_shared<std::vector<std::vector<Index>>>(table);
    auto rule   = std::make_shared<ProductRule>();
    rule->identity = Element(ElementKind::table_index, {*id});
    rule->multiply = [shared](Element const& x, Element const& y) {
      return Element(ElementKind::table_index,
                     {(*shared)[x.code()[0]][y.code()[0]]});
    };
    rule->valid = [n](Element const& x) {
      return x.code().size() == 1 && x.code()[0] < n;
    };
    rule->format = [](Element const& x) {
      return std::to_string(x.code()[0]);
    };

    // Generate from all table rows first so that associativity can be checked
    // against the rule, then regenerate from a small generating set.
    std::vector<Element> all;
    for (Index i = 0; i < n; ++i) {
      all.emplace_back(ElementKind::table_index, std::vector<Index>{i});
    }
    auto full = generate_monoid(all, rule, n);
    if (!is_associative(full)) {
      throw Error(ErrorCode::not_a_group, "table is not associative");
    }
    auto                 gens = greedy_generators(full);
    std::vector<Element> seeds;
    for (auto g : gens) {
      seeds.push_back(full.at(g));
    }
    return FiniteGroup::from_monoid(generate_monoid(seeds, rule, n));
  }

  FiniteGroup group_from_rule(std::size_t                        n,
                              std::function<Index(Index, Index)> mul) {
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        table[i][j] = mul(i, j);
      }
    }
    return group_from_table(table);
  }

  FiniteGroup group_from_permutations(std::size_t          degree,
                                      std::vector<Element> gens) {
    for (auto const& g : gens) {
      if (!is_permutation(g) || g.code().size() != degree) {
        throw Error(ErrorCode::not_a_group,
                    fmt::format("{} is not a permutation of degree {}",
                                to_string(g),
                                degree));
      }
    }
    return FiniteGroup::from_monoid(
        generate_monoid(gens, transformation_rule(degree)));
  }

  FiniteGroup cyclic_group(std::size_t n) {
    return group_from_rule(n, [n](Index a, Index b) {
      return static_cast<Index>((a + b) % n);
    });
  }

  FiniteGroup direct_product(std::vector<FiniteGroup> const& factors) {
    std::vector<RulePtr> rules;
    std::vector<Element> ids;
    for (auto const& f : factors) {
      rules.push_back(f.monoid().rule());
      ids.push_back(f.monoid().at(0));
    }
    std::vector<Element> seeds;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (auto g : factors[i].monoid().generators()) {
        auto parts = ids;
        parts[i]   = factors[i].monoid().at(g);
        seeds.push_back(Element::tuple(parts));
      }
    }
    return FiniteGroup::from_monoid(generate_monoid(seeds, tuple_rule(rules)));
  }

  FiniteGroup direct_power(FiniteGroup const& G, std::size_t k) {
    return direct_product(std::vector<FiniteGroup>(k, G));
  }

  FiniteGroup metacyclic_group(std::uint64_t n,
                               std::uint64_t t,
                               std::uint64_t u,
                               std::uint64_t r) {
    std::vector<std::uint64_t> rpow(t, 1 % n);
    for (std::uint64_t s = 1; s < t; ++s) {
      rpow[s] = (rpow[s - 1] * r) % n;
    }
    return group_from_rule(n * t, [=](Index x, Index y) {
      std::uint64_t k1 = x % n, s1 = x / n, k2 = y % n, s2 = y / n;
      std::uint64_t k = k1 + rpow[s1] * k2;
      std::uint64_t s = s1 + s2;
      if (s >= t) {
        s -= t;
        k += u;
      }
      return static_cast<Index>((k % n) + n * s);
    });
  }

  FiniteGroup dihedral_group(std::size_t n) {
    return metacyclic_group(n, 2, 0, n - 1);
  }

  FiniteGroup dicyclic_group(std::size_t n) {
    return metacyclic_group(2 * n, 2, n, 2 * n - 1);
  }

  FiniteGroup symmetric_group(std::size_t n) {
    std::vector<Element> gens;
    if (n >= 2) {
      gens.push_back(permutation_from_cycles(n, {{0, 1}}));
    }
    if (n >= 3) {
      gens.push_back(cycle_transformation(n));
    }
    return group_from_permutations(n, gens);
  }

  FiniteGroup alternating_group(std::size_t n) {
    std::vector<Element> gens;
    for (Element::value_type k = 2; k < n; ++k) {
      gens.push_back(permutation_from_cycles(n, {{0, 1, k}}));
    }
    return group_from_permutations(std::max<std::size_t>(n, 1), gens);
  }

  namespace {
    std::optional<std::size_t> parse_suffix(std::string_view s,
                                            std::string_view prefix) {
      if (s.substr(0, prefix.size()) != prefix || s.size() == prefix.size()) {
        return std::nullopt;
      }
      std::size_t value = 0;
      auto        digits = s.substr(prefix.size());
      auto [ptr, ec]
          = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc() || ptr != digits.data() + digits.size()
          || value == 0 || value > 1000) {
        return std::nullopt;
      }
      return value;
    }

    std::optional<FiniteGroup> single_library_group(std::string_view name) {
      if (name == "Q8") {
        return dicyclic_group(2);
      } else if (name == "Q16") {
        return dicyclic_group(4);
      } else if (name == "SD16") {
        return metacyclic_group(8, 2, 0, 3);
      } else if (name == "M16") {
        return metacyclic_group(8, 2, 0, 5);
      } else if (name == "C4:C4") {
        return metacyclic_group(4, 4, 0, 3);
      } else if (auto k = parse_suffix(name, "Dic")) {
        return dicyclic_group(*k);
      } else if (auto k = parse_suffix(name, "C")) {
        return cyclic_group(*k);
      } else if (auto k = parse_suffix(name, "D")) {
        return dihedral_group(*k);
      } else if (auto k = parse_suffix(name, "S"); k && *k <= 6) {
        return symmetric_group(*k);
      } else if (auto k = parse_suffix(name, "A"); k && *k <= 6) {
        return alternating_group(*k);
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<FiniteGroup> library_group(std::string_view name) {
    std::vector<FiniteGroup> parts;
    std::size_t              start = 0;
    while (true) {
      auto pos  = name.find('x', start);
      auto part = name.substr(start, pos == std::string_view::npos
                                         ? std::string_view::npos
                                         : pos - start);
      auto g    = single_library_group(part);
      if (!g) {
        return std::nullopt;
      }
      parts.push_back(std::move(*g));
      if (pos == std::string_view::npos) {
        break;
      }
      start = pos + 1;
    }
    if (parts.size() == 1) {
      return parts[0];
    }
    return direct_product(parts);
  }

  std::vector<NamedGroup> const& small_group_library() {
    static std::vector<NamedGroup> const library = [] {
      std::vector<std::string> names = {
          "C1",     "C2",     "C3",      "C4",     "C2xC2",     "C5",
          "C6",     "S3",     "C7",      "C8",     "C2xC4",     "C2xC2xC2",
          "D4",     "Q8",     "C9",      "C3xC3",  "C10",       "D5",
          "C11",    "C12",    "C2xC6",   "A4",     "D6",        "Dic3",
          "C13",    "C14",    "D7",      "C15",    "C16",       "C4xC4",
          "C2xC8",  "C2xC2xC4", "C2xC2xC2xC2", "D8", "Q16",     "SD16",
          "M16",    "C4:C4",  "C2xD4",   "C2xQ8"};
      std::vector<NamedGroup> result;
      for (auto const& name : names) {
        result.push_back({name, *library_group(name)});
      }
      return result;
    }();
    return library;
  }

  std::optional<std::string> identify_group(FiniteGroup const& G) {
    if (G.size() > 16) {
      return std::nullopt;
    }
    for (auto const& [name, H] : small_group_library()) {
      if (H.size() == G.size() && is_isomorphic(G, H)) {
        return name;
      }
    }
    return std::nullopt;
  }

}  // namespace sgkit
