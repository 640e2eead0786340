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

#include "sgkit/monoid.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "sgkit/error.hpp"

namespace sgkit {

  struct FiniteMonoid::Data {
    RulePtr                                      rule;
    std::vector<Element>                         elements;
    std::unordered_map<Element, Index, ElementHash> index;
    std::vector<Index>                           generators;
    std::vector<Index>                           parent;
    std::vector<Index>                           last;
    std::vector<std::uint32_t>                   length;
    std::vector<Index>                           right;
    std::vector<Index>                           left;
    std::vector<Index>                           table;
  };

  std::size_t FiniteMonoid::size() const noexcept {
    return _data->elements.size();
  }

  Element const& FiniteMonoid::at(Index i) const {
    return _data->elements.at(i);
  }

  std::vector<Element> const& FiniteMonoid::elements() const noexcept {
    return _data->elements;
  }

  std::optional<Index> FiniteMonoid::find(Element const& x) const {
    auto it = _data->index.find(x);
    if (it == _data->index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Index FiniteMonoid::index_of(Element const& x) const {
    auto i = find(x);
    if (!i) {
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("{} is not an element of the monoid", format(x)));
    }
    return *i;
  }

  std::vector<Index> const& FiniteMonoid::generators() const noexcept {
    return _data->generators;
  }

  std::size_t FiniteMonoid::generator_count() const noexcept {
    return _data->generators.size();
  }

  Index FiniteMonoid::right(Index i, std::size_t g) const {
    return _data->right[static_cast<std::size_t>(i) * generator_count() + g];
  }

  Index FiniteMonoid::left(Index i, std::size_t g) const {
    return _data->left[static_cast<std::size_t>(i) * generator_count() + g];
  }

  Word FiniteMonoid::word(Index i) const {
    Word w(_data->length.at(i));
    for (auto k = w.size(); k > 0; --k) {
      w[k - 1] = _data->last[i];
      i        = _data->parent[i];
    }
    return w;
  }

  std::size_t FiniteMonoid::word_length(Index i) const {
    return _data->length.at(i);
  }

  Index FiniteMonoid::parent(Index i) const {
    return _data->parent.at(i);
  }

  Index FiniteMonoid::last_letter(Index i) const {
    return _data->last.at(i);
  }

  Index FiniteMonoid::multiply(Index x, Index y) const {
    auto const n = size();
    if (!_data->table.empty()) {
      return _data->table[static_cast<std::size_t>(x) * n + y];
    }
    for (auto g : word(y)) {
      x = right(x, g);
    }
    return x;
  }

  Index FiniteMonoid::evaluate(Word const& w) const {
    Index x = identity();
    for (auto g : w) {
      if (g >= generator_count()) {
        throw Error(ErrorCode::invalid_argument,
                    fmt::format("letter {} out of range", g));
      }
      x = right(x, g);
    }
    return x;
  }

  Index FiniteMonoid::power(Index x, std::uint64_t k) const {
    Index result = identity();
    Index base   = x;
    while (k > 0) {
      if (k & 1) {
        result = multiply(result, base);
      }
      base = multiply(base, base);
      k >>= 1;
    }
    return result;
  }

  bool FiniteMonoid::is_idempotent(Index x) const {
    return multiply(x, x) == x;
  }

  RulePtr const& FiniteMonoid::rule() const noexcept {
    return _data->rule;
  }

  std::string FiniteMonoid::format(Index i) const {
    return format(at(i));
  }

  std::string FiniteMonoid::format(Element const& x) const {
    if (_data->rule->format) {
      return _data->rule->format(x);
    }
    return to_string(x);
  }

  bool FiniteMonoid::has_table() const noexcept {
    return !_data->table.empty();
  }

  namespace {
    void check_in_domain(ProductRule const& rule, Element const& x) {
      if (x.kind() != rule.identity.kind()
          || (rule.valid && !rule.valid(x))) {
        throw Error(ErrorCode::inconsistent_product,
                    fmt::format("{} lies outside the representable domain",
                                to_string(x)));
      }
    }
  }  // namespace

  FiniteMonoid generate_monoid(std::vector<Element> const& seeds,
                               RulePtr                     rule,
                               std::size_t                 cap) {
    if (!rule || !rule->multiply) {
      throw Error(ErrorCode::invalid_argument, "no product rule given");
    }
    check_in_domain(*rule, rule->identity);
    for (auto const& s : seeds) {
      check_in_domain(*rule, s);
    }
    if (cap == 0) {
      throw CapExceeded(cap, 1, "monoid closure");
    }

    auto        data = std::make_shared<FiniteMonoid::Data>();
    auto const  ngens = seeds.size();
    data->rule        = rule;
    data->elements.push_back(rule->identity);
    data->index.emplace(rule->identity, 0);
    data->parent.push_back(kNoIndex);
    data->last.push_back(kNoIndex);
    data->length.push_back(0);

    std::vector<Index> frontier = {0};
    std::uint32_t      level    = 0;
    // right[i * ngens + g], filled as each element is expanded
    std::vector<Index> right;

    struct Found {
      Element element;
      Index   parent;
      Index   letter;
    };

    while (!frontier.empty()) {
      ++level;
      std::vector<Found>                              found;
      std::unordered_map<Element, std::size_t, ElementHash> found_pos;
      // (slot in `right`, position in `found`) for edges into new elements
      std::vector<std::pair<std::size_t, std::size_t>> pending;
      right.resize(data->elements.size() * ngens, kNoIndex);

      for (auto i : frontier) {
        for (std::size_t g = 0; g < ngens; ++g) {
          Element prod = rule->multiply(data->elements[i], seeds[g]);
          check_in_domain(*rule, prod);
          auto const slot = static_cast<std::size_t>(i) * ngens + g;
          if (auto it = data->index.find(prod); it != data->index.end()) {
            right[slot] = it->second;
            continue;
          }
          auto [it, inserted] = found_pos.try_emplace(prod, found.size());
          if (inserted) {
            found.push_back({std::move(prod), i, static_cast<Index>(g)});
          }
          pending.emplace_back(slot, it->second);
        }
      }

      std::vector<std::size_t> order(found.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        order[k] = k;
      }
      std::sort(order.begin(), order.end(), [&found](auto a, auto b) {
        return found[a].element < found[b].element;
      });
      std::vector<Index> new_index(found.size());
      frontier.clear();
      for (auto k : order) {
        if (data->elements.size() >= cap) {
          throw CapExceeded(cap, data->elements.size() + 1, "monoid closure");
        }
        auto const idx = static_cast<Index>(data->elements.size());
        new_index[k]   = idx;
        data->index.emplace(found[k].element, idx);
        data->elements.push_back(std::move(found[k].element));
        data->parent.push_back(found[k].parent);
        data->last.push_back(found[k].letter);
        data->length.push_back(level);
        frontier.push_back(idx);
      }
      for (auto [slot, pos] : pending) {
        right[slot] = new_index[pos];
      }
    }
    right.resize(data->elements.size() * ngens, kNoIndex);
    data->right = std::move(right);

    for (auto const& s : seeds) {
      data->generators.push_back(data->index.at(s));
    }

    auto const n = data->elements.size();
    data->left.assign(n * ngens, kNoIndex);
    for (std::size_t g = 0; g < ngens; ++g) {
      data->left[g] = data->generators[g];
    }
    for (std::size_t i = 1; i < n; ++i) {
      auto const p = data->parent[i];
      auto const a = data->last[i];
      for (std::size_t g = 0; g < ngens; ++g) {
        data->left[i * ngens + g]
            = data->right[data->left[p * ngens + g] * ngens + a];
      }
    }

    if (n <= FiniteMonoid::kTableLimit) {
      data->table.assign(n * n, kNoIndex);
      for (std::size_t x = 0; x < n; ++x) {
        auto* row = data->table.data() + x * n;
        row[0]    = static_cast<Index>(x);
        for (std::size_t y = 1; y < n; ++y) {
          row[y] = data->right[row[data->parent[y]] * ngens + data->last[y]];
        }
      }
    }
    return FiniteMonoid(std::move(data));
  }

  FiniteMonoid submonoid(FiniteMonoid const&    M,
                         std::span<Index const> seeds,
                         Index                  identity) {
    auto base = M.rule();
    auto rule = std::make_shared<ProductRule>(*base);
    rule->identity = M.at(identity);
    std::vector<Element> elts;
    for (auto s : seeds) {
      elts.push_back(M.at(s));
    }
    return generate_monoid(elts, rule, M.size());
  }

  std::uint64_t omega_exponent(FiniteMonoid const& M, Index x) {
    Index         y = x;
    std::uint64_t k = 1;
    while (!M.is_idempotent(y)) {
      y = M.multiply(y, x);
      ++k;
    }
    return k;
  }

  Index omega_power(FiniteMonoid const& M, Index x) {
    Index y = x;
    while (!M.is_idempotent(y)) {
      y = M.multiply(y, x);
    }
    return y;
  }

  std::vector<Index> idempotents(FiniteMonoid const& M) {
    std::vector<Index> result;
    for (Index i = 0; i < M.size(); ++i) {
      if (M.is_idempotent(i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  bool is_associative(FiniteMonoid const& M, std::uint64_t seed) {
    auto const& rule = *M.rule();
    auto const& e    = M.elements();
    auto        ok   = [&](Index x, Index y, Index z) {
      return rule.multiply(rule.multiply(e[x], e[y]), e[z])
             == rule.multiply(e[x], rule.multiply(e[y], e[z]));
    };
    auto const n = static_cast<Index>(M.size());
    if (n <= 200) {
      for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
          for (Index z = 0; z < n; ++z) {
            if (!ok(x, y, z)) {
              return false;
            }
          }
        }
      }
      return true;
    }
    Rng rng(seed);
    for (int k = 0; k < 10'000; ++k) {
      auto x = static_cast<Index>(uniform(rng, n));
      auto y = static_cast<Index>(uniform(rng, n));
      auto z = static_cast<Index>(uniform(rng, n));
      if (!ok(x, y, z)) {
        return false;
      }
    }
    return true;
  }

}  // namespace sgkit
