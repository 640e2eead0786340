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

#include "sgkit/row_monomial.hpp"

#include <memory>

#include <fmt/format.h>

#include "sgkit/error.hpp"

namespace sgkit {

  RowMonomialMatrix::RowMonomialMatrix(FiniteMonoid entries, std::vector<Row> rows)
      : _entries(std::move(entries)), _rows(std::move(rows)) {
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (_rows[i].column >= _rows.size()) {
        throw Error(ErrorCode::not_row_monomial,
                    fmt::format("row {} has column {} in a {}x{} matrix",
                                i + 1,
                                _rows[i].column + 1,
                                _rows.size(),
                                _rows.size()));
      }
      if (_rows[i].value >= _entries.size()) {
        throw Error(ErrorCode::not_row_monomial,
                    fmt::format("row {} has an entry outside the entry monoid",
                                i + 1));
      }
    }
  }

  RowMonomialMatrix RowMonomialMatrix::identity(FiniteMonoid const& entries,
                                                std::size_t         n) {
    std::vector<Row> rows(n);
    for (Index i = 0; i < n; ++i) {
      rows[i] = {i, entries.identity()};
    }
    return RowMonomialMatrix(entries, std::move(rows));
  }

  RowMonomialMatrix RowMonomialMatrix::constant_column(FiniteMonoid const& entries,
                                                       std::size_t         n,
                                                       Index               column,
                                                       Index               value) {
    return RowMonomialMatrix(entries, std::vector<Row>(n, Row{column, value}));
  }

  RowMonomialMatrix RowMonomialMatrix::diagonal(FiniteMonoid const&       entries,
                                                std::vector<Index> const& values) {
    std::vector<Row> rows(values.size());
    for (Index i = 0; i < values.size(); ++i) {
      rows[i] = {i, values[i]};
    }
    return RowMonomialMatrix(entries, std::move(rows));
  }

  RowMonomialMatrix RowMonomialMatrix::from_dense(
      FiniteMonoid const&                                   entries,
      std::vector<std::vector<std::optional<Index>>> const& dense) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].size() != dense.size()) {
        throw Error(ErrorCode::not_row_monomial,
                    fmt::format("row {} has {} entries in a {}-row matrix",
                                i + 1,
                                dense[i].size(),
                                dense.size()));
      }
      std::optional<Row> row;
      for (Index j = 0; j < dense[i].size(); ++j) {
        if (dense[i][j]) {
          if (row) {
            throw Error(ErrorCode::not_row_monomial,
                        fmt::format("row {} has two non-zero entries", i + 1));
          }
          row = Row{j, *dense[i][j]};
        }
      }
      if (!row) {
        throw Error(ErrorCode::not_row_monomial,
                    fmt::format("row {} is zero", i + 1));
      }
      rows.push_back(*row);
    }
    return RowMonomialMatrix(entries, std::move(rows));
  }

  RowMonomialMatrix RowMonomialMatrix::from_element(FiniteMonoid const& entries,
                                                    Element const&      x) {
    if (x.kind() != ElementKind::row_monomial || x.code().size() % 2 != 0) {
      throw Error(ErrorCode::not_row_monomial,
                  fmt::format("{} is not a row-monomial matrix", to_string(x)));
    }
    std::vector<Row> rows(x.code().size() / 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = {x.code()[2 * i], x.code()[2 * i + 1]};
    }
    return RowMonomialMatrix(entries, std::move(rows));
  }

  Element RowMonomialMatrix::to_element() const {
    std::vector<Element::value_type> code;
    code.reserve(2 * _rows.size());
    for (auto const& r : _rows) {
      code.push_back(r.column);
      code.push_back(r.value);
    }
    return Element(ElementKind::row_monomial, std::move(code));
  }

  std::vector<std::vector<std::optional<Index>>> RowMonomialMatrix::to_dense() const {
    std::vector<std::vector<std::optional<Index>>> out(
        size(), std::vector<std::optional<Index>>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      out[i][_rows[i].column] = _rows[i].value;
    }
    return out;
  }

  RowMonomialMatrix RowMonomialMatrix::map_entries(MonoidHom const& f) const {
    if (!f.source().same_as(_entries)) {
      throw Error(ErrorCode::size_mismatch,
                  "map does not start at the entry monoid");
    }
    std::vector<Row> rows = _rows;
    for (auto& r : rows) {
      r.value = f(r.value);
    }
    return RowMonomialMatrix(f.target(), std::move(rows));
  }

  RowMonomialMatrix rm_multiply(RowMonomialMatrix const& X,
                                RowMonomialMatrix const& Y) {
    if (X.size() != Y.size() || !X.entries().same_as(Y.entries())) {
      throw Error(ErrorCode::size_mismatch,
                  fmt::format("cannot multiply a {}x{} by a {}x{} matrix over "
                              "the same or different entry monoids",
                              X.size(),
                              X.size(),
                              Y.size(),
                              Y.size()));
    }
    auto const&                        S = X.entries();
    std::vector<RowMonomialMatrix::Row> rows(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) {
      auto c  = X.column(i);
      rows[i] = {Y.column(c), S.multiply(X.value(i), Y.value(c))};
    }
    return RowMonomialMatrix(S, std::move(rows));
  }

  RulePtr row_monomial_rule(FiniteMonoid const& entries, std::size_t n) {
    auto rule      = std::make_shared<ProductRule>();
    rule->identity = RowMonomialMatrix::identity(entries, n).to_element();
    rule->multiply = [entries](Element const& x, Element const& y) {
      auto const& a = x.code();
      auto const& b = y.code();
      std::vector<Element::value_type> code(a.size());
      for (std::size_t i = 0; i < a.size(); i += 2) {
        auto c      = a[i];
        code[i]     = b[2 * c];
        code[i + 1] = entries.multiply(a[i + 1], b[2 * c + 1]);
      }
      return Element(ElementKind::row_monomial, std::move(code));
    };
    rule->valid = [n, size = entries.size()](Element const& x) {
      if (x.kind() != ElementKind::row_monomial || x.code().size() != 2 * n) {
        return false;
      }
      for (std::size_t i = 0; i < 2 * n; i += 2) {
        if (x.code()[i] >= n || x.code()[i + 1] >= size) {
          return false;
        }
      }
      return true;
    };
    rule->format = [entries](Element const& x) {
      std::string out = "{";
      for (std::size_t i = 0; i < x.code().size(); i += 2) {
        out += fmt::format("{}{}:{}",
                           i == 0 ? "" : "; ",
                           x.code()[i] + 1,
                           entries.format(x.code()[i + 1]));
      }
      return out + "}";
    };
    return rule;
  }

  RowMonomialMatrix wreath_to_rm(FiniteMonoid const&  entries,
                                 WreathElement const& w) {
    if (w.f.size() != w.t.size()) {
      throw Error(ErrorCode::size_mismatch,
                  "wreath element with mismatched function and transformation");
    }
    std::vector<RowMonomialMatrix::Row> rows(w.t.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = {w.t[i], w.f[i]};
    }
    return RowMonomialMatrix(entries, std::move(rows));
  }

  WreathElement rm_to_wreath(RowMonomialMatrix const& X) {
    WreathElement w;
    for (auto const& r : X.rows()) {
      w.f.push_back(r.value);
      w.t.push_back(r.column);
    }
    return w;
  }

  BlockRowMonomialMatrix::BlockRowMonomialMatrix(std::vector<Row> rows)
      : _rows(std::move(rows)) {
    if (_rows.empty()) {
      throw Error(ErrorCode::size_mismatch, "empty block matrix");
    }
    auto const& first = _rows.front().block;
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (_rows[i].column >= _rows.size()) {
        throw Error(ErrorCode::not_row_monomial,
                    fmt::format("block row {} has block column {}",
                                i + 1,
                                _rows[i].column + 1));
      }
      if (_rows[i].block.size() != first.size()
          || !_rows[i].block.entries().same_as(first.entries())) {
        throw Error(ErrorCode::size_mismatch,
                    fmt::format("block {} differs in shape from block 1", i + 1));
      }
    }
  }

  RowMonomialMatrix BlockRowMonomialMatrix::flatten() const {
    auto const                          b = inner_size();
    std::vector<RowMonomialMatrix::Row> rows;
    rows.reserve(outer_size() * b);
    for (auto const& [column, block] : _rows) {
      for (std::size_t r = 0; r < b; ++r) {
        rows.push_back({static_cast<Index>(column * b + block.column(r)),
                        block.value(r)});
      }
    }
    return RowMonomialMatrix(_rows.front().block.entries(), std::move(rows));
  }

  BlockRowMonomialMatrix BlockRowMonomialMatrix::from_flat(RowMonomialMatrix const& X,
                                                           std::size_t              b) {
    if (b == 0 || X.size() % b != 0) {
      throw Error(ErrorCode::size_mismatch,
                  fmt::format("{} rows do not split into blocks of {}", X.size(), b));
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < X.size() / b; ++i) {
      auto const                          col = X.column(i * b) / b;
      std::vector<RowMonomialMatrix::Row> inner;
      for (std::size_t r = 0; r < b; ++r) {
        auto const& row = X.rows()[i * b + r];
        if (row.column / b != col) {
          throw Error(ErrorCode::not_row_monomial,
                      fmt::format("block row {} meets two block columns", i + 1));
        }
        inner.push_back({static_cast<Index>(row.column % b), row.value});
      }
      rows.push_back(
          {static_cast<Index>(col), RowMonomialMatrix(X.entries(), std::move(inner))});
    }
    return BlockRowMonomialMatrix(std::move(rows));
  }

  BlockRowMonomialMatrix block_multiply(BlockRowMonomialMatrix const& X,
                                        BlockRowMonomialMatrix const& Y) {
    if (X.outer_size() != Y.outer_size()) {
      throw Error(ErrorCode::size_mismatch, "block matrices of different sizes");
    }
    std::vector<BlockRowMonomialMatrix::Row> rows;
    for (std::size_t i = 0; i < X.outer_size(); ++i) {
      auto c = X.block_column(i);
      rows.push_back({Y.block_column(c), rm_multiply(X.block(i), Y.block(c))});
    }
    return BlockRowMonomialMatrix(std::move(rows));
  }

}  // namespace sgkit
