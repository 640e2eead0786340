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

#ifndef SGKIT_ROW_MONOMIAL_HPP_
#define SGKIT_ROW_MONOMIAL_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "sgkit/hom.hpp"
#include "sgkit/monoid.hpp"

namespace sgkit {

  //! An n x n matrix over S u {0} with exactly one non-zero entry per row.
  //! Entries are indices into the entry monoid S; zero is never stored.
  class RowMonomialMatrix {
   public:
    struct Row {
      Index column;
      Index value;

      friend bool operator==(Row const&, Row const&) = default;
    };

    //! Throws NotRowMonomial if a column or entry index is out of range.
    RowMonomialMatrix(FiniteMonoid entries, std::vector<Row> rows);

    static RowMonomialMatrix identity(FiniteMonoid const& entries,
                                      std::size_t         n);
    //! Every row has entry `value` in column `column`.
    static RowMonomialMatrix constant_column(FiniteMonoid const& entries,
                                             std::size_t         n,
                                             Index               column,
                                             Index               value);
    //! Diagonal matrix with the given entries.
    static RowMonomialMatrix diagonal(FiniteMonoid const&       entries,
                                      std::vector<Index> const& values);
    //! Throws NotRowMonomial unless `dense` is square with exactly one
    //! present entry per row.
    static RowMonomialMatrix
    from_dense(FiniteMonoid const&                            entries,
               std::vector<std::vector<std::optional<Index>>> const& dense);
    static RowMonomialMatrix from_element(FiniteMonoid const& entries,
                                          Element const&      x);

    std::size_t size() const noexcept {
      return _rows.size();
    }
    FiniteMonoid const& entries() const noexcept {
      return _entries;
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    Index column(std::size_t i) const {
      return _rows.at(i).column;
    }
    Index value(std::size_t i) const {
      return _rows.at(i).value;
    }

    Element to_element() const;
    std::vector<std::vector<std::optional<Index>>> to_dense() const;

    //! Applies f to every entry (f.source() must be the entry monoid).
    RowMonomialMatrix map_entries(MonoidHom const& f) const;

    friend bool operator==(RowMonomialMatrix const& x,
                           RowMonomialMatrix const& y) {
      return x._entries.same_as(y._entries) && x._rows == y._rows;
    }

   private:
    FiniteMonoid     _entries;
    std::vector<Row> _rows;
  };

  //! Row i of XY is (c_Y(c_X(i)), v_X(i) v_Y(c_X(i))). Throws SizeMismatch.
  RowMonomialMatrix rm_multiply(RowMonomialMatrix const& X,
                                RowMonomialMatrix const& Y);

  //! Product rule for n x n row-monomial matrices over `entries`, so that
  //! generate_monoid can close sets of matrices.
  RulePtr row_monomial_rule(FiniteMonoid const& entries, std::size_t n);

  //! (f, t) in S wr (B, T) with B = {0, ..., n - 1}: f gives an entry index
  //! per point, t the image of each point.
  struct WreathElement {
    std::vector<Index> f;
    std::vector<Index> t;

    friend bool operator==(WreathElement const&, WreathElement const&) = default;
  };

  //! The matrix with entry f(i) at row i, column t(i).
  RowMonomialMatrix wreath_to_rm(FiniteMonoid const&  entries,
                                 WreathElement const& w);
  WreathElement     rm_to_wreath(RowMonomialMatrix const& X);

  //! A p x p block row-monomial matrix whose non-zero blocks are b x b
  //! row-monomial matrices over a common entry monoid.
  class BlockRowMonomialMatrix {
   public:
    struct Row {
      Index             column;
      RowMonomialMatrix block;
    };

    //! Throws SizeMismatch unless all blocks have equal size and entry
    //! monoid, and NotRowMonomial for a column out of range.
    explicit BlockRowMonomialMatrix(std::vector<Row> rows);

    std::size_t outer_size() const noexcept {
      return _rows.size();
    }
    std::size_t inner_size() const {
      return _rows.front().block.size();
    }
    std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    Index block_column(std::size_t i) const {
      return _rows.at(i).column;
    }
    RowMonomialMatrix const& block(std::size_t i) const {
      return _rows.at(i).block;
    }

    //! The (p b) x (p b) matrix: row i b + r goes to column
    //! C(i) b + c_i(r) with entry v_i(r).
    RowMonomialMatrix flatten() const;
    //! Inverse of flatten; throws NotRowMonomial if the rows of some block
    //! row do not all land in one block column.
    static BlockRowMonomialMatrix from_flat(RowMonomialMatrix const& X,
                                            std::size_t              b);

   private:
    std::vector<Row> _rows;
  };

  BlockRowMonomialMatrix block_multiply(BlockRowMonomialMatrix const& X,
                                        BlockRowMonomialMatrix const& Y);

}  // namespace sgkit

#endif  // SGKIT_ROW_MONOMIAL_HPP_
