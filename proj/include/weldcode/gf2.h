// Copyright 2026 The Weldcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WELDCODE_GF2_H
#define WELDCODE_GF2_H

#include <optional>
#include <vector>

#include "weldcode/bitvec.h"

namespace weldcode {

/// Row space over GF(2) kept in reduced row echelon form.
///
/// Every stored row has a distinct pivot (its lowest set bit) and every pivot
/// column is zero in all other rows. When `num_items` is nonzero each row also
/// remembers which inserted items it is the sum of, which is how dependency
/// witnesses are produced.
class RowBasis {
   public:
    explicit RowBasis(size_t num_cols, size_t num_items = 0);

    struct InsertResult {
        bool independent;
        /// For a dependent insertion: the inserted items (including the new
        /// one) whose sum is zero. Empty when tracking is disabled.
        std::vector<size_t> dependency;
    };

    /// Inserts `row`, tagging it as item `item` when tracking is enabled.
    InsertResult insert(const BitVector &row, size_t item = 0);

    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const { return reduce(v).none(); }

    size_t rank() const { return rows_.size(); }
    size_t num_cols() const { return num_cols_; }
    const std::vector<BitVector> &rows() const { return rows_; }
    const std::vector<size_t> &pivots() const { return pivots_; }

   private:
    size_t num_cols_;
    size_t num_items_;
    std::vector<BitVector> rows_;
    std::vector<BitVector> combos_;
    std::vector<size_t> pivots_;
};

size_t gf2_rank(const std::vector<BitVector> &rows, size_t num_cols);

/// Basis of {x : r.x = 0 for every row r}, one vector per free column in
/// ascending column order.
std::vector<BitVector> gf2_kernel(const std::vector<BitVector> &rows, size_t num_cols);

/// Solves r_i . x = rhs_i. Free variables are set to zero; returns nullopt when
/// the system is inconsistent.
std::optional<BitVector> gf2_solve(const std::vector<BitVector> &rows, const std::vector<bool> &rhs,
                                   size_t num_cols);

/// Vectors of `superspace` (in order) that extend a basis of `subspace` to a
/// basis of span(subspace + superspace).
std::vector<BitVector> gf2_complement(const std::vector<BitVector> &subspace,
                                      const std::vector<BitVector> &superspace, size_t num_cols);

}  // namespace weldcode

#endif
