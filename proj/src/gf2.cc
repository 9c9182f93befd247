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

#include "weldcode/gf2.h"

#include <algorithm>

namespace weldcode {

RowBasis::RowBasis(size_t num_cols, size_t num_items) : num_cols_(num_cols), num_items_(num_items) {}

BitVector RowBasis::reduce(BitVector v) const {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

RowBasis::InsertResult RowBasis::insert(const BitVector &row, size_t item) {
    BitVector v = row;
    BitVector combo(num_items_);
    if (num_items_) {
        combo.set(item);
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
            if (num_items_) {
                combo ^= combos_[i];
            }
        }
    }
    if (v.none()) {
        return {false, combo.ones()};
    }
    size_t pivot = v.first_set();
    // Keep the basis fully reduced: clear the new pivot column elsewhere.
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].get(pivot)) {
            rows_[i] ^= v;
            if (num_items_) {
                combos_[i] ^= combo;
            }
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    if (num_items_) {
        combos_.push_back(std::move(combo));
    }
    return {true, {}};
}

size_t gf2_rank(const std::vector<BitVector> &rows, size_t num_cols) {
    RowBasis basis(num_cols);
    for (const auto &r : rows) {
        basis.insert(r);
    }
    return basis.rank();
}

std::vector<BitVector> gf2_kernel(const std::vector<BitVector> &rows, size_t num_cols) {
    RowBasis basis(num_cols);
    for (const auto &r : rows) {
        basis.insert(r);
    }
    std::vector<bool> is_pivot(num_cols, false);
    for (size_t p : basis.pivots()) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> out;
    for (size_t f = 0; f < num_cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector x(num_cols);
        x.set(f);
        for (size_t i = 0; i < basis.rank(); i++) {
            if (basis.rows()[i].get(f)) {
                x.set(basis.pivots()[i]);
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<BitVector> gf2_solve(const std::vector<BitVector> &rows, const std::vector<bool> &rhs,
                                   size_t num_cols) {
    // Augmented column sits at index num_cols; it is never chosen as a pivot
    // unless the system is inconsistent, because pivots are lowest set bits.
    RowBasis basis(num_cols + 1);
    for (size_t i = 0; i < rows.size(); i++) {
        BitVector aug(num_cols + 1);
        for (size_t k : rows[i].ones()) {
            aug.set(k);
        }
        aug.set(num_cols, rhs[i]);
        basis.insert(aug);
    }
    BitVector x(num_cols);
    for (size_t i = 0; i < basis.rank(); i++) {
        size_t p = basis.pivots()[i];
        if (p == num_cols) {
            return std::nullopt;
        }
        if (basis.rows()[i].get(num_cols)) {
            x.set(p);
        }
    }
    return x;
}

std::vector<BitVector> gf2_complement(const std::vector<BitVector> &subspace,
                                      const std::vector<BitVector> &superspace, size_t num_cols) {
    RowBasis basis(num_cols);
    for (const auto &r : subspace) {
        basis.insert(r);
    }
    std::vector<BitVector> out;
    for (const auto &r : superspace) {
        if (basis.insert(r).independent) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace weldcode
