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


#ifndef WELDCODE_PAULI_H
#define WELDCODE_PAULI_H

#include <string>
#include <string_view>
#include <vector>

#include "weldcode/bitvec.h"

namespace weldcode {

enum class PauliKind { X, Z };

inline char kind_char(PauliKind k) { return k == PauliKind::X ? 'X' : 'Z'; }
inline PauliKind opposite(PauliKind k) { return k == PauliKind::X ? PauliKind::Z : PauliKind::X; }
PauliKind parse_kind(std::string_view s);

/// Strictly increasing list of qubit indices.
class QubitSet {
   public:
    QubitSet() = default;
    /// Sorts and removes duplicates.
    QubitSet(std::vector<size_t> indices);
    QubitSet(std::initializer_list<size_t> indices) : QubitSet(std::vector<size_t>(indices)) {}

    size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    bool contains(size_t q) const;
    const std::vector<size_t> &indices() const { return indices_; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }
    size_t operator[](size_t i) const { return indices_[i]; }

    /// Indicator vector on n qubits. Throws ValidationError if an index is >= n.
    BitVector mask(size_t n) const;

    bool operator==(const QubitSet &other) const = default;

   private:
    std::vector<size_t> indices_;
};

/// Phase-free n-qubit Pauli operator.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t n) : x_(n), z_(n) {}
    PauliOperator(BitVector x_bits, BitVector z_bits);

    static PauliOperator from_support(size_t n, PauliKind kind, const std::vector<size_t> &support);
    static PauliOperator from_bits(PauliKind kind, BitVector bits);

    /// Accepts dense ("XIYZ", '_' allowed for I) or sparse ("n=5; X:0,1; Z:3,4; Y:2").
    static PauliOperator parse(std::string_view text);

    size_t n() const { return x_.size(); }
    const BitVector &x_bits() const { return x_; }
    const BitVector &z_bits() const { return z_; }
    /// The bits of the requested kind.
    const BitVector &bits(PauliKind kind) const { return kind == PauliKind::X ? x_ : z_; }

    bool is_identity() const { return x_.none() && z_.none(); }
    bool is_pure(PauliKind kind) const { return kind == PauliKind::X ? z_.none() : x_.none(); }
    size_t weight() const { return (x_ | z_).popcount(); }
    QubitSet support() const;

    /// Dense for n <= 64, sparse otherwise.
    std::string str() const;
    std::string dense_str() const;
    std::string sparse_str() const;

    PauliOperator &operator*=(const PauliOperator &other);
    bool operator==(const PauliOperator &other) const = default;

   private:
    BitVector x_;
    BitVector z_;
};

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);
inline PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) { return multiply(a, b); }

/// Symplectic form x_a.z_b + z_a.x_b mod 2.
bool symplectic(const PauliOperator &a, const PauliOperator &b);
bool commutes(const PauliOperator &a, const PauliOperator &b);

/// p with every factor outside `support` replaced by identity.
PauliOperator restrict_theta(const PauliOperator &p, const QubitSet &support);
/// Restriction of p to the shared (welded) qubits.
PauliOperator weld_restrict(const PauliOperator &p, const QubitSet &shared);

size_t weight(const PauliOperator &p);

/// Moves qubit q of p to map[q] on `new_n` qubits.
PauliOperator embed_operator(const PauliOperator &p, const std::vector<size_t> &map, size_t new_n);

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

}  // namespace weldcode

#endif
