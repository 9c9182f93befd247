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


#ifndef WELDCODE_ENERGY_H
#define WELDCODE_ENERGY_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weldcode/css.h"
#include "weldcode/regions.h"

namespace weldcode {

struct PauliWalk {
    std::vector<std::pair<size_t, PauliKind>> steps;

    bool operator==(const PauliWalk &other) const = default;
};

struct WalkResult {
    size_t barrier;
    PauliOperator final_op;
};

/// Largest number of violated generators over all prefixes of the walk
/// (including the empty one).
WalkResult walk_barrier(const CssCode &code, const PauliWalk &walk);

enum class BarrierMethod { kExact, kParityBound };
std::string method_name(BarrierMethod m);

struct BarrierResult {
    size_t barrier = 0;
    PauliWalk witness;
    BarrierMethod method = BarrierMethod::kExact;
    uint64_t states_explored = 0;
};

inline constexpr uint64_t kDefaultMaxStates = uint64_t{1} << 22;

/// Minimum barrier over `kind` walks ending anywhere in the coset of the
/// logical's `kind` representative modulo the `kind` stabilizers.
BarrierResult exact_barrier(const CssCode &code, size_t logical_index, PauliKind kind,
                            uint64_t max_states = kDefaultMaxStates);

/// Minimum barrier over walks ending exactly at `op` (no stabilizer freedom).
BarrierResult exact_barrier_fixed(const CssCode &code, const PauliOperator &op, PauliKind kind,
                                  uint64_t max_states = kDefaultMaxStates);

inline constexpr size_t kMaxParityBoundaries = 24;

/// Ising-type lower bound: boundaries are spins, each region costs one when
/// an odd number of its boundaries are flipped. Targets come from the parity
/// of `logical_rep` on each boundary. The witness flips the first qubit of
/// each boundary, with the kind that creates `regions.particle_type`.
BarrierResult parity_lower_bound(const FlatRegionGraph &regions, const PauliOperator &logical_rep);

struct BoundReport {
    size_t bound;
    size_t exact;
    bool holds;
    bool saturated;
    /// The exact witness, reported when the bound is saturated.
    std::optional<PauliWalk> witness;
};

/// Compares the parity bound from the code's region metadata with the exact
/// barrier of logical `logical_index` for `kind` walks.
BoundReport verify_bound(const CssCode &code, size_t logical_index, PauliKind kind,
                         uint64_t max_states = kDefaultMaxStates);

struct WeldInvarianceReport {
    size_t bound_base;
    size_t bound_welded;
    std::optional<size_t> exact_base;
    std::optional<size_t> exact_welded;
    bool equal;
};

/// X membrane barrier of a solid against a rough-welded assembly of copies.
/// Exact values are filled in when the search fits in `max_states`.
WeldInvarianceReport barrier_unchanged_by_rough_welds(const CssCode &base_solid, const CssCode &welded_solid,
                                                      uint64_t max_states = kDefaultMaxStates);

/// Exact rational, always normalized with a positive denominator.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d = 1);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    bool operator==(const Fraction &other) const = default;
};
Fraction operator+(Fraction a, Fraction b);
Fraction operator*(Fraction a, Fraction b);
Fraction operator/(Fraction a, Fraction b);
bool operator<(Fraction a, Fraction b);

/// Planning output for welded solids on a cubic R x R x R weld graph. The
/// exponents treat the asymptotic claims as exact power laws.
struct ScalingPlan {
    Fraction alpha;
    size_t d = 0;
    size_t R = 0;
    size_t L = 0;
    size_t N = 0;
    /// Z string barrier grows like R^2, X membrane like d.
    Fraction z_barrier_exponent_N;
    Fraction x_barrier_exponent_N;
    Fraction barrier_exponent_N;
    Fraction barrier_exponent_L;
    Fraction distance_exponent_L;
    size_t predicted_z_barrier = 0;
    size_t predicted_x_barrier = 0;
};

struct ScalingBudget {
    enum class Kind { kSide, kQubits } kind;
    size_t value;
};

/// Exact qubit count of the welded solid for (d, R); R = 1 is a single solid.
size_t scaling_qubits(size_t d, size_t R);

ScalingPlan tune_scaling(ScalingBudget budget);

}  // namespace weldcode

#endif
