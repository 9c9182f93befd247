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


#include "weldcode/energy.h"

#include <algorithm>
#include <numeric>

#include "weldcode/bottleneck.h"
#include "weldcode/builders.h"
#include "weldcode/errors.h"
#include "weldcode/gf2.h"
#include "weldcode/graph.h"

namespace weldcode {

WalkResult walk_barrier(const CssCode &code, const PauliWalk &walk) {
    size_t n = code.n();
    PauliOperator acc(n);
    std::vector<bool> violated_x(code.gens(PauliKind::X).size(), false);
    std::vector<bool> violated_z(code.gens(PauliKind::Z).size(), false);
    size_t count = 0, barrier = 0;
    for (auto [q, kind] : walk.steps) {
        if (q >= n) {
            throw ValidationError("walk step on qubit " + std::to_string(q) + " but n=" + std::to_string(n));
        }
        // A single-qubit kind error flips the opposite-kind checks that touch q.
        PauliKind checks = opposite(kind);
        auto &violated = checks == PauliKind::X ? violated_x : violated_z;
        const auto &gens = code.gens(checks);
        for (size_t g = 0; g < gens.size(); g++) {
            if (gens[g].bits(checks).get(q)) {
                violated[g] = !violated[g];
                count += violated[g] ? 1 : -1;
            }
        }
        acc *= PauliOperator::from_support(n, kind, {q});
        barrier = std::max(barrier, count);
    }
    return {barrier, acc};
}

std::string method_name(BarrierMethod m) { return m == BarrierMethod::kExact ? "exact" : "parity_bound"; }

namespace {

BarrierResult coset_barrier(const CssCode &code, const BitVector &target, PauliKind kind, bool quotient,
                            uint64_t max_states) {
    size_t n = code.n();
    RowBasis stab(n);
    if (quotient) {
        for (const auto &g : code.gens(kind)) {
            stab.insert(g.bits(kind));
        }
    }
    std::vector<size_t> pivot_row(n, SIZE_MAX);
    for (size_t i = 0; i < stab.rank(); i++) {
        pivot_row[stab.pivots()[i]] = i;
    }
    std::vector<size_t> free_cols, pos(n, SIZE_MAX);
    for (size_t q = 0; q < n; q++) {
        if (pivot_row[q] == SIZE_MAX) {
            pos[q] = free_cols.size();
            free_cols.push_back(q);
        }
    }
    size_t m = free_cols.size();
    if (m > 32 || (uint64_t{1} << m) > max_states) {
        throw FeasibilityError("barrier search needs 2^" + std::to_string(m) + " cosets, cap is " +
                               std::to_string(max_states));
    }
    auto state_of = [&](const BitVector &bits) {
        BitVector r = stab.reduce(bits);
        uint64_t s = 0;
        for (size_t q : r.ones()) {
            s |= uint64_t{1} << pos[q];
        }
        return s;
    };

    PauliKind checks = opposite(kind);
    const auto &gens = code.gens(checks);
    BottleneckProblem problem;
    problem.num_bits = static_cast<unsigned>(m);
    for (size_t q : free_cols) {
        BitVector col(gens.size());
        for (size_t g = 0; g < gens.size(); g++) {
            col.set(g, gens[g].bits(checks).get(q));
        }
        problem.columns.push_back(std::move(col));
    }
    std::vector<size_t> move_qubit;
    std::vector<uint64_t> seen;
    for (size_t q = 0; q < n; q++) {
        BitVector single(n);
        single.set(q);
        uint64_t mask = state_of(single);
        // Flips that only multiply by a stabilizer, or repeat an earlier
        // qubit's effect, add nothing.
        if (mask == 0 || std::find(seen.begin(), seen.end(), mask) != seen.end()) {
            continue;
        }
        seen.push_back(mask);
        problem.moves.push_back(mask);
        move_qubit.push_back(q);
    }
    problem.target = state_of(target);
    BottleneckPath path = bottleneck_search(problem);

    BarrierResult out;
    out.barrier = path.value;
    out.method = BarrierMethod::kExact;
    out.states_explored = path.states_explored;
    for (size_t k : path.moves) {
        out.witness.steps.emplace_back(move_qubit[k], kind);
    }
    return out;
}

}  // namespace

BarrierResult exact_barrier(const CssCode &code, size_t logical_index, PauliKind kind, uint64_t max_states) {
    if (logical_index >= code.logicals().size()) {
        throw ValidationError("code has no promoted logical " + std::to_string(logical_index));
    }
    const PauliOperator &rep = code.logicals()[logical_index].rep(kind);
    return coset_barrier(code, rep.bits(kind), kind, true, max_states);
}

BarrierResult exact_barrier_fixed(const CssCode &code, const PauliOperator &op, PauliKind kind,
                                  uint64_t max_states) {
    if (op.n() != code.n() || !op.is_pure(kind)) {
        throw ValidationError("fixed barrier target must be a pure " + std::string(1, kind_char(kind)) +
                              " operator on " + std::to_string(code.n()) + " qubits");
    }
    return coset_barrier(code, op.bits(kind), kind, false, max_states);
}

BarrierResult parity_lower_bound(const FlatRegionGraph &regions, const PauliOperator &logical_rep) {
    size_t nb = regions.boundaries.size();
    if (nb > kMaxParityBoundaries) {
        throw FeasibilityError("parity bound has " + std::to_string(nb) + " boundaries, cap is " +
                               std::to_string(kMaxParityBoundaries));
    }
    PauliKind error_kind = regions.error_kind();
    const BitVector &bits = logical_rep.bits(error_kind);
    BottleneckProblem problem;
    problem.num_bits = static_cast<unsigned>(nb);
    problem.columns.assign(nb, BitVector(regions.regions.size()));
    for (size_t r = 0; r < regions.incidence.size(); r++) {
        for (size_t b : regions.incidence[r]) {
            problem.columns[b].flip(r);
        }
    }
    for (size_t b = 0; b < nb; b++) {
        problem.moves.push_back(uint64_t{1} << b);
        size_t parity = 0;
        for (size_t q : regions.boundaries[b].qubits) {
            if (q >= bits.size()) {
                throw ValidationError("boundary qubit " + std::to_string(q) + " outside the logical");
            }
            parity ^= bits.get(q);
        }
        if (parity) {
            problem.target |= uint64_t{1} << b;
        }
    }
    BottleneckPath path = bottleneck_search(problem);
    BarrierResult out;
    out.barrier = path.value;
    out.method = BarrierMethod::kParityBound;
    out.states_explored = path.states_explored;
    for (size_t k : path.moves) {
        const QubitSet &qs = regions.boundaries[k].qubits;
        out.witness.steps.emplace_back(qs.empty() ? 0 : *qs.begin(), error_kind);
    }
    return out;
}

namespace {

const FlatRegionGraph &regions_for(const CssCode &code, PauliKind walk_kind) {
    if (!code.regions()) {
        throw ValidationError("code has no flat-region metadata");
    }
    return code.regions()->for_particle(opposite(walk_kind));
}

}  // namespace

BoundReport verify_bound(const CssCode &code, size_t logical_index, PauliKind kind, uint64_t max_states) {
    if (logical_index >= code.logicals().size()) {
        throw ValidationError("code has no promoted logical " + std::to_string(logical_index));
    }
    BarrierResult bound = parity_lower_bound(regions_for(code, kind), code.logicals()[logical_index].rep(kind));
    BarrierResult exact = exact_barrier(code, logical_index, kind, max_states);
    BoundReport r;
    r.bound = bound.barrier;
    r.exact = exact.barrier;
    r.holds = r.bound <= r.exact;
    r.saturated = r.bound == r.exact;
    if (r.saturated) {
        r.witness = exact.witness;
    }
    return r;
}

WeldInvarianceReport barrier_unchanged_by_rough_welds(const CssCode &base, const CssCode &welded,
                                                      uint64_t max_states) {
    if (base.logicals().empty() || welded.logicals().empty()) {
        throw ValidationError("both solids need a promoted logical");
    }
    WeldInvarianceReport r;
    r.bound_base = parity_lower_bound(regions_for(base, PauliKind::X), base.logicals()[0].x_rep).barrier;
    r.bound_welded = parity_lower_bound(regions_for(welded, PauliKind::X), welded.logicals()[0].x_rep).barrier;
    auto try_exact = [&](const CssCode &c) -> std::optional<size_t> {
        try {
            return exact_barrier(c, 0, PauliKind::X, max_states).barrier;
        } catch (const FeasibilityError &) {
            return std::nullopt;
        }
    };
    r.exact_base = try_exact(base);
    r.exact_welded = try_exact(welded);
    r.equal = r.bound_base == r.bound_welded;
    if (r.exact_base && r.exact_welded) {
        r.equal = r.equal && *r.exact_base == *r.exact_welded;
    }
    return r;
}

Fraction::Fraction(long long n, long long d) {
    if (d == 0) {
        throw std::invalid_argument("fraction with zero denominator");
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Fraction::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Fraction operator+(Fraction a, Fraction b) { return Fraction(a.num * b.den + b.num * a.den, a.den * b.den); }
Fraction operator*(Fraction a, Fraction b) { return Fraction(a.num * b.num, a.den * b.den); }
Fraction operator/(Fraction a, Fraction b) { return Fraction(a.num * b.den, a.den * b.num); }
bool operator<(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }

size_t scaling_qubits(size_t d, size_t R) {
    SolidSpec s{d, d, d, false};
    if (R == 1) {
        return solid_num_qubits(s);
    }
    if (d < 2) {
        throw ValidationError("welded solids need d >= 2");
    }
    return welded_solid_num_qubits(WeldGraph::cubic(R, R, R), s);
}

ScalingPlan tune_scaling(ScalingBudget budget) {
    if (budget.value == 0) {
        throw ValidationError("scaling budget must be positive");
    }
    ScalingPlan plan;
    // With d = R^alpha: N ~ d^3 R^3 = R^(3(1+alpha)) and L = dR = R^(1+alpha).
    // The string barrier goes like R^2, the membrane like d = R^alpha; they
    // balance at alpha = 2.
    plan.alpha = Fraction(2);
    Fraction one(1), three(3);
    Fraction n_exp = three * (one + plan.alpha);
    plan.z_barrier_exponent_N = Fraction(2) / n_exp;
    plan.x_barrier_exponent_N = plan.alpha / n_exp;
    plan.barrier_exponent_N = std::min(plan.z_barrier_exponent_N, plan.x_barrier_exponent_N);
    plan.barrier_exponent_L = plan.barrier_exponent_N * three;
    // min(d^2, d R^3) in units of L = R^(1+alpha).
    Fraction d2 = Fraction(2) * plan.alpha, dr3 = plan.alpha + three;
    plan.distance_exponent_L = std::min(d2, dr3) / (one + plan.alpha);

    auto score = [](size_t d, size_t R) { return std::min(d, R * R); };
    bool found = false;
    for (size_t R = 1;; R++) {
        // Welded solids need two disjoint rough boundaries, so d >= 2 once R >= 2.
        size_t d_min = R == 1 ? 1 : 2;
        size_t d = 0;
        if (budget.kind == ScalingBudget::Kind::kSide) {
            if (R > budget.value) {
                break;
            }
            d = budget.value / R;
            if (d < d_min) {
                break;
            }
        } else {
            if (scaling_qubits(d_min, R) > budget.value) {
                break;
            }
            d = d_min;
            while (scaling_qubits(d + 1, R) <= budget.value) {
                d++;
            }
        }
        if (!found || score(d, R) > score(plan.d, plan.R) ||
            (score(d, R) == score(plan.d, plan.R) && d * R > plan.d * plan.R)) {
            plan.d = d;
            plan.R = R;
            found = true;
        }
    }
    if (!found) {
        throw ValidationError("budget " + std::to_string(budget.value) + " is too small for d = R = 1");
    }
    plan.L = plan.d * plan.R;
    plan.N = scaling_qubits(plan.d, plan.R);
    plan.predicted_z_barrier = plan.R * plan.R;
    plan.predicted_x_barrier = plan.d;
    return plan;
}

}  // namespace weldcode
