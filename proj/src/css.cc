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


#include "weldcode/css.h"

#include <algorithm>

#include "weldcode/errors.h"
#include "weldcode/gf2.h"

namespace weldcode {

namespace {

std::string gen_name(PauliKind k, size_t i) {
    return std::string(k == PauliKind::X ? "x_gens[" : "z_gens[") + std::to_string(i) + "]";
}

RowBasis basis_of(const std::vector<BitVector> &rows, size_t n) {
    RowBasis b(n);
    for (const auto &r : rows) {
        b.insert(r);
    }
    return b;
}

PauliKind pure_kind(const PauliOperator &p, const char *what) {
    if (p.is_identity()) {
        throw ValidationError(std::string(what) + " is the identity");
    }
    if (p.is_pure(PauliKind::X)) {
        return PauliKind::X;
    }
    if (p.is_pure(PauliKind::Z)) {
        return PauliKind::Z;
    }
    throw ValidationError(std::string(what) + " is not a pure X or pure Z operator");
}

void check_logicals(const GeneratingSet &gens, const std::vector<LogicalClass> &logicals) {
    for (size_t c = 0; c < logicals.size(); c++) {
        const auto &lc = logicals[c];
        for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
            const auto &rep = lc.rep(k);
            if (rep.n() != gens.n || !rep.is_pure(k) || rep.is_identity()) {
                throw ValidationError("logical class " + std::to_string(c) + " has a malformed " + kind_char(k) +
                                      " representative");
            }
            for (const auto &g : gens.of(opposite(k))) {
                if (!commutes(g, rep)) {
                    throw ValidationError("logical class " + std::to_string(c) + " " + kind_char(k) +
                                          " representative anticommutes with a generator");
                }
            }
            if (in_group(gens, rep)) {
                throw ValidationError("logical class " + std::to_string(c) + " " + kind_char(k) +
                                      " representative is a stabilizer");
            }
        }
        for (size_t d = 0; d < logicals.size(); d++) {
            bool anti = symplectic(lc.x_rep, logicals[d].z_rep);
            if (anti != (c == d)) {
                throw ValidationError("logical classes " + std::to_string(c) + " and " + std::to_string(d) +
                                      " do not pair up");
            }
        }
    }
}

}  // namespace

std::vector<BitVector> GeneratingSet::rows(PauliKind k) const {
    std::vector<BitVector> out;
    for (const auto &g : of(k)) {
        out.push_back(g.bits(k));
    }
    return out;
}

ValidationReport validate(const GeneratingSet &gens) {
    for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
        const auto &list = gens.of(k);
        for (size_t i = 0; i < list.size(); i++) {
            if (list[i].n() != gens.n) {
                return {false, gen_name(k, i) + " has the wrong qubit count", {{k, i}}};
            }
            if (!list[i].is_pure(k)) {
                return {false, gen_name(k, i) + " is not pure " + kind_char(k), {{k, i}}};
            }
        }
    }
    for (size_t i = 0; i < gens.x_gens.size(); i++) {
        for (size_t j = 0; j < gens.z_gens.size(); j++) {
            if (gens.x_gens[i].x_bits().dot(gens.z_gens[j].z_bits())) {
                return {false, gen_name(PauliKind::X, i) + " and " + gen_name(PauliKind::Z, j) + " anticommute",
                        {{PauliKind::X, i}, {PauliKind::Z, j}}};
            }
        }
    }
    return {};
}

CssCode::CssCode(GeneratingSet gens, std::vector<LogicalClass> logicals, std::shared_ptr<const RegionMetadata> regions)
    : gens_(std::move(gens)), logicals_(std::move(logicals)), regions_(std::move(regions)) {
    auto report = validate(gens_);
    if (!report.ok) {
        throw ValidationError(report.message);
    }
    check_logicals(gens_, logicals_);
}

CssCode CssCode::with_regions(std::shared_ptr<const RegionMetadata> regions) const {
    CssCode out = *this;
    out.regions_ = std::move(regions);
    return out;
}

size_t rank_gf2(const GeneratingSet &gens, PauliKind k) { return gf2_rank(gens.rows(k), gens.n); }

size_t rank_gf2(const GeneratingSet &gens) { return rank_gf2(gens, PauliKind::X) + rank_gf2(gens, PauliKind::Z); }

size_t encoded_qubits(const GeneratingSet &gens) { return gens.n - rank_gf2(gens); }

size_t encoded_qubits(const CssCode &code) { return encoded_qubits(code.gens()); }

bool groups_equal(const GeneratingSet &a, const GeneratingSet &b) {
    if (a.n != b.n) {
        throw ValidationError("cannot compare groups on " + std::to_string(a.n) + " and " + std::to_string(b.n) +
                              " qubits");
    }
    for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
        RowBasis ba = basis_of(a.rows(k), a.n);
        RowBasis bb = basis_of(b.rows(k), b.n);
        if (ba.rank() != bb.rank()) {
            return false;
        }
        for (const auto &r : bb.rows()) {
            if (!ba.contains(r)) {
                return false;
            }
        }
    }
    return true;
}

bool in_group(const GeneratingSet &gens, const PauliOperator &p) {
    if (p.n() != gens.n) {
        throw ValidationError("operator has the wrong qubit count");
    }
    return basis_of(gens.rows(PauliKind::X), gens.n).contains(p.x_bits()) &&
           basis_of(gens.rows(PauliKind::Z), gens.n).contains(p.z_bits());
}

Syndrome syndrome(const CssCode &code, const PauliOperator &error) {
    if (error.n() != code.n()) {
        throw ValidationError("error has the wrong qubit count");
    }
    Syndrome s;
    const auto &xg = code.gens(PauliKind::X);
    for (size_t i = 0; i < xg.size(); i++) {
        if (xg[i].x_bits().dot(error.z_bits())) {
            s.violated_x.push_back(i);
        }
    }
    const auto &zg = code.gens(PauliKind::Z);
    for (size_t i = 0; i < zg.size(); i++) {
        if (zg[i].z_bits().dot(error.x_bits())) {
            s.violated_z.push_back(i);
        }
    }
    return s;
}

PauliOperator anticommuting_partner(const CssCode &code, const PauliOperator &logical_rep) {
    if (logical_rep.n() != code.n()) {
        throw ValidationError("logical representative has the wrong qubit count");
    }
    PauliKind k = pure_kind(logical_rep, "logical representative");
    PauliKind pk = opposite(k);
    const auto &g = code.gens();
    for (const auto &h : g.of(pk)) {
        if (!commutes(h, logical_rep)) {
            throw ValidationError("operator is not a logical: it anticommutes with a generator");
        }
    }
    // Rows: same-kind generators and other classes' same-kind reps (all rhs 0),
    // then the representative itself (rhs 1).
    std::vector<BitVector> rows = g.rows(k);
    RowBasis with_rep = basis_of(rows, g.n);
    with_rep.insert(logical_rep.bits(k));
    for (const auto &lc : code.logicals()) {
        if (!with_rep.contains(lc.rep(k).bits(k))) {
            rows.push_back(lc.rep(k).bits(k));
        }
    }
    std::vector<bool> rhs(rows.size(), false);
    rows.push_back(logical_rep.bits(k));
    rhs.push_back(true);
    auto sol = gf2_solve(rows, rhs, g.n);
    if (!sol) {
        throw ValidationError("operator is not a logical: no anticommuting partner exists");
    }
    // Best-effort weight reduction by opposite-kind stabilizers.
    BitVector best = *sol;
    const auto stab = g.rows(pk);
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto &s : stab) {
            BitVector cand = best ^ s;
            if (cand.popcount() < best.popcount()) {
                best = std::move(cand);
                improved = true;
            }
        }
    }
    return PauliOperator::from_bits(pk, std::move(best));
}

CssCode promote_to_logical(const CssCode &code, GeneratorRef ref) {
    const auto &list = code.gens(ref.kind);
    if (ref.index >= list.size()) {
        throw ValidationError("generator index out of range");
    }
    GeneratingSet reduced = code.gens();
    reduced.of(ref.kind).erase(reduced.of(ref.kind).begin() + static_cast<std::ptrdiff_t>(ref.index));
    const PauliOperator &gen = list[ref.index];
    if (in_group(reduced, gen)) {
        throw ValidationError("generator " + gen_name(ref.kind, ref.index) +
                              " depends on the others; promoting it encodes nothing");
    }
    CssCode tmp(reduced, code.logicals());
    PauliOperator partner = anticommuting_partner(tmp, gen);
    return promote_to_logical(code, ref, partner);
}

CssCode promote_to_logical(const CssCode &code, GeneratorRef ref, const PauliOperator &partner) {
    const auto &list = code.gens(ref.kind);
    if (ref.index >= list.size()) {
        throw ValidationError("generator index out of range");
    }
    GeneratingSet reduced = code.gens();
    reduced.of(ref.kind).erase(reduced.of(ref.kind).begin() + static_cast<std::ptrdiff_t>(ref.index));
    const PauliOperator &gen = list[ref.index];
    if (in_group(reduced, gen)) {
        throw ValidationError("generator " + gen_name(ref.kind, ref.index) +
                              " depends on the others; promoting it encodes nothing");
    }
    auto logicals = code.logicals();
    LogicalClass lc;
    if (ref.kind == PauliKind::X) {
        lc.x_rep = gen;
        lc.z_rep = partner;
    } else {
        lc.z_rep = gen;
        lc.x_rep = partner;
    }
    logicals.push_back(std::move(lc));
    return CssCode(std::move(reduced), std::move(logicals), code.regions_ptr());
}

CssCode fold_logical(const CssCode &code, size_t index, PauliKind kind) {
    if (index >= code.logicals().size()) {
        throw ValidationError("logical class index out of range");
    }
    GeneratingSet gens = code.gens();
    auto logicals = code.logicals();
    gens.of(kind).push_back(logicals[index].rep(kind));
    logicals.erase(logicals.begin() + static_cast<std::ptrdiff_t>(index));
    return CssCode(std::move(gens), std::move(logicals), code.regions_ptr());
}

namespace {

size_t min_logical_weight(const GeneratingSet &g, PauliKind k, size_t max_rank) {
    RowBasis stab = basis_of(g.rows(k), g.n);
    if (stab.rank() > max_rank) {
        throw FeasibilityError("distance: " + std::string(1, kind_char(k)) + " stabilizer rank " +
                               std::to_string(stab.rank()) + " exceeds cap " + std::to_string(max_rank));
    }
    auto normalizer = gf2_kernel(g.rows(opposite(k)), g.n);
    auto logical = gf2_complement(stab.rows(), normalizer, g.n);
    size_t r = stab.rank();
    size_t total = r + logical.size();
    if (total > 32) {
        throw FeasibilityError("distance: enumeration of 2^" + std::to_string(total) + " operators refused");
    }
    std::vector<BitVector> basis = stab.rows();
    basis.insert(basis.end(), logical.begin(), logical.end());
    BitVector cur(g.n);
    size_t best = g.n + 1;
    // Gray-code walk over every combination; count those with a logical part.
    uint64_t count = uint64_t{1} << total;
    uint64_t prev_gray = 0;
    for (uint64_t i = 1; i < count; i++) {
        uint64_t gray = i ^ (i >> 1);
        size_t flip = static_cast<size_t>(std::countr_zero(gray ^ prev_gray));
        cur ^= basis[flip];
        prev_gray = gray;
        if ((gray >> r) != 0) {
            best = std::min(best, cur.popcount());
        }
    }
    return best;
}

}  // namespace

DistanceResult distance(const CssCode &code, size_t max_rank) {
    if (encoded_qubits(code) == 0) {
        throw ValidationError("distance is undefined for a code with k=0");
    }
    return {min_logical_weight(code.gens(), PauliKind::X, max_rank),
            min_logical_weight(code.gens(), PauliKind::Z, max_rank)};
}

namespace {

void check_perm(const std::vector<size_t> &perm, size_t n) {
    if (perm.size() != n) {
        throw ValidationError("relabeling has the wrong length");
    }
    std::vector<bool> seen(n, false);
    for (size_t p : perm) {
        if (p >= n || seen[p]) {
            throw ValidationError("relabeling is not a permutation");
        }
        seen[p] = true;
    }
}

QubitSet relabel_set(const QubitSet &s, const std::vector<size_t> &perm) {
    std::vector<size_t> out;
    for (size_t q : s) {
        out.push_back(perm[q]);
    }
    return QubitSet(std::move(out));
}

}  // namespace

FlatRegionGraph relabel(const FlatRegionGraph &g, const std::vector<size_t> &perm) {
    FlatRegionGraph out = g;
    for (auto &r : out.regions) {
        r.qubits = relabel_set(r.qubits, perm);
    }
    for (auto &b : out.boundaries) {
        b.qubits = relabel_set(b.qubits, perm);
    }
    return out;
}

CssCode relabel(const CssCode &code, const std::vector<size_t> &perm) {
    size_t n = code.n();
    check_perm(perm, n);
    GeneratingSet gens;
    gens.n = n;
    for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
        for (const auto &g : code.gens(k)) {
            gens.of(k).push_back(embed_operator(g, perm, n));
        }
    }
    std::vector<LogicalClass> logicals;
    for (const auto &lc : code.logicals()) {
        logicals.push_back({embed_operator(lc.z_rep, perm, n), embed_operator(lc.x_rep, perm, n)});
    }
    std::shared_ptr<const RegionMetadata> regions;
    if (code.regions()) {
        regions = std::make_shared<RegionMetadata>(
            RegionMetadata{relabel(code.regions()->x_particles, perm), relabel(code.regions()->z_particles, perm)});
    }
    return CssCode(std::move(gens), std::move(logicals), std::move(regions));
}

CssCode rebase_generators(const CssCode &code, GeneratingSet gens, std::shared_ptr<const RegionMetadata> regions) {
    if (!groups_equal(code.gens(), gens)) {
        throw ValidationError("rebase: the new generators generate a different group");
    }
    return CssCode(std::move(gens), code.logicals(), std::move(regions));
}

}  // namespace weldcode
