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


#include "weldcode/welding.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "weldcode/errors.h"
#include "weldcode/gf2.h"

namespace weldcode {

WeldType parse_weld_type(const std::string &s) {
    if (s == "z" || s == "Z") {
        return WeldType::Z;
    }
    if (s == "x" || s == "X") {
        return WeldType::X;
    }
    throw ValidationError("weld type must be z or x, got '" + s + "'");
}

QubitIdentification QubitIdentification::parse(const std::string &text) {
    QubitIdentification out;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        long long a, b;
        if (!(fields >> a)) {
            continue;
        }
        std::string extra;
        if (!(fields >> b) || (fields >> extra) || a < 0 || b < 0) {
            throw ValidationError("identification line " + std::to_string(line_no) + ": expected 'i j'");
        }
        out.pairs.emplace_back(static_cast<size_t>(a), static_cast<size_t>(b));
    }
    return out;
}

std::string QubitIdentification::str() const {
    std::ostringstream out;
    for (auto [a, b] : pairs) {
        out << a << " " << b << "\n";
    }
    return out.str();
}

WeldLayout make_layout(size_t n1, size_t n2, const QubitIdentification &ident) {
    std::vector<long long> partner(n2, -1);
    std::vector<bool> used1(n1, false);
    for (auto [a, b] : ident.pairs) {
        if (a >= n1 || b >= n2) {
            throw ValidationError("identification pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") out of range");
        }
        if (used1[a] || partner[b] >= 0) {
            throw ValidationError("identification pair (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") reuses a qubit");
        }
        used1[a] = true;
        partner[b] = static_cast<long long>(a);
    }
    WeldLayout L;
    L.N = n1 + n2 - ident.pairs.size();
    L.embed1.resize(n1);
    for (size_t q = 0; q < n1; q++) {
        L.embed1[q] = q;
    }
    L.embed2.resize(n2);
    size_t next = n1;
    for (size_t q = 0; q < n2; q++) {
        L.embed2[q] = partner[q] >= 0 ? static_cast<size_t>(partner[q]) : next++;
    }
    std::vector<size_t> shared;
    for (auto [a, b] : ident.pairs) {
        shared.push_back(a);
    }
    L.shared = QubitSet(shared);
    L.support1 = QubitSet(L.embed1);
    L.support2 = QubitSet(L.embed2);
    return L;
}

GeneratingSet embed_gens(const GeneratingSet &g, const std::vector<size_t> &map, size_t N) {
    GeneratingSet out;
    out.n = N;
    for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
        for (const auto &p : g.of(k)) {
            out.of(k).push_back(embed_operator(p, map, N));
        }
    }
    return out;
}

Contraction contract(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident) {
    Contraction c;
    c.layout = make_layout(code1.n(), code2.n(), ident);
    c.gens1 = embed_gens(code1.gens(), c.layout.embed1, c.layout.N);
    c.gens2 = embed_gens(code2.gens(), c.layout.embed2, c.layout.N);
    return c;
}

namespace {

/// Weld-touching generators of kind k: (index, W bits, full bits).
struct Touching {
    size_t index;
    BitVector w;
    BitVector full;
};

std::vector<Touching> touching(const GeneratingSet &r, const BitVector &shared_mask, PauliKind k) {
    std::vector<Touching> out;
    const auto &list = r.of(k);
    for (size_t i = 0; i < list.size(); i++) {
        BitVector w = list[i].bits(k) & shared_mask;
        if (w.any()) {
            out.push_back({i, std::move(w), list[i].bits(k)});
        }
    }
    return out;
}

}  // namespace

MatchReport check_well_matched(const GeneratingSet &r1, const GeneratingSet &r2, const QubitSet &shared,
                               WeldType type) {
    if (r1.n != r2.n) {
        throw ValidationError("well-matched check needs generators on the same qubits");
    }
    PauliKind k = regenerated_kind(type);
    BitVector mask = shared.mask(r1.n);
    auto t1 = touching(r1, mask, k);
    auto t2 = touching(r2, mask, k);
    auto unmatched = [&](const std::vector<Touching> &a, const std::vector<Touching> &b) -> const Touching * {
        for (const auto &x : a) {
            bool found = std::any_of(b.begin(), b.end(), [&](const Touching &y) { return y.w == x.w; });
            if (!found) {
                return &x;
            }
        }
        return nullptr;
    };
    if (auto *u = unmatched(t1, t2)) {
        return {false, 1, u->index, r1.of(k)[u->index]};
    }
    if (auto *u = unmatched(t2, t1)) {
        return {false, 2, u->index, r2.of(k)[u->index]};
    }
    return {};
}

IndependenceReport check_weld_independence(const GeneratingSet &r, const QubitSet &shared, WeldType type) {
    PauliKind k = regenerated_kind(type);
    auto t = touching(r, shared.mask(r.n), k);
    RowBasis full(r.n);
    RowBasis wb(r.n, t.size());
    std::vector<size_t> kept;  // positions in t inserted into both bases
    for (size_t i = 0; i < t.size(); i++) {
        if (!full.insert(t[i].full).independent) {
            continue;
        }
        auto res = wb.insert(t[i].w, i);
        if (!res.independent) {
            IndependenceReport rep;
            rep.ok = false;
            for (size_t pos : res.dependency) {
                rep.dependent_subset.push_back(t[pos].index);
            }
            std::sort(rep.dependent_subset.begin(), rep.dependent_subset.end());
            return rep;
        }
    }
    return {};
}

GeneratingSet make_weld_independent(const GeneratingSet &r, const QubitSet &shared, WeldType type) {
    PauliKind k = regenerated_kind(type);
    BitVector mask = shared.mask(r.n);
    GeneratingSet out = r;
    auto &list = out.of(k);
    std::vector<PauliOperator> result;
    std::vector<BitVector> kept_full;  // full rows of kept weld-touching generators
    RowBasis wb(r.n, list.size());
    size_t item = 0;
    for (const auto &g : list) {
        BitVector w = g.bits(k) & mask;
        if (w.none()) {
            result.push_back(g);
            continue;
        }
        // Probe without committing: reduce against current W basis with tracking.
        RowBasis probe = wb;
        auto res = probe.insert(w, item);
        if (res.independent) {
            wb = std::move(probe);
            kept_full.push_back(g.bits(k));
            item++;
            result.push_back(g);
            continue;
        }
        BitVector prod = g.bits(k);
        for (size_t pos : res.dependency) {
            if (pos != item) {
                prod ^= kept_full[pos];
            }
        }
        if (prod.any()) {
            result.push_back(PauliOperator::from_bits(k, std::move(prod)));
        }
    }
    list = std::move(result);
    return out;
}

GeneratingSet align_weld_generators(const GeneratingSet &reference, const GeneratingSet &target,
                                    const QubitSet &shared, WeldType type) {
    if (reference.n != target.n) {
        throw ValidationError("alignment needs generators on the same qubits");
    }
    PauliKind k = regenerated_kind(type);
    BitVector mask = shared.mask(target.n);
    auto tt = touching(target, mask, k);
    auto solve_combo = [&](const BitVector &w) -> std::optional<std::vector<size_t>> {
        // Unknown c over target rows: sum_i c_i W_i = w, one equation per shared qubit.
        std::vector<BitVector> eqs;
        std::vector<bool> rhs;
        for (size_t q : shared) {
            BitVector row(tt.size());
            for (size_t i = 0; i < tt.size(); i++) {
                row.set(i, tt[i].w.get(q));
            }
            eqs.push_back(std::move(row));
            rhs.push_back(w.get(q));
        }
        auto sol = gf2_solve(eqs, rhs, tt.size());
        if (!sol) {
            return std::nullopt;
        }
        return sol->ones();
    };

    std::vector<PauliOperator> matched;
    std::vector<BitVector> matched_w;
    const auto &ref_list = reference.of(k);
    for (size_t i = 0; i < ref_list.size(); i++) {
        BitVector w = ref_list[i].bits(k) & mask;
        if (w.none()) {
            continue;
        }
        auto combo = solve_combo(w);
        if (!combo) {
            throw WeldPreconditionError("well_matched", 1, {i},
                                        "alignment: reference generator " + std::to_string(i) +
                                            " has a weld restriction the other code cannot produce");
        }
        BitVector prod(target.n);
        for (size_t pos : *combo) {
            prod ^= tt[pos].full;
        }
        matched.push_back(PauliOperator::from_bits(k, std::move(prod)));
        matched_w.push_back(std::move(w));
    }
    // Remaining target rows are reduced to act trivially on the weld.
    RowBasis mb(target.n, matched_w.size() + 1);
    for (size_t i = 0; i < matched_w.size(); i++) {
        mb.insert(matched_w[i], i);
    }
    std::vector<PauliOperator> residual;
    for (const auto &t : tt) {
        RowBasis probe = mb;
        auto res = probe.insert(t.w, matched_w.size());
        if (res.independent) {
            throw WeldPreconditionError("well_matched", 2, {t.index},
                                        "alignment: generator " + std::to_string(t.index) +
                                            " has a weld restriction the reference code lacks");
        }
        // The dependency includes a fresh item slot; ignore it.
        BitVector prod = t.full;
        for (size_t pos : res.dependency) {
            if (pos < matched.size()) {
                prod ^= matched[pos].bits(k);
            }
        }
        if (prod.any()) {
            residual.push_back(PauliOperator::from_bits(k, std::move(prod)));
        }
    }
    GeneratingSet out = target;
    auto &list = out.of(k);
    std::vector<PauliOperator> result;
    for (const auto &g : list) {
        if ((g.bits(k) & mask).none()) {
            result.push_back(g);
        }
    }
    result.insert(result.end(), matched.begin(), matched.end());
    result.insert(result.end(), residual.begin(), residual.end());
    list = std::move(result);
    return out;
}

std::pair<CssCode, CssCode> prepare_weld(const CssCode &code1, const CssCode &code2,
                                         const QubitIdentification &ident, WeldType type) {
    WeldLayout L = make_layout(code1.n(), code2.n(), ident);
    std::vector<size_t> local_shared;
    for (auto [a, b] : ident.pairs) {
        local_shared.push_back(a);
    }
    GeneratingSet g1 = make_weld_independent(code1.gens(), QubitSet(local_shared), type);
    GeneratingSet e1 = embed_gens(g1, L.embed1, L.N);
    GeneratingSet e2 = embed_gens(code2.gens(), L.embed2, L.N);
    GeneratingSet a2 = align_weld_generators(e1, e2, L.shared, type);
    std::vector<size_t> back(L.N, code2.n());
    for (size_t q = 0; q < code2.n(); q++) {
        back[L.embed2[q]] = q;
    }
    GeneratingSet g2;
    g2.n = code2.n();
    for (PauliKind k : {PauliKind::X, PauliKind::Z}) {
        for (const auto &p : a2.of(k)) {
            BitVector bits(code2.n());
            for (size_t q : p.bits(k).ones()) {
                bits.set(back[q]);
            }
            g2.of(k).push_back(PauliOperator::from_bits(k, std::move(bits)));
        }
    }
    return {CssCode(std::move(g1), code1.logicals()), CssCode(std::move(g2), code2.logicals())};
}

namespace {

void require_k_zero(const CssCode &c, int side) {
    size_t k = encoded_qubits(c);
    if (k != 0) {
        throw ValidationError("weld input " + std::to_string(side) + " encodes " + std::to_string(k) +
                              " qubits; fold its logicals into the generators first");
    }
}

}  // namespace

WeldResult weld(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident, WeldType type,
                const WeldOptions &options) {
    require_k_zero(code1, 1);
    require_k_zero(code2, 2);
    Contraction c = contract(code1, code2, ident);
    const WeldLayout &L = c.layout;
    PauliKind k = regenerated_kind(type);
    PauliKind keep = opposite(k);

    auto match = check_well_matched(c.gens1, c.gens2, L.shared, type);
    if (!match.ok) {
        throw WeldPreconditionError("well_matched", match.side, {match.index},
                                    "weld: generator " + std::to_string(match.index) + " of code " +
                                        std::to_string(match.side) + " has no partner with the same weld restriction");
    }
    for (int side = 1; side <= 2; side++) {
        auto ind = check_weld_independence(side == 1 ? c.gens1 : c.gens2, L.shared, type);
        if (!ind.ok) {
            std::ostringstream msg;
            msg << "weld: code " << side << " is not linearly independent on the weld; generators {";
            for (size_t i = 0; i < ind.dependent_subset.size(); i++) {
                msg << (i ? "," : "") << ind.dependent_subset[i];
            }
            msg << "} multiply to the identity on the weld";
            throw WeldPreconditionError("weld_independence", side, ind.dependent_subset, msg.str());
        }
    }

    WeldResult R;
    R.layout = L;
    R.type = type;
    GeneratingSet out;
    out.n = L.N;
    out.of(keep) = c.gens1.of(keep);
    for (const auto &g : c.gens2.of(keep)) {
        out.of(keep).push_back(g);
    }

    BitVector mask = L.shared.mask(L.N);
    auto &regen = out.of(k);
    PauliOperator ident_op(L.N);
    for (int side = 1; side <= 2; side++) {
        const auto &list = (side == 1 ? c.gens1 : c.gens2).of(k);
        for (size_t i = 0; i < list.size(); i++) {
            if ((list[i].bits(k) & mask).none()) {
                WeldTraceEntry e{regen.size(), std::nullopt, std::nullopt, ident_op, ident_op, ident_op};
                (side == 1 ? e.gen1 : e.gen2) = i;
                (side == 1 ? e.theta1 : e.theta2) = list[i];
                R.trace.push_back(std::move(e));
                regen.push_back(list[i]);
            }
        }
    }

    auto sorted_touching = [&](const GeneratingSet &g) {
        auto t = touching(g, mask, k);
        std::stable_sort(t.begin(), t.end(), [](const Touching &a, const Touching &b) {
            if (a.w != b.w) {
                return a.w.lex_less(b.w);
            }
            return a.full.lex_less(b.full);
        });
        return t;
    };
    auto t1 = sorted_touching(c.gens1);
    auto t2 = sorted_touching(c.gens2);
    size_t i1 = 0, i2 = 0;
    while (i1 < t1.size() || i2 < t2.size()) {
        // Both sides are grouped by W in the same order; every W has members on both sides.
        const BitVector &w = (i1 < t1.size() && (i2 >= t2.size() || !t2[i2].w.lex_less(t1[i1].w))) ? t1[i1].w : t2[i2].w;
        size_t e1 = i1, e2 = i2;
        while (e1 < t1.size() && t1[e1].w == w) {
            e1++;
        }
        while (e2 < t2.size() && t2[e2].w == w) {
            e2++;
        }
        std::vector<const Touching *> a, b;
        for (size_t j = i1; j < e1; j++) {
            a.push_back(&t1[j]);
        }
        for (size_t j = i2; j < e2; j++) {
            b.push_back(&t2[j]);
        }
        if (options.reverse_pairing) {
            std::reverse(b.begin(), b.end());
        }
        size_t m = std::max(a.size(), b.size());
        for (size_t j = 0; j < m; j++) {
            const Touching *h1 = j < a.size() ? a[j] : a[0];
            const Touching *h2 = j < b.size() ? b[j] : b[0];
            BitVector bits = h1->full ^ h2->full ^ h1->w;
            WeldTraceEntry e{regen.size(),
                             h1->index,
                             h2->index,
                             PauliOperator::from_bits(k, h1->full),
                             PauliOperator::from_bits(k, h2->full),
                             PauliOperator::from_bits(k, h1->w)};
            R.trace.push_back(std::move(e));
            regen.push_back(PauliOperator::from_bits(k, std::move(bits)));
        }
        i1 = e1;
        i2 = e2;
    }
    R.code = CssCode(std::move(out));
    R.gens1 = std::move(c.gens1);
    R.gens2 = std::move(c.gens2);
    return R;
}

CssCode weld_oracle(const CssCode &code1, const CssCode &code2, const QubitIdentification &ident, WeldType type) {
    require_k_zero(code1, 1);
    require_k_zero(code2, 2);
    Contraction c = contract(code1, code2, ident);
    PauliKind k = regenerated_kind(type);
    PauliKind keep = opposite(k);
    GeneratingSet out;
    out.n = c.layout.N;
    out.of(keep) = c.gens1.of(keep);
    for (const auto &g : c.gens2.of(keep)) {
        out.of(keep).push_back(g);
    }
    for (auto &v : gf2_kernel(out.rows(keep), out.n)) {
        out.of(k).push_back(PauliOperator::from_bits(k, std::move(v)));
    }
    return CssCode(std::move(out));
}

const std::vector<WeldTraceEntry> &welded_operator_trace(const WeldResult &result) { return result.trace; }

PartnerCertificate certify_partner(const WeldResult &result, int side, size_t gen_index, const PauliOperator &t) {
    PauliKind k = regenerated_kind(result.type);
    const auto &embed = side == 1 ? result.layout.embed1 : result.layout.embed2;
    const GeneratingSet &pre = side == 1 ? result.gens1 : result.gens2;
    if (gen_index >= pre.of(k).size()) {
        throw ValidationError("certify_partner: generator index out of range");
    }
    PauliOperator te = embed_operator(t, embed, result.layout.N);
    for (PauliKind kk : {PauliKind::X, PauliKind::Z}) {
        const auto &list = pre.of(kk);
        for (size_t i = 0; i < list.size(); i++) {
            bool anti = !commutes(te, list[i]);
            if (anti != (kk == k && i == gen_index)) {
                throw ValidationError("certify_partner: operator does not anticommute with exactly the given generator");
            }
        }
    }
    PartnerCertificate cert;
    for (const auto &e : result.trace) {
        auto src = side == 1 ? e.gen1 : e.gen2;
        if (src && *src == gen_index) {
            cert.expected.push_back(e.output_index);
        }
    }
    const auto &out = result.code.gens(k);
    for (size_t i = 0; i < out.size(); i++) {
        if (!commutes(te, out[i])) {
            cert.anticommuting.push_back(i);
        }
    }
    bool others_commute = true;
    for (const auto &g : result.code.gens(opposite(k))) {
        others_commute = others_commute && commutes(te, g);
    }
    cert.ok = others_commute && cert.anticommuting == cert.expected;
    return cert;
}

void self_weld(const CssCode &code, const QubitIdentification &ident, WeldType type) {
    (void)code;
    (void)ident;
    (void)type;
    throw SelfWeldError("self-welding (identifying qubits within one code) is not supported");
}

}  // namespace weldcode
