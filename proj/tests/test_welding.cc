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


#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "weldcode/builders.h"
#include "weldcode/errors.h"
#include "weldcode/gf2.h"
#include "weldcode/random_codes.h"
#include "weldcode/welding.h"

using namespace weldcode;

namespace {

CssCode code_of(size_t n, std::initializer_list<const char *> xs, std::initializer_list<const char *> zs) {
    GeneratingSet g;
    g.n = n;
    for (auto s : xs) g.x_gens.push_back(PauliOperator::parse(s));
    for (auto s : zs) g.z_gens.push_back(PauliOperator::parse(s));
    return CssCode(g);
}

bool same_group(const CssCode &a, const CssCode &b) { return groups_equal(a.gens(), b.gens()); }

/// Operator of the kept kind on code-1-only qubits that anticommutes with
/// regenerated generator `i` of code 1 and with nothing else there.
std::optional<PauliOperator> partner_for(const CssCode &c, const QubitSet &shared, PauliKind k, size_t i) {
    PauliKind t = opposite(k);
    std::vector<BitVector> rows;
    std::vector<bool> rhs;
    for (size_t j = 0; j < c.gens(k).size(); j++) {
        rows.push_back(c.gens(k)[j].bits(k));
        rhs.push_back(j == i);
    }
    for (size_t q : shared) {
        BitVector r(c.n());
        r.set(q);
        rows.push_back(r);
        rhs.push_back(false);
    }
    auto sol = gf2_solve(rows, rhs, c.n());
    if (!sol) return std::nullopt;
    return PauliOperator::from_bits(t, *sol);
}

}  // namespace

TEST(Weld, TwoQubitGoldens) {
    CssCode two = build_two_qubit();
    QubitIdentification ident{{{1, 0}}};
    EXPECT_TRUE(same_group(weld(two, two, ident, WeldType::Z).code, code_of(3, {"XXI", "IXX"}, {"ZZZ"})));
    EXPECT_TRUE(same_group(weld(two, two, ident, WeldType::X).code, code_of(3, {"XXX"}, {"ZZI", "IZZ"})));
}

TEST(Weld, LayoutKeepsCodeOneIndices) {
    WeldLayout l = make_layout(3, 4, QubitIdentification{{{2, 1}, {0, 3}}});
    EXPECT_EQ(l.N, 5u);
    EXPECT_EQ(l.embed1, (std::vector<size_t>{0, 1, 2}));
    EXPECT_EQ(l.embed2, (std::vector<size_t>{3, 2, 4, 0}));
    EXPECT_EQ(l.shared.indices(), (std::vector<size_t>{0, 2}));
}

TEST(Weld, IdentificationParsing) {
    auto id = QubitIdentification::parse("# comment\n1 0\n\n2 3 # trailing\n");
    EXPECT_EQ(id.pairs, (std::vector<std::pair<size_t, size_t>>{{1, 0}, {2, 3}}));
    EXPECT_THROW(QubitIdentification::parse("1\n"), ValidationError);
    CssCode two = build_two_qubit();
    EXPECT_THROW(weld(two, two, QubitIdentification{{{0, 0}, {0, 1}}}, WeldType::Z), ValidationError);
    EXPECT_THROW(weld(two, two, QubitIdentification{{{5, 0}}}, WeldType::Z), ValidationError);
}

TEST(Weld, RequiresZeroEncodedQubits) {
    CssCode two = build_two_qubit();
    EXPECT_THROW(weld(build_repetition(3), two, QubitIdentification{{{0, 0}}}, WeldType::Z), ValidationError);
}

TEST(Weld, UnmatchedGeneratorIsRejectedWithWitness) {
    CssCode two = build_two_qubit();
    CssCode xs = code_of(2, {"XI", "IX"}, {});
    try {
        weld(two, xs, QubitIdentification{{{1, 0}}}, WeldType::Z);
        FAIL() << "expected a precondition error";
    } catch (const WeldPreconditionError &e) {
        EXPECT_EQ(e.check, "well_matched");
        EXPECT_EQ(e.side, 1);
        EXPECT_EQ(e.witness, (std::vector<size_t>{0}));
    }
}

TEST(Weld, DependentOnWeldIsRejectedWithWitness) {
    CssCode c = code_of(3, {"XXX"}, {"ZZI", "ZIZ"});
    try {
        weld(c, c, QubitIdentification{{{0, 0}}}, WeldType::Z);
        FAIL() << "expected a precondition error";
    } catch (const WeldPreconditionError &e) {
        EXPECT_EQ(e.check, "weld_independence");
        EXPECT_EQ(e.witness, (std::vector<size_t>{0, 1}));
        // The witness really is trivial on the weld.
        PauliOperator prod = c.gens(PauliKind::Z)[0] * c.gens(PauliKind::Z)[1];
        EXPECT_TRUE(weld_restrict(prod, QubitSet{0}).is_identity());
    }
    auto [a, b] = prepare_weld(c, c, QubitIdentification{{{0, 0}}}, WeldType::Z);
    EXPECT_TRUE(same_group(a, c));
    EXPECT_TRUE(check_weld_independence(a.gens(), QubitSet{0}, WeldType::Z).ok);
    CssCode w = weld(a, b, QubitIdentification{{{0, 0}}}, WeldType::Z).code;
    EXPECT_TRUE(same_group(w, weld_oracle(a, b, QubitIdentification{{{0, 0}}}, WeldType::Z)));
}

TEST(Weld, SelfWeldIsRefused) {
    EXPECT_THROW(self_weld(build_surface({2, 2}, StringLogicals::kFoldX), QubitIdentification{{{0, 2}}}, WeldType::Z),
                 SelfWeldError);
}

TEST(Weld, TraceReconstructsWeldedGenerators) {
    CssCode s = build_surface({1, 2}, StringLogicals::kFoldX);
    QubitIdentification ident{{{1, 0}, {2, 2}, {4, 3}}};
    WeldResult r = weld(s, s, ident, WeldType::X);
    size_t welded = 0;
    for (const auto &e : welded_operator_trace(r)) {
        PauliOperator g = r.code.gens(PauliKind::X)[e.output_index];
        EXPECT_EQ(g, e.theta1 * e.theta2 * e.w);
        if (e.gen1 && e.gen2) {
            welded++;
            EXPECT_EQ(e.w, weld_restrict(r.gens1.x_gens[*e.gen1], r.layout.shared));
        }
    }
    EXPECT_EQ(welded, 3u);
    EXPECT_EQ(r.code.n(), 7u);
}

TEST(Weld, ChainDimensions) {
    auto chain = surface_chain();
    std::vector<size_t> sizes;
    for (const auto &s : chain) sizes.push_back(s.code.n());
    EXPECT_EQ(sizes, (std::vector<size_t>{2, 3, 5, 7, 8, 13}));
    EXPECT_TRUE(same_group(chain[1].code, code_of(3, {"XXI", "IXX"}, {"ZZZ"})));
}

class RandomWelds : public ::testing::Test {
   protected:
    std::mt19937_64 rng{2024};
};

TEST_F(RandomWelds, MatchOracleAndEncodeNothing) {
    size_t nontrivial = 0;
    for (int i = 0; i < 250; i++) {
        WeldInstance w = random_weld_instance(rng);
        WeldResult r = weld(w.code1, w.code2, w.ident, w.type);
        CssCode o = weld_oracle(w.code1, w.code2, w.ident, w.type);
        ASSERT_TRUE(same_group(r.code, o)) << "instance " << i;
        EXPECT_EQ(encoded_qubits(r.code), 0u);
        for (const auto &e : r.trace) nontrivial += (e.gen1 && e.gen2);
    }
    EXPECT_GT(nontrivial, 100u);
}

TEST_F(RandomWelds, OracleAgreesWithEnumeration) {
    // Independent check of the oracle itself: the regenerated group is every
    // operator of that kind commuting with all kept generators.
    int checked = 0;
    while (checked < 60) {
        WeldInstance w = random_weld_instance(rng, 7);
        WeldResult r = weld(w.code1, w.code2, w.ident, w.type);
        size_t N = r.layout.N;
        PauliKind k = regenerated_kind(w.type);
        auto kept = oracle::masks(r.code.gens(opposite(k)), opposite(k));
        std::set<uint32_t> commuting;
        for (uint32_t v = 0; v < (uint32_t{1} << N); v++) {
            bool ok = true;
            for (uint32_t g : kept) ok = ok && !(__builtin_popcount(g & v) & 1);
            if (ok) commuting.insert(v);
        }
        EXPECT_EQ(oracle::span(oracle::masks(r.code.gens(k), k)), commuting);
        checked++;
    }
}

TEST_F(RandomWelds, ReversePairingGivesSameGroup) {
    for (int i = 0; i < 200; i++) {
        WeldInstance w = random_weld_instance(rng);
        CssCode a = weld(w.code1, w.code2, w.ident, w.type).code;
        CssCode b = weld(w.code1, w.code2, w.ident, w.type, {true}).code;
        EXPECT_TRUE(same_group(a, b));
    }
}

TEST_F(RandomWelds, RawInstancesAreWeldedOrRejectedWithWitness) {
    size_t rejected = 0, accepted = 0;
    for (int i = 0; i < 300; i++) {
        WeldInstance w = random_raw_weld_instance(rng);
        try {
            CssCode c = weld(w.code1, w.code2, w.ident, w.type).code;
            EXPECT_TRUE(same_group(c, weld_oracle(w.code1, w.code2, w.ident, w.type)));
            accepted++;
        } catch (const WeldPreconditionError &e) {
            rejected++;
            EXPECT_FALSE(e.witness.empty());
            EXPECT_TRUE(e.side == 1 || e.side == 2);
            if (e.check == "weld_independence") {
                const CssCode &c = e.side == 1 ? w.code1 : w.code2;
                PauliKind k = regenerated_kind(w.type);
                PauliOperator prod(c.n());
                for (size_t j : e.witness) prod *= c.gens(k)[j];
                std::vector<size_t> sq;
                for (auto [a, b] : w.ident.pairs) sq.push_back(e.side == 1 ? a : b);
                EXPECT_TRUE(weld_restrict(prod, QubitSet(sq)).is_identity());
            } else {
                EXPECT_EQ(e.check, "well_matched");
                EXPECT_EQ(e.witness.size(), 1u);
            }
        }
    }
    EXPECT_GT(rejected, 0u);
    EXPECT_GT(accepted, 0u);
}

TEST_F(RandomWelds, PartnersFollowTheirGenerator) {
    size_t certified = 0;
    for (int i = 0; i < 200; i++) {
        WeldInstance w = random_weld_instance(rng);
        WeldResult r = weld(w.code1, w.code2, w.ident, w.type);
        PauliKind k = regenerated_kind(w.type);
        std::vector<size_t> sq;
        for (auto [a, b] : w.ident.pairs) sq.push_back(a);
        for (size_t g = 0; g < w.code1.gens(k).size(); g++) {
            auto t = partner_for(w.code1, QubitSet(sq), k, g);
            if (!t) continue;
            PartnerCertificate cert = certify_partner(r, 1, g, *t);
            EXPECT_TRUE(cert.ok);
            EXPECT_FALSE(cert.expected.empty());
            certified++;
        }
    }
    EXPECT_GT(certified, 50u);
}
