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


// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All limits are fixed below.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracles.h"
#include "weldcode/builders.h"
#include "weldcode/energy.h"
#include "weldcode/errors.h"
#include "weldcode/graph.h"
#include "weldcode/io.h"
#include "weldcode/random_codes.h"
#include "weldcode/welding.h"

using namespace weldcode;

namespace {

constexpr double kWeldGoldenSeconds = 1.0;
constexpr double kChainSeconds = 10.0;
constexpr double kRandomWeldSeconds = 60.0;
constexpr double kBarrierSeconds = 300.0;
constexpr double kPropertySeconds = 60.0;
constexpr size_t kRandomWelds = 250;
constexpr size_t kRandomRawWelds = 250;
constexpr size_t kMaxSideQubits = 12;
constexpr size_t kPropertyCases = 1000;
constexpr uint64_t kSeed = 20260101;

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char *title, double limit_s, const std::function<Outcome()> &body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs >= limit_s) {
        o.ok = false;
        o.detail += " (over time limit " + std::to_string(limit_s) + " s)";
    }
    std::printf("criterion %d %s: %s [%.3f s] %s\n", id, title, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    failures += !o.ok;
}

GeneratingSet gens_of(size_t n, std::initializer_list<const char *> xs, std::initializer_list<const char *> zs) {
    GeneratingSet g;
    g.n = n;
    for (auto s : xs) g.x_gens.push_back(PauliOperator::parse(s));
    for (auto s : zs) g.z_gens.push_back(PauliOperator::parse(s));
    return g;
}

std::vector<size_t> all_qubits(size_t n) {
    std::vector<size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

int main() {
    std::vector<WeldResult> random_results;

    criterion(1, "welding golden cases", kWeldGoldenSeconds, [] {
        CssCode two = build_two_qubit();
        QubitIdentification ident{{{1, 0}}};
        bool z = groups_equal(weld(two, two, ident, WeldType::Z).code.gens(), gens_of(3, {"XXI", "IXX"}, {"ZZZ"}));
        bool x = groups_equal(weld(two, two, ident, WeldType::X).code.gens(), gens_of(3, {"XXX"}, {"ZZI", "IZZ"}));
        return Outcome{z && x, std::string("Z-weld ") + (z ? "ok" : "wrong") + ", X-weld " + (x ? "ok" : "wrong")};
    });

    criterion(2, "surface chain", kChainSeconds, [] {
        auto chain = surface_chain();
        bool has5 = false, has7 = false;
        const CssCode *thirteen = nullptr;
        for (const auto &s : chain) {
            has5 |= s.code.n() == 5;
            has7 |= s.code.n() == 7;
            if (s.code.n() == 13) thirteen = &s.code;
        }
        if (!has5 || !has7 || !thirteen) return Outcome{false, "missing 5, 7 or 13 qubit stage"};
        size_t k = encoded_qubits(*thirteen);
        DistanceResult d = distance(*thirteen);
        bool ok = k == 1 && d.d() >= 3;
        return Outcome{ok, "13-qubit k=" + std::to_string(k) + " d_X=" + std::to_string(d.d_x) +
                               " d_Z=" + std::to_string(d.d_z)};
    });

    criterion(3, "random welds match oracle", kRandomWeldSeconds, [&] {
        std::mt19937_64 rng(kSeed);
        size_t equal = 0;
        for (size_t i = 0; i < kRandomWelds; i++) {
            WeldInstance w = random_weld_instance(rng, kMaxSideQubits);
            WeldResult r = weld(w.code1, w.code2, w.ident, w.type);
            equal += groups_equal(r.code.gens(), weld_oracle(w.code1, w.code2, w.ident, w.type).gens());
            random_results.push_back(std::move(r));
        }
        size_t rejected = 0, rejected_with_witness = 0, violating = 0, mismatched = 0;
        for (size_t i = 0; i < kRandomRawWelds; i++) {
            WeldInstance w = random_raw_weld_instance(rng, kMaxSideQubits);
            QubitSet s1, s2;
            {
                std::vector<size_t> a, b;
                for (auto [p, q] : w.ident.pairs) {
                    a.push_back(p);
                    b.push_back(q);
                }
                s1 = QubitSet(a);
                s2 = QubitSet(b);
            }
            // Decide on the preconditions independently of weld().
            Contraction c = contract(w.code1, w.code2, w.ident);
            bool bad = !check_well_matched(c.gens1, c.gens2, c.layout.shared, w.type).ok ||
                       !check_weld_independence(w.code1.gens(), s1, w.type).ok ||
                       !check_weld_independence(w.code2.gens(), s2, w.type).ok;
            violating += bad;
            bool threw = false;
            try {
                weld(w.code1, w.code2, w.ident, w.type);
            } catch (const WeldPreconditionError &e) {
                threw = true;
                rejected++;
                rejected_with_witness += !e.witness.empty();
            }
            mismatched += threw != bad;
        }
        bool ok = equal == kRandomWelds && violating > 0 && mismatched == 0 && rejected_with_witness == rejected;
        return Outcome{ok, std::to_string(equal) + "/" + std::to_string(kRandomWelds) + " equal; " +
                               std::to_string(rejected) + " of " + std::to_string(violating) +
                               " violating instances rejected, " + std::to_string(rejected_with_witness) +
                               " with witness"};
    });

    criterion(4, "welded outputs encode zero qubits", 0, [&] {
        size_t zero = 0;
        for (const auto &r : random_results) zero += encoded_qubits(r.code) == 0;
        bool ok = !random_results.empty() && zero == random_results.size();
        return Outcome{ok, std::to_string(zero) + "/" + std::to_string(random_results.size()) + " have k=0"};
    });

    criterion(5, "barriers of three-way rough welds", kBarrierSeconds, [] {
        std::string detail;
        bool ok = true;
        for (SurfaceSpec s : {SurfaceSpec{2, 2}, SurfaceSpec{3, 2}, SurfaceSpec{2, 3}}) {
            CssCode c = build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, s);
            BoundReport r = verify_bound(c, 0, PauliKind::Z);
            ok = ok && r.exact == 2 && r.bound == 2 && r.saturated;
            detail += "surfaces " + std::to_string(s.width) + "x" + std::to_string(s.height) + ": exact " +
                      std::to_string(r.exact) + " bound " + std::to_string(r.bound) + "; ";
        }
        CssCode solids = build_welded_solid(WeldGraph::star(3), {1, 1, 2, false});
        size_t b = exact_barrier(solids, 0, PauliKind::Z).barrier;
        ok = ok && b == 2;
        detail += "solids 1x1x2: exact " + std::to_string(b);
        return Outcome{ok, detail};
    });

    criterion(6, "solid membrane barrier", 0, [] {
        std::string detail;
        bool ok = true;
        size_t prev = 0;
        for (size_t d = 1; d <= 3; d++) {
            CssCode c = build_solid({d, d, 1, false});
            size_t exact = exact_barrier(c, 0, PauliKind::X).barrier;
            size_t bound = parity_lower_bound(c.regions()->z_particles, c.logicals()[0].x_rep).barrier;
            // Same bound from a grid of flat regions built straight from the graph.
            size_t side = d + 1;
            size_t grid = parity_lower_bound(region_graph_from_weld_graph(WeldGraph::grid(side, side), PauliKind::Z),
                                             PauliOperator::from_support(side * side, PauliKind::X, all_qubits(side * side)))
                              .barrier;
            ok = ok && exact == bound && bound == grid && exact > prev;
            prev = exact;
            detail += "d=" + std::to_string(d) + ": exact " + std::to_string(exact) + " bound " + std::to_string(bound) +
                      "; ";
        }
        return Outcome{ok, detail};
    });

    criterion(7, "rough welds keep the membrane barrier", 0, [] {
        SolidSpec s{1, 1, 2, false};
        CssCode base = build_solid(s);
        std::string detail;
        bool ok = true;
        for (const WeldGraph &g : {WeldGraph::path(2), WeldGraph::star(3)}) {
            WeldInvarianceReport r = barrier_unchanged_by_rough_welds(base, build_welded_solid(g, s));
            bool exact_ok = r.exact_base && r.exact_welded && *r.exact_base == *r.exact_welded;
            ok = ok && r.bound_base == r.bound_welded && exact_ok;
            detail += g.geometry + ": bound " + std::to_string(r.bound_base) + "->" + std::to_string(r.bound_welded) +
                      ", exact " + (r.exact_base ? std::to_string(*r.exact_base) : "NA") + "->" +
                      (r.exact_welded ? std::to_string(*r.exact_welded) : "NA") + "; ";
        }
        return Outcome{ok, detail};
    });

    criterion(8, "Ising correspondence", 0, [] {
        std::vector<WeldGraph> graphs;
        for (size_t n = 1; n <= 6; n++) {
            graphs.push_back(WeldGraph::path(n));
            graphs.push_back(WeldGraph::star(n));
        }
        for (size_t a = 1; a <= 3; a++)
            for (size_t b = 1; b <= 3; b++)
                if (a * b > 1) graphs.push_back(WeldGraph::grid(a, b));
        size_t agree = 0;
        for (const auto &g : graphs) {
            size_t nv = g.num_vertices();
            size_t bound = parity_lower_bound(region_graph_from_weld_graph(g, PauliKind::X),
                                              PauliOperator::from_support(nv, PauliKind::Z, all_qubits(nv)))
                               .barrier;
            agree += bound == oracle::ising_barrier(nv, g.edges);
        }
        return Outcome{agree == graphs.size(), std::to_string(agree) + "/" + std::to_string(graphs.size()) + " graphs agree"};
    });

    criterion(9, "scaling tuner", 0, [] {
        ScalingPlan p = tune_scaling({ScalingBudget::Kind::kSide, 64});
        bool ok = p.alpha == Fraction(2) && p.barrier_exponent_N == Fraction(2, 9) &&
                  p.z_barrier_exponent_N == Fraction(2, 9) && p.x_barrier_exponent_N == Fraction(2, 9) &&
                  p.barrier_exponent_L == Fraction(2, 3) && p.distance_exponent_L == Fraction(4, 3);
        return Outcome{ok, "alpha=" + p.alpha.str() + " N-exponent " + p.barrier_exponent_N.str() + " L-exponent " +
                               p.barrier_exponent_L.str() + " distance L-exponent " + p.distance_exponent_L.str()};
    });

    criterion(10, "property suites", kPropertySeconds, [] {
        std::mt19937_64 rng(kSeed + 10);
        std::bernoulli_distribution coin(0.5);
        auto rand_op = [&](size_t n) {
            BitVector x(n), z(n);
            for (size_t i = 0; i < n; i++) {
                x.set(i, coin(rng));
                z.set(i, coin(rng));
            }
            return PauliOperator(x, z);
        };
        size_t pass[5] = {0, 0, 0, 0, 0};
        CssCode surf = build_surface({3, 3});
        for (size_t i = 0; i < kPropertyCases; i++) {
            // Syndrome linearity.
            PauliOperator a = rand_op(surf.n()), b = rand_op(surf.n());
            Syndrome sa = syndrome(surf, a), sb = syndrome(surf, b), sab = syndrome(surf, a * b);
            auto sym = [](std::vector<size_t> u, const std::vector<size_t> &v) {
                for (size_t x : v) {
                    auto it = std::find(u.begin(), u.end(), x);
                    if (it == u.end()) u.push_back(x);
                    else u.erase(it);
                }
                std::sort(u.begin(), u.end());
                return u;
            };
            pass[0] += sab.violated_x == sym(sa.violated_x, sb.violated_x) &&
                       sab.violated_z == sym(sa.violated_z, sb.violated_z);
            // Multiply involution.
            size_t n = 1 + rng() % 70;
            PauliOperator p = rand_op(n), q = rand_op(n);
            pass[1] += (p * p).is_identity() && (p * q) * q == p;
            // W-multiplicativity.
            std::vector<size_t> sh;
            for (size_t j = 0; j < n; j++)
                if (coin(rng)) sh.push_back(j);
            pass[2] += weld_restrict(p * q, QubitSet(sh)) == weld_restrict(p, QubitSet(sh)) * weld_restrict(q, QubitSet(sh));
            // Export round trip.
            CssCode c = random_k0_code(rng, 1 + rng() % 40);
            CssCode t = parse_code(code_to_text(c)), j = parse_code(code_to_json(c));
            pass[3] += t.gens() == c.gens() && j.gens() == c.gens() && groups_equal(t.gens(), c.gens());
        }
        // Witness replay on relabeled instances.
        std::vector<CssCode> pool{build_repetition(4), build_surface({2, 2}), build_surface({2, 3}),
                                  build_solid({1, 1, 2, false}),
                                  build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, {2, 2})};
        for (size_t i = 0; i < kPropertyCases; i++) {
            const CssCode &base = pool[rng() % pool.size()];
            std::vector<size_t> perm = all_qubits(base.n());
            std::shuffle(perm.begin(), perm.end(), rng);
            CssCode c = relabel(base, perm);
            PauliKind k = coin(rng) ? PauliKind::X : PauliKind::Z;
            BarrierResult r = exact_barrier(c, 0, k);
            pass[4] += walk_barrier(c, r.witness).barrier == r.barrier;
        }
        const char *names[5] = {"syndrome linearity", "multiply involution", "W-multiplicativity",
                                "export round-trip", "witness replay"};
        std::string detail;
        bool ok = true;
        for (int i = 0; i < 5; i++) {
            ok = ok && pass[i] == kPropertyCases;
            detail += std::string(names[i]) + " " + std::to_string(pass[i]) + "/" + std::to_string(kPropertyCases) + "; ";
        }
        return Outcome{ok, detail};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
