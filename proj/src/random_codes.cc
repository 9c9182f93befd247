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


#include "weldcode/random_codes.h"

#include <algorithm>
#include <numeric>

#include "weldcode/errors.h"
#include "weldcode/gf2.h"

namespace weldcode {

namespace {

size_t uniform(std::mt19937_64 &rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

}  // namespace

CssCode random_k0_code(std::mt19937_64 &rng, size_t n) {
    std::bernoulli_distribution coin(0.4);
    size_t rows = uniform(rng, 0, n);
    std::vector<BitVector> a;
    for (size_t i = 0; i < rows; i++) {
        BitVector r(n);
        for (size_t q = 0; q < n; q++) {
            r.set(q, coin(rng));
        }
        if (r.any()) {
            a.push_back(std::move(r));
        }
    }
    std::vector<BitVector> b = gf2_kernel(a, n);
    // Scramble the kernel basis so the generators are not all in echelon form.
    for (size_t i = 0; i + 1 < b.size(); i++) {
        if (coin(rng)) {
            b[i] ^= b[uniform(rng, i + 1, b.size() - 1)];
        }
    }
    bool swap_kinds = coin(rng);
    PauliKind ka = swap_kinds ? PauliKind::Z : PauliKind::X;
    GeneratingSet g;
    g.n = n;
    for (const auto &r : a) {
        g.of(ka).push_back(PauliOperator::from_bits(ka, r));
    }
    for (const auto &r : b) {
        g.of(opposite(ka)).push_back(PauliOperator::from_bits(opposite(ka), r));
    }
    return CssCode(std::move(g));
}

WeldInstance random_raw_weld_instance(std::mt19937_64 &rng, size_t max_n) {
    size_t n1 = uniform(rng, 2, max_n), n2 = uniform(rng, 2, max_n);
    size_t s = uniform(rng, 1, std::min({n1, n2, size_t{4}}));
    std::vector<size_t> q1(n1), q2(n2);
    std::iota(q1.begin(), q1.end(), 0);
    std::iota(q2.begin(), q2.end(), 0);
    std::shuffle(q1.begin(), q1.end(), rng);
    std::shuffle(q2.begin(), q2.end(), rng);
    WeldInstance w{random_k0_code(rng, n1), random_k0_code(rng, n2), {}, uniform(rng, 0, 1) ? WeldType::X : WeldType::Z};
    for (size_t i = 0; i < s; i++) {
        w.ident.pairs.emplace_back(q1[i], q2[i]);
    }
    return w;
}

WeldInstance random_weld_instance(std::mt19937_64 &rng, size_t max_n) {
    for (;;) {
        WeldInstance w = random_raw_weld_instance(rng, max_n);
        try {
            auto [c1, c2] = prepare_weld(w.code1, w.code2, w.ident, w.type);
            w.code1 = std::move(c1);
            w.code2 = std::move(c2);
            return w;
        } catch (const WeldPreconditionError &) {
            // Restrictions span different spaces; draw again.
        }
    }
}

}  // namespace weldcode
