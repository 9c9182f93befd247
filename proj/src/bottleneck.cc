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


#include "weldcode/bottleneck.h"

#include <limits>
#include <stdexcept>

namespace weldcode {

std::vector<uint16_t> hypercube_costs(unsigned num_bits, const std::vector<BitVector> &columns) {
    uint64_t total = uint64_t{1} << num_bits;
    std::vector<uint16_t> cost(total);
    if (columns.empty()) {
        return cost;
    }
    BitVector acc(columns[0].size());
    cost[0] = 0;
    for (uint64_t i = 1; i < total; i++) {
        unsigned flip = static_cast<unsigned>(std::countr_zero(i));
        acc ^= columns[flip];
        cost[i ^ (i >> 1)] = static_cast<uint16_t>(acc.popcount());
    }
    return cost;
}

BottleneckPath bottleneck_search(const BottleneckProblem &p) {
    if (p.num_bits > 32) {
        throw std::invalid_argument("bottleneck_search: at most 32 state bits");
    }
    std::vector<uint16_t> cost = hypercube_costs(p.num_bits, p.columns);
    const uint64_t total = cost.size();
    const uint16_t kInf = std::numeric_limits<uint16_t>::max();

    // Phase 1: bucketed widest-path search for the optimal bottleneck.
    BottleneckPath out;
    std::vector<uint16_t> best(total, kInf);
    std::vector<std::vector<uint32_t>> buckets(size_t{cost[p.start]} + 1);
    best[p.start] = cost[p.start];
    buckets[cost[p.start]].push_back(static_cast<uint32_t>(p.start));
    bool found = false;
    for (size_t b = 0; b < buckets.size() && !found; b++) {
        // Buckets may grow while being drained; index rather than iterate.
        for (size_t i = 0; i < buckets[b].size(); i++) {
            uint64_t s = buckets[b][i];
            if (best[s] < b) {
                continue;
            }
            out.states_explored++;
            if (s == p.target) {
                found = true;
                break;
            }
            for (uint64_t m : p.moves) {
                uint64_t t = s ^ m;
                uint16_t nb = std::max<uint16_t>(static_cast<uint16_t>(b), cost[t]);
                if (nb < best[t]) {
                    best[t] = nb;
                    if (nb >= buckets.size()) {
                        buckets.resize(size_t{nb} + 1);
                    }
                    buckets[nb].push_back(static_cast<uint32_t>(t));
                }
            }
        }
    }
    if (!found) {
        throw std::logic_error("bottleneck_search: target unreachable");
    }
    out.value = best[p.target];
    buckets.clear();
    best.clear();
    best.shrink_to_fit();

    // Phase 2: BFS distances to the target through states within the bottleneck.
    const uint32_t kFar = std::numeric_limits<uint32_t>::max();
    std::vector<uint32_t> dist(total, kFar);
    std::vector<uint32_t> frontier{static_cast<uint32_t>(p.target)};
    dist[p.target] = 0;
    for (uint32_t level = 0; !frontier.empty() && dist[p.start] == kFar; level++) {
        std::vector<uint32_t> next;
        for (uint64_t s : frontier) {
            for (uint64_t m : p.moves) {
                uint64_t t = s ^ m;
                if (cost[t] <= out.value && dist[t] == kFar) {
                    dist[t] = level + 1;
                    next.push_back(static_cast<uint32_t>(t));
                }
            }
        }
        frontier.swap(next);
    }

    // Phase 3: walk forward taking the first move that closes distance.
    uint64_t s = p.start;
    while (s != p.target) {
        for (size_t k = 0; k < p.moves.size(); k++) {
            uint64_t t = s ^ p.moves[k];
            if (dist[t] != kFar && dist[t] + 1 == dist[s]) {
                out.moves.push_back(k);
                s = t;
                break;
            }
        }
    }
    return out;
}

}  // namespace weldcode
