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


#ifndef WELDCODE_BOTTLENECK_H
#define WELDCODE_BOTTLENECK_H

#include <cstdint>
#include <vector>

#include "weldcode/bitvec.h"

namespace weldcode {

/// Minimax path search on the hypercube GF(2)^num_bits.
///
/// A state's cost is the weight of the XOR of the `columns` of its set bits.
/// Moves XOR a state with one of `moves`; they are tried in the given order,
/// which fixes the tie-break between equally good paths.
struct BottleneckProblem {
    unsigned num_bits = 0;
    std::vector<BitVector> columns;
    std::vector<uint64_t> moves;
    uint64_t start = 0;
    uint64_t target = 0;
};

struct BottleneckPath {
    unsigned value = 0;
    /// Indices into `moves`, in walk order.
    std::vector<size_t> moves;
    uint64_t states_explored = 0;
};

/// Cost of every state, enumerated in Gray-code order.
std::vector<uint16_t> hypercube_costs(unsigned num_bits, const std::vector<BitVector> &columns);

/// Optimal bottleneck, then the fewest steps among optimal paths, then the
/// lowest move index at each step. Target must be reachable.
BottleneckPath bottleneck_search(const BottleneckProblem &problem);

}  // namespace weldcode

#endif
