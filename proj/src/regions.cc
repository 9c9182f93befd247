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


#include "weldcode/regions.h"

#include "weldcode/errors.h"

namespace weldcode {

void FlatRegionGraph::validate() const {
    if (incidence.size() != regions.size()) {
        throw ValidationError("region incidence has wrong length");
    }
    std::vector<bool> used(boundaries.size(), false);
    for (const auto &row : incidence) {
        for (size_t b : row) {
            if (b >= boundaries.size()) {
                throw ValidationError("region incidence references missing boundary " + std::to_string(b));
            }
            used[b] = true;
        }
    }
    for (size_t b = 0; b < boundaries.size(); b++) {
        if (!used[b]) {
            throw ValidationError("boundary '" + boundaries[b].label + "' touches no region");
        }
    }
}

bool FlatRegionGraph::operator==(const FlatRegionGraph &other) const {
    if (particle_type != other.particle_type || incidence != other.incidence ||
        regions.size() != other.regions.size() || boundaries.size() != other.boundaries.size()) {
        return false;
    }
    for (size_t i = 0; i < regions.size(); i++) {
        const auto &a = regions[i];
        const auto &b = other.regions[i];
        if (a.label != b.label || a.qubits != b.qubits || a.generators != b.generators) {
            return false;
        }
    }
    for (size_t i = 0; i < boundaries.size(); i++) {
        if (boundaries[i].label != other.boundaries[i].label || boundaries[i].qubits != other.boundaries[i].qubits) {
            return false;
        }
    }
    return true;
}

}  // namespace weldcode
