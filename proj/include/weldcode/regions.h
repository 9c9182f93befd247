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


#ifndef WELDCODE_REGIONS_H
#define WELDCODE_REGIONS_H

#include <string>
#include <vector>

#include "weldcode/pauli.h"

namespace weldcode {

/// Flat regions of one quasi-particle type and the boundary qubit sets that
/// join them.
///
/// particle_type X means violated X-type generators (created by Z errors).
/// `generators` lists the indices (into the generator list of that type)
/// whose violations are counted inside a region. An error on a boundary
/// qubit creates one particle in every incident region; an error on a region
/// qubit that is not on any boundary creates an even number inside that
/// region.
struct FlatRegionGraph {
    struct Region {
        std::string label;
        QubitSet qubits;
        std::vector<size_t> generators;
    };
    struct Boundary {
        std::string label;
        QubitSet qubits;
    };

    PauliKind particle_type = PauliKind::X;
    std::vector<Region> regions;
    std::vector<Boundary> boundaries;
    /// incidence[r] lists the boundaries of region r, ascending.
    std::vector<std::vector<size_t>> incidence;

    /// The error kind that creates this particle type.
    PauliKind error_kind() const { return opposite(particle_type); }

    /// Throws ValidationError on dangling indices or an unused boundary.
    void validate() const;

    bool operator==(const FlatRegionGraph &other) const;
};

/// Region metadata attached to builder-made codes, one graph per particle type.
struct RegionMetadata {
    FlatRegionGraph x_particles;
    FlatRegionGraph z_particles;

    const FlatRegionGraph &for_particle(PauliKind k) const { return k == PauliKind::X ? x_particles : z_particles; }
};

}  // namespace weldcode

#endif
