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


#ifndef WELDCODE_BUILDERS_H
#define WELDCODE_BUILDERS_H

#include <string>
#include <vector>

#include "weldcode/css.h"
#include "weldcode/graph.h"
#include "weldcode/welding.h"

namespace weldcode {

/// Surface code with `width` plaquette columns and `height` plaquette rows.
/// Top and bottom edges are rough, left and right are smooth.
///
/// Qubit order: for each row r, the vertical edges (r, 0..width), then (if
/// r < height-1) the horizontal edges on vertex row r+1.
struct SurfaceSpec {
    size_t width = 1;
    size_t height = 1;
};

/// What to do with the horizontal X string (bottom row of vertical edges)
/// and the vertical Z string (left column).
enum class StringLogicals { kNone, kFoldX, kFoldZ, kPromote };

/// Solid code on a dx x dy x dz box of cells. Top and bottom are rough.
///
/// Qubit order: layer by layer in z; on layer l the x-edges and y-edges of
/// that layer (only 1 <= l <= dz-1), then the z-edges from l to l+1.
struct SolidSpec {
    size_t dx = 1;
    size_t dy = 1;
    size_t dz = 1;
    bool horizontal_plaquettes = false;
};

enum class BoundaryType { Rough, Smooth };
BoundaryType parse_boundary_type(const std::string &s);

CssCode build_two_qubit();
/// X_i X_{i+1} checks. With `folded`, Z^n is a generator (k=0); otherwise it
/// is promoted with partner X on qubit 0.
CssCode build_repetition(size_t n, bool folded = false);

size_t surface_num_qubits(const SurfaceSpec &spec);
size_t surface_vertical(const SurfaceSpec &spec, size_t row, size_t col);
/// Horizontal edge on vertex row `vrow` (1..height-1).
size_t surface_horizontal(const SurfaceSpec &spec, size_t vrow, size_t col);
CssCode build_surface(const SurfaceSpec &spec, StringLogicals strings = StringLogicals::kPromote);

/// Welds the surface out of two-qubit codes: three-qubit halves by Z-welds,
/// tiles by X-welds, strips by X-welds on smooth edges, stacks by Z-welds on
/// rough edges. Returns the weld output (k=0, horizontal X string among the
/// generators), relabeled to the build_surface qubit order.
CssCode build_surface_by_welding(const SurfaceSpec &spec);

struct ChainStage {
    std::string name;
    CssCode code;
};

/// two-qubit, 3, 5, 7 (promoted X string), 8, 13 (promoted Z string).
std::vector<ChainStage> surface_chain();

enum class SolidAxis { X = 0, Y = 1, Z = 2 };
size_t solid_num_qubits(const SolidSpec &spec);
/// x-edges and y-edges exist on layers 1..dz-1; z-edge (x,y,l) joins layer l to l+1.
size_t solid_qubit(const SolidSpec &spec, SolidAxis axis, size_t x, size_t y, size_t l);
CssCode build_solid(const SolidSpec &spec);

/// Welds tall one-plaquette-wide surface strips (one per cross-section edge,
/// horizontal X string folded) on their smooth edges over the cross-section
/// grid. Returns the weld output (k=0, membrane among the X generators) in
/// the build_solid qubit order.
CssCode build_solid_by_welding(const SolidSpec &spec);

/// One surface per graph edge. Rough boundaries are joined by Z-type welds,
/// smooth ones by X-type welds; the welded string is promoted.
CssCode build_welded_surface(const WeldGraph &graph, BoundaryType boundary, const SurfaceSpec &spec);

/// One solid per graph edge, Z-type welds on shared rough boundaries. The
/// welded Z string is promoted with the layer-0 membrane of solid 0 as its
/// partner.
CssCode build_welded_solid(const WeldGraph &graph, const SolidSpec &spec);

size_t welded_solid_num_qubits(const WeldGraph &graph, const SolidSpec &spec);

/// Builder-annotated flat regions. Throws ValidationError for codes without
/// region metadata.
const FlatRegionGraph &flat_region_graph(const CssCode &code, PauliKind particle_type);

/// Regions are the graph's edges, boundaries its vertices (boundary v is
/// qubit v).
FlatRegionGraph region_graph_from_weld_graph(const WeldGraph &graph, PauliKind particle_type);

}  // namespace weldcode

#endif
