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

#include <algorithm>

#include "oracles.h"
#include "weldcode/builders.h"
#include "weldcode/errors.h"
#include "weldcode/graph.h"

using namespace weldcode;

namespace {

bool same_group(const CssCode &a, const CssCode &b) { return groups_equal(a.gens(), b.gens()); }

void expect_regions_consistent(const CssCode &c) {
    ASSERT_NE(c.regions(), nullptr);
    for (PauliKind particle : {PauliKind::X, PauliKind::Z}) {
        const FlatRegionGraph &g = c.regions()->for_particle(particle);
        EXPECT_NO_THROW(g.validate());
        // A single error on a qubit outside every boundary leaves an even
        // number of particles in each region it touches.
        std::vector<bool> on_boundary(c.n(), false);
        for (const auto &b : g.boundaries)
            for (size_t q : b.qubits) on_boundary[q] = true;
        const auto &gens = c.gens(particle);
        for (size_t q = 0; q < c.n(); q++) {
            if (on_boundary[q]) continue;
            for (const auto &r : g.regions) {
                size_t hit = 0;
                for (size_t gi : r.generators) hit += gens[gi].bits(particle).get(q);
                EXPECT_EQ(hit % 2, 0u) << "qubit " << q << " region " << r.label;
            }
        }
    }
}

}  // namespace

TEST(Graph, Generators) {
    EXPECT_EQ(WeldGraph::path(3).edges.size(), 3u);
    EXPECT_EQ(WeldGraph::path(3).num_vertices(), 4u);
    EXPECT_EQ(WeldGraph::star(4).degrees()[0], 4u);
    EXPECT_EQ(WeldGraph::grid(3, 3).edges.size(), 12u);
    EXPECT_EQ(WeldGraph::cubic(2, 2, 2).edges.size(), 12u);
    WeldGraph g = WeldGraph::parse("# tri\nv a\nv b\nv c\ne a b\ne b c\n");
    EXPECT_EQ(g.edges, (std::vector<std::pair<size_t, size_t>>{{0, 1}, {1, 2}}));
    EXPECT_EQ(WeldGraph::parse(g.str()).edges, g.edges);
    EXPECT_THROW(WeldGraph::parse("v a\ne a a\n"), ValidationError);
    EXPECT_THROW(WeldGraph::from_spec("ring:3"), ValidationError);
}

TEST(Surface, CountsAndParameters) {
    EXPECT_EQ(surface_num_qubits({1, 2}), 5u);
    EXPECT_EQ(surface_num_qubits({2, 2}), 8u);
    EXPECT_EQ(surface_num_qubits({2, 3}), 13u);
    for (size_t w = 1; w <= 3; w++) {
        for (size_t h = 1; h <= 3; h++) {
            CssCode c = build_surface({w, h});
            EXPECT_EQ(encoded_qubits(c), 1u);
            DistanceResult d = distance(c);
            EXPECT_EQ(d.d_x, w + 1);
            EXPECT_EQ(d.d_z, h);
            expect_regions_consistent(c);
        }
    }
    EXPECT_THROW(build_surface({0, 2}), ValidationError);
}

TEST(Surface, WeldingReproducesLattice) {
    for (size_t w = 1; w <= 4; w++) {
        for (size_t h = 1; h <= 4; h++) {
            CssCode welded = build_surface_by_welding({w, h});
            EXPECT_EQ(encoded_qubits(welded), 0u);
            EXPECT_TRUE(same_group(welded, build_surface({w, h}, StringLogicals::kFoldX))) << w << "x" << h;
        }
    }
}

TEST(Surface, ChainDistances) {
    auto chain = surface_chain();
    const CssCode &seven = chain[3].code;
    DistanceResult d7 = distance(seven);
    EXPECT_EQ(d7.d_x, 3u);
    EXPECT_EQ(d7.d_z, 2u);
    const CssCode &thirteen = chain[5].code;
    EXPECT_EQ(encoded_qubits(thirteen), 1u);
    EXPECT_EQ(distance(thirteen).d(), 3u);
    EXPECT_TRUE(same_group(thirteen, build_surface({2, 3})));
}

TEST(Solid, CountsAndParameters) {
    for (size_t d = 1; d <= 2; d++) {
        for (size_t dz = 1; dz <= 2; dz++) {
            SolidSpec s{d, d, dz, false};
            CssCode c = build_solid(s);
            EXPECT_EQ(c.n(), solid_num_qubits(s));
            EXPECT_EQ(encoded_qubits(c), 1u);
            DistanceResult dd = distance(c);
            EXPECT_EQ(dd.d_x, (d + 1) * (d + 1));
            EXPECT_EQ(dd.d_z, dz);
            expect_regions_consistent(c);
        }
    }
    SolidSpec h{2, 1, 3, true};
    EXPECT_EQ(encoded_qubits(build_solid(h)), 1u);
    EXPECT_TRUE(same_group(fold_logical(build_solid(h), 0, PauliKind::X),
                           fold_logical(build_solid({2, 1, 3, false}), 0, PauliKind::X)));
}

TEST(Solid, QubitIndicesAreABijection) {
    SolidSpec s{2, 3, 3, false};
    std::vector<bool> hit(solid_num_qubits(s), false);
    for (size_t l = 0; l < s.dz; l++) {
        for (size_t y = 0; y <= s.dy; y++) {
            for (size_t x = 0; x <= s.dx; x++) {
                if (l + 1 <= s.dz) hit.at(solid_qubit(s, SolidAxis::Z, x, y, l)) = true;
                if (l >= 1 && x < s.dx) hit.at(solid_qubit(s, SolidAxis::X, x, y, l)) = true;
                if (l >= 1 && y < s.dy) hit.at(solid_qubit(s, SolidAxis::Y, x, y, l)) = true;
            }
        }
    }
    for (bool b : hit) EXPECT_TRUE(b);
}

TEST(Solid, WeldingReproducesLattice) {
    for (SolidSpec s : {SolidSpec{1, 1, 1}, SolidSpec{1, 1, 2}, SolidSpec{2, 1, 2}, SolidSpec{2, 2, 2},
                        SolidSpec{2, 2, 3}}) {
        CssCode welded = build_solid_by_welding(s);
        EXPECT_EQ(encoded_qubits(welded), 0u);
        EXPECT_TRUE(same_group(welded, fold_logical(build_solid(s), 0, PauliKind::X)));
        // Promoting the membrane back out gives the solid itself.
        CssCode folded = fold_logical(build_solid(s), 0, PauliKind::X);
        CssCode rebased = rebase_generators(welded, folded.gens());
        size_t membrane = rebased.gens(PauliKind::X).size() - 1;
        ASSERT_EQ(rebased.gens(PauliKind::X)[membrane], build_solid(s).logicals()[0].x_rep);
        CssCode promoted = promote_to_logical(rebased, {PauliKind::X, membrane});
        EXPECT_EQ(encoded_qubits(promoted), 1u);
        EXPECT_TRUE(same_group(promoted, build_solid(s)));
    }
}

TEST(Solid, SmallestCountByHand) {
    // dz = 1: only the four vertical edges of one cell survive.
    EXPECT_EQ(solid_num_qubits({1, 1, 1}), 4u);
    // dz = 2: 4 + 4 vertical, 4 horizontal on the middle layer.
    EXPECT_EQ(solid_num_qubits({1, 1, 2}), 12u);
}

TEST(Solid, HorizontalPlaquettesAreInTheGroup) {
    for (SolidSpec s : {SolidSpec{1, 1, 2}, SolidSpec{2, 1, 3}, SolidSpec{2, 2, 3}}) {
        CssCode plain = build_solid(s);
        SolidSpec with = s;
        with.horizontal_plaquettes = true;
        CssCode full = build_solid(with);
        ASSERT_GT(full.gens(PauliKind::Z).size(), plain.gens(PauliKind::Z).size());
        for (size_t i = plain.gens(PauliKind::Z).size(); i < full.gens(PauliKind::Z).size(); i++) {
            EXPECT_EQ(full.gens(PauliKind::Z)[i].weight(), 4u);
            EXPECT_TRUE(in_group(plain.gens(), full.gens(PauliKind::Z)[i]));
        }
    }
}

TEST(WeldedSurface, RoughAndSmooth) {
    for (const char *spec : {"path:1", "path:3", "star:3", "grid:2,2"}) {
        WeldGraph g = WeldGraph::from_spec(spec);
        for (BoundaryType b : {BoundaryType::Rough, BoundaryType::Smooth}) {
            CssCode c = build_welded_surface(g, b, {2, 2});
            EXPECT_EQ(encoded_qubits(c), 1u) << spec;
            expect_regions_consistent(c);
            PauliKind primary = b == BoundaryType::Rough ? PauliKind::X : PauliKind::Z;
            EXPECT_EQ(c.regions()->for_particle(primary).regions.size(), g.edges.size());
        }
    }
    // Single edge is just the surface code.
    CssCode one = build_welded_surface(WeldGraph::path(1), BoundaryType::Rough, {2, 2});
    EXPECT_TRUE(same_group(one, build_surface({2, 2})));
    EXPECT_THROW(build_welded_surface(WeldGraph::path(2), BoundaryType::Rough, {2, 1}), ValidationError);
}

/// A single error on a boundary qubit leaves one particle in every incident
/// region; anywhere else it leaves at most two, inside one region.
void expect_splitting_rules(const CssCode &c, PauliKind particle) {
    const FlatRegionGraph &g = c.regions()->for_particle(particle);
    std::vector<size_t> boundary_of(c.n(), SIZE_MAX);
    for (size_t b = 0; b < g.boundaries.size(); b++)
        for (size_t q : g.boundaries[b].qubits) boundary_of[q] = b;
    std::vector<size_t> region_of(c.gens(particle).size(), SIZE_MAX);
    for (size_t r = 0; r < g.regions.size(); r++)
        for (size_t i : g.regions[r].generators) region_of[i] = r;
    for (size_t q = 0; q < c.n(); q++) {
        Syndrome s = syndrome(c, PauliOperator::from_support(c.n(), g.error_kind(), {q}));
        const auto &violated = particle == PauliKind::X ? s.violated_x : s.violated_z;
        std::vector<size_t> per_region(g.regions.size(), 0);
        for (size_t i : violated) {
            ASSERT_NE(region_of[i], SIZE_MAX);
            per_region[region_of[i]]++;
        }
        if (boundary_of[q] != SIZE_MAX) {
            for (size_t r = 0; r < g.regions.size(); r++) {
                const auto &inc = g.incidence[r];
                bool incident = std::find(inc.begin(), inc.end(), boundary_of[q]) != inc.end();
                EXPECT_EQ(per_region[r], incident ? 1u : 0u) << "qubit " << q << " region " << r;
            }
        } else {
            EXPECT_LE(violated.size(), 2u) << "qubit " << q;
            size_t touched = 0;
            for (size_t n : per_region) touched += n > 0;
            EXPECT_LE(touched, 1u) << "qubit " << q;
        }
    }
}

TEST(WeldedSurface, SplittingRules) {
    CssCode rough = build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, {2, 2});
    expect_splitting_rules(rough, PauliKind::X);
    CssCode smooth = build_welded_surface(WeldGraph::star(3), BoundaryType::Smooth, {2, 2});
    expect_splitting_rules(smooth, PauliKind::Z);
    // Three particles at the three-way weld.
    const auto &b = rough.regions()->x_particles.boundaries[0];
    Syndrome s = syndrome(rough, PauliOperator::from_support(rough.n(), PauliKind::Z, {b.qubits[0]}));
    EXPECT_EQ(s.violated_x.size(), 3u);
    // The welded string is three strings joined on the weld line.
    EXPECT_EQ(rough.logicals()[0].z_rep.weight(), 3 * 2u - 2u);
}

TEST(WeldedSolid, SplittingRules) {
    CssCode c = build_welded_solid(WeldGraph::star(3), {1, 1, 2, false});
    expect_splitting_rules(c, PauliKind::X);
    expect_splitting_rules(build_solid({2, 2, 2, false}), PauliKind::X);
}

TEST(WeldedSurface, StarDistances) {
    CssCode c = build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, {2, 2});
    EXPECT_EQ(c.n(), 3 * 8u - 2 * 3u);
    DistanceResult d = distance(c);
    EXPECT_EQ(d.d_x, oracle::distance(c, PauliKind::X));
    EXPECT_EQ(d.d_z, oracle::distance(c, PauliKind::Z));
}

TEST(WeldedSolid, CountsAndMetadata) {
    for (const char *spec : {"path:1", "path:2", "star:3", "grid:2,2"}) {
        WeldGraph g = WeldGraph::from_spec(spec);
        SolidSpec s{1, 1, 2, false};
        CssCode c = build_welded_solid(g, s);
        EXPECT_EQ(c.n(), welded_solid_num_qubits(g, s));
        EXPECT_EQ(encoded_qubits(c), 1u);
        expect_regions_consistent(c);
    }
    CssCode one = build_welded_solid(WeldGraph::path(1), {2, 1, 2, false});
    EXPECT_TRUE(same_group(one, build_solid({2, 1, 2, false})));
    EXPECT_THROW(build_welded_solid(WeldGraph::path(2), {1, 1, 1, false}), ValidationError);
    EXPECT_THROW(build_welded_solid(WeldGraph::path(2), {1, 1, 2, true}), ValidationError);
}

TEST(Regions, FromWeldGraph) {
    FlatRegionGraph g = region_graph_from_weld_graph(WeldGraph::star(3), PauliKind::X);
    EXPECT_EQ(g.regions.size(), 3u);
    EXPECT_EQ(g.boundaries.size(), 4u);
    EXPECT_EQ(g.incidence[2], (std::vector<size_t>{0, 3}));
    EXPECT_THROW(flat_region_graph(build_two_qubit(), PauliKind::X), ValidationError);
}
