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


#include "weldcode/builders.h"

#include <array>
#include <map>

#include "weldcode/errors.h"
#include "weldcode/gf2.h"

namespace weldcode {

namespace {

using Key = std::array<long long, 4>;

/// A code whose qubits carry coordinates; welding matches equal coordinates.
struct Keyed {
    CssCode code;
    std::vector<Key> keys;
};

Keyed keyed_weld(const Keyed &a, const Keyed &b, WeldType type) {
    std::map<Key, size_t> where;
    for (size_t i = 0; i < a.keys.size(); i++) {
        where[a.keys[i]] = i;
    }
    QubitIdentification ident;
    for (size_t j = 0; j < b.keys.size(); j++) {
        auto it = where.find(b.keys[j]);
        if (it != where.end()) {
            ident.pairs.emplace_back(it->second, j);
        }
    }
    auto [c1, c2] = prepare_weld(a.code, b.code, ident, type);
    WeldResult r = weld(c1, c2, ident, type);
    std::vector<Key> keys(r.layout.N);
    for (size_t i = 0; i < a.keys.size(); i++) {
        keys[r.layout.embed1[i]] = a.keys[i];
    }
    for (size_t j = 0; j < b.keys.size(); j++) {
        keys[r.layout.embed2[j]] = b.keys[j];
    }
    return {r.code, std::move(keys)};
}

/// Relabels so that qubit i moves to index_of(keys[i]).
template <typename F>
Keyed relabel_keyed(const Keyed &k, F index_of) {
    std::vector<size_t> perm(k.keys.size());
    std::vector<Key> keys(k.keys.size());
    for (size_t i = 0; i < k.keys.size(); i++) {
        perm[i] = index_of(k.keys[i]);
        if (perm[i] >= perm.size()) {
            throw std::logic_error("keyed relabel: index out of range");
        }
        keys[perm[i]] = k.keys[i];
    }
    return {relabel(k.code, perm), std::move(keys)};
}

Keyed keyed_two(Key a, Key b) { return {build_two_qubit(), {a, b}}; }

PauliOperator op(size_t n, PauliKind k, const std::vector<size_t> &support) {
    return PauliOperator::from_support(n, k, support);
}

void check_surface(const SurfaceSpec &s) {
    if (s.width < 1 || s.height < 1) {
        throw ValidationError("surface width and height must be at least 1");
    }
}

void check_solid(const SolidSpec &s) {
    if (s.dx < 1 || s.dy < 1 || s.dz < 1) {
        throw ValidationError("solid dimensions must be at least 1");
    }
}

// Surface keys: {0, row, col, 0} vertical edge, {1, vertex row, col, 0} horizontal edge.
Key sv(size_t r, size_t c) { return {0, (long long)r, (long long)c, 0}; }
Key sh(size_t vr, size_t c) { return {1, (long long)vr, (long long)c, 0}; }

size_t surface_key_index(const SurfaceSpec &s, const Key &k, size_t row_offset = 0) {
    size_t r = static_cast<size_t>(k[1]) - row_offset;
    size_t c = static_cast<size_t>(k[2]);
    return k[0] == 0 ? surface_vertical(s, r, c) : surface_horizontal(s, r, c);
}

Keyed surface_tile(size_t r0, size_t c) {
    Keyed top = keyed_weld(keyed_two(sv(r0, c), sh(r0 + 1, c)), keyed_two(sh(r0 + 1, c), sv(r0, c + 1)), WeldType::Z);
    Keyed bot =
        keyed_weld(keyed_two(sv(r0 + 1, c), sh(r0 + 1, c)), keyed_two(sh(r0 + 1, c), sv(r0 + 1, c + 1)), WeldType::Z);
    return keyed_weld(top, bot, WeldType::X);
}

Keyed surface_strip(size_t r0, size_t width) {
    Keyed cur = surface_tile(r0, 0);
    for (size_t c = 1; c < width; c++) {
        cur = keyed_weld(cur, surface_tile(r0, c), WeldType::X);
    }
    return cur;
}

/// Z-type generator tags for a solid: the cross-section edge each vertical
/// plaquette sits over, or npos for horizontal plaquettes.
struct SolidLayout {
    GeneratingSet gens;
    std::vector<size_t> z_edge;
    size_t num_stars = 0;
};

size_t cross_x_edge(const SolidSpec &s, size_t x, size_t y) { return y * s.dx + x; }
size_t cross_y_edge(const SolidSpec &s, size_t x, size_t y) { return s.dx * (s.dy + 1) + y * (s.dx + 1) + x; }
size_t cross_num_edges(const SolidSpec &s) { return s.dx * (s.dy + 1) + (s.dx + 1) * s.dy; }
size_t cross_vertex(const SolidSpec &s, size_t x, size_t y) { return y * (s.dx + 1) + x; }

SolidLayout solid_layout(const SolidSpec &s) {
    check_solid(s);
    SolidLayout L;
    size_t n = solid_num_qubits(s);
    L.gens.n = n;
    auto q = [&](SolidAxis a, size_t x, size_t y, size_t l) { return solid_qubit(s, a, x, y, l); };
    for (size_t l = 1; l < s.dz; l++) {
        for (size_t y = 0; y <= s.dy; y++) {
            for (size_t x = 0; x <= s.dx; x++) {
                std::vector<size_t> sup{q(SolidAxis::Z, x, y, l - 1), q(SolidAxis::Z, x, y, l)};
                if (x > 0) sup.push_back(q(SolidAxis::X, x - 1, y, l));
                if (x < s.dx) sup.push_back(q(SolidAxis::X, x, y, l));
                if (y > 0) sup.push_back(q(SolidAxis::Y, x, y - 1, l));
                if (y < s.dy) sup.push_back(q(SolidAxis::Y, x, y, l));
                L.gens.x_gens.push_back(op(n, PauliKind::X, sup));
            }
        }
    }
    L.num_stars = L.gens.x_gens.size();
    for (size_t l = 0; l < s.dz; l++) {
        bool below = l >= 1, above = l + 1 <= s.dz - 1;
        for (size_t y = 0; y <= s.dy; y++) {
            for (size_t x = 0; x < s.dx; x++) {
                std::vector<size_t> sup{q(SolidAxis::Z, x, y, l), q(SolidAxis::Z, x + 1, y, l)};
                if (below) sup.push_back(q(SolidAxis::X, x, y, l));
                if (above) sup.push_back(q(SolidAxis::X, x, y, l + 1));
                L.gens.z_gens.push_back(op(n, PauliKind::Z, sup));
                L.z_edge.push_back(cross_x_edge(s, x, y));
            }
        }
        for (size_t y = 0; y < s.dy; y++) {
            for (size_t x = 0; x <= s.dx; x++) {
                std::vector<size_t> sup{q(SolidAxis::Z, x, y, l), q(SolidAxis::Z, x, y + 1, l)};
                if (below) sup.push_back(q(SolidAxis::Y, x, y, l));
                if (above) sup.push_back(q(SolidAxis::Y, x, y, l + 1));
                L.gens.z_gens.push_back(op(n, PauliKind::Z, sup));
                L.z_edge.push_back(cross_y_edge(s, x, y));
            }
        }
    }
    if (s.horizontal_plaquettes) {
        for (size_t l = 1; l < s.dz; l++) {
            for (size_t y = 0; y < s.dy; y++) {
                for (size_t x = 0; x < s.dx; x++) {
                    L.gens.z_gens.push_back(op(n, PauliKind::Z,
                                               {q(SolidAxis::X, x, y, l), q(SolidAxis::X, x, y + 1, l),
                                                q(SolidAxis::Y, x, y, l), q(SolidAxis::Y, x + 1, y, l)}));
                    L.z_edge.push_back(SIZE_MAX);
                }
            }
        }
    }
    return L;
}

std::vector<size_t> range(size_t a, size_t b) {
    std::vector<size_t> out;
    for (size_t i = a; i < b; i++) {
        out.push_back(i);
    }
    return out;
}

/// Z-particle regions of a solid-like assembly: one per cross-section edge,
/// boundaries are the cross-section vertices.
FlatRegionGraph cross_section_regions(const SolidSpec &s, const GeneratingSet &gens,
                                      const std::vector<size_t> &gen_edge,
                                      const std::vector<std::vector<size_t>> &vertex_qubits) {
    FlatRegionGraph g;
    g.particle_type = PauliKind::Z;
    size_t ne = cross_num_edges(s);
    g.regions.resize(ne);
    g.incidence.resize(ne);
    for (size_t y = 0; y <= s.dy; y++) {
        for (size_t x = 0; x <= s.dx; x++) {
            size_t v = cross_vertex(s, x, y);
            g.boundaries.push_back({std::to_string(x) + "," + std::to_string(y), QubitSet(vertex_qubits[v])});
            if (x < s.dx) {
                size_t e = cross_x_edge(s, x, y);
                g.regions[e].label = "x" + std::to_string(x) + "," + std::to_string(y);
                g.incidence[e] = {v, cross_vertex(s, x + 1, y)};
            }
            if (y < s.dy) {
                size_t e = cross_y_edge(s, x, y);
                g.regions[e].label = "y" + std::to_string(x) + "," + std::to_string(y);
                g.incidence[e] = {v, cross_vertex(s, x, y + 1)};
            }
        }
    }
    std::vector<std::vector<size_t>> qubits(ne);
    for (size_t i = 0; i < gen_edge.size(); i++) {
        if (gen_edge[i] == SIZE_MAX) {
            continue;
        }
        g.regions[gen_edge[i]].generators.push_back(i);
        for (size_t q : gens.z_gens[i].z_bits().ones()) {
            qubits[gen_edge[i]].push_back(q);
        }
    }
    for (size_t e = 0; e < ne; e++) {
        g.regions[e].qubits = QubitSet(qubits[e]);
    }
    return g;
}

}  // namespace

BoundaryType parse_boundary_type(const std::string &s) {
    if (s == "rough") {
        return BoundaryType::Rough;
    }
    if (s == "smooth") {
        return BoundaryType::Smooth;
    }
    throw ValidationError("boundary must be rough or smooth, got '" + s + "'");
}

CssCode build_two_qubit() {
    GeneratingSet g;
    g.n = 2;
    g.x_gens.push_back(PauliOperator::parse("XX"));
    g.z_gens.push_back(PauliOperator::parse("ZZ"));
    return CssCode(std::move(g));
}

CssCode build_repetition(size_t n, bool folded) {
    if (n < 1) {
        throw ValidationError("repetition code needs at least one qubit");
    }
    GeneratingSet g;
    g.n = n;
    for (size_t i = 0; i + 1 < n; i++) {
        g.x_gens.push_back(op(n, PauliKind::X, {i, i + 1}));
    }
    PauliOperator zbar = op(n, PauliKind::Z, range(0, n));
    if (folded) {
        g.z_gens.push_back(zbar);
        return CssCode(std::move(g));
    }
    return CssCode(std::move(g), {LogicalClass{zbar, op(n, PauliKind::X, {0})}});
}

size_t surface_num_qubits(const SurfaceSpec &s) { return s.height * (s.width + 1) + (s.height - 1) * s.width; }

size_t surface_vertical(const SurfaceSpec &s, size_t row, size_t col) { return row * (2 * s.width + 1) + col; }

size_t surface_horizontal(const SurfaceSpec &s, size_t vrow, size_t col) {
    return (vrow - 1) * (2 * s.width + 1) + (s.width + 1) + col;
}

CssCode build_surface(const SurfaceSpec &s, StringLogicals strings) {
    check_surface(s);
    size_t w = s.width, h = s.height, n = surface_num_qubits(s);
    GeneratingSet g;
    g.n = n;
    for (size_t vr = 1; vr < h; vr++) {
        for (size_t c = 0; c <= w; c++) {
            std::vector<size_t> sup{surface_vertical(s, vr - 1, c), surface_vertical(s, vr, c)};
            if (c > 0) sup.push_back(surface_horizontal(s, vr, c - 1));
            if (c < w) sup.push_back(surface_horizontal(s, vr, c));
            g.x_gens.push_back(op(n, PauliKind::X, sup));
        }
    }
    for (size_t r = 0; r < h; r++) {
        for (size_t c = 0; c < w; c++) {
            std::vector<size_t> sup{surface_vertical(s, r, c), surface_vertical(s, r, c + 1)};
            if (r >= 1) sup.push_back(surface_horizontal(s, r, c));
            if (r + 1 < h) sup.push_back(surface_horizontal(s, r + 1, c));
            g.z_gens.push_back(op(n, PauliKind::Z, sup));
        }
    }
    size_t num_stars = g.x_gens.size(), num_plaquettes = g.z_gens.size();

    auto meta = std::make_shared<RegionMetadata>();
    std::vector<size_t> top, bottom, left, right;
    for (size_t c = 0; c <= w; c++) {
        top.push_back(surface_vertical(s, 0, c));
        bottom.push_back(surface_vertical(s, h - 1, c));
    }
    for (size_t r = 0; r < h; r++) {
        left.push_back(surface_vertical(s, r, 0));
        right.push_back(surface_vertical(s, r, w));
    }
    auto &xr = meta->x_particles;
    xr.particle_type = PauliKind::X;
    xr.regions.push_back({"surface", QubitSet(range(0, n)), range(0, num_stars)});
    xr.incidence.emplace_back();
    if (h >= 2) {
        xr.boundaries.push_back({"top", QubitSet(top)});
        xr.boundaries.push_back({"bottom", QubitSet(bottom)});
        xr.incidence[0] = {0, 1};
    }
    auto &zr = meta->z_particles;
    zr.particle_type = PauliKind::Z;
    zr.regions.push_back({"surface", QubitSet(range(0, n)), range(0, num_plaquettes)});
    zr.boundaries.push_back({"left", QubitSet(left)});
    zr.boundaries.push_back({"right", QubitSet(right)});
    zr.incidence.push_back({0, 1});

    PauliOperator xbar = op(n, PauliKind::X, bottom);
    PauliOperator zbar = op(n, PauliKind::Z, left);
    std::vector<LogicalClass> logicals;
    switch (strings) {
        case StringLogicals::kNone:
            break;
        case StringLogicals::kFoldX:
            g.x_gens.push_back(xbar);
            break;
        case StringLogicals::kFoldZ:
            g.z_gens.push_back(zbar);
            break;
        case StringLogicals::kPromote:
            logicals.push_back({zbar, xbar});
            break;
    }
    return CssCode(std::move(g), std::move(logicals), std::move(meta));
}

CssCode build_surface_by_welding(const SurfaceSpec &s) {
    check_surface(s);
    Keyed cur;
    if (s.height == 1) {
        cur = keyed_two(sv(0, 0), sv(0, 1));
        for (size_t c = 1; c < s.width; c++) {
            cur = keyed_weld(cur, keyed_two(sv(0, c), sv(0, c + 1)), WeldType::X);
        }
    } else {
        cur = surface_strip(0, s.width);
        for (size_t r0 = 1; r0 + 1 < s.height; r0++) {
            cur = keyed_weld(cur, surface_strip(r0, s.width), WeldType::Z);
        }
    }
    return relabel_keyed(cur, [&](const Key &k) { return surface_key_index(s, k); }).code;
}

std::vector<ChainStage> surface_chain() {
    std::vector<ChainStage> out;
    CssCode two = build_two_qubit();
    out.push_back({"two-qubit", two});
    out.push_back({"three", weld(two, two, QubitIdentification{{{1, 0}}}, WeldType::Z).code});

    SurfaceSpec s12{1, 2};
    CssCode five = relabel_keyed(surface_tile(0, 0), [&](const Key &k) { return surface_key_index(s12, k); }).code;
    out.push_back({"five", five});

    // Natural form: two stars, then the bottom X string.
    CssCode five_n = rebase_generators(five, build_surface(s12, StringLogicals::kFoldX).gens());
    size_t xbar_index = five_n.gens(PauliKind::X).size() - 1;
    // Right smooth edge (tr, m, br) of one copy onto the left edge (tl, m, bl) of the other.
    QubitIdentification ident{{{surface_vertical(s12, 0, 1), surface_vertical(s12, 0, 0)},
                               {surface_horizontal(s12, 1, 0), surface_horizontal(s12, 1, 0)},
                               {surface_vertical(s12, 1, 1), surface_vertical(s12, 1, 0)}}};
    WeldResult seven = weld(five_n, five_n, ident, WeldType::X);
    size_t welded_string = SIZE_MAX;
    for (const auto &e : seven.trace) {
        if (e.gen1 && *e.gen1 == xbar_index) {
            welded_string = e.output_index;
        }
    }
    out.push_back({"seven", promote_to_logical(seven.code, {PauliKind::X, welded_string})});

    SurfaceSpec s22{2, 2};
    out.push_back(
        {"eight", relabel_keyed(surface_strip(0, 2), [&](const Key &k) { return surface_key_index(s22, k); }).code});

    // Swap which string sits in the generating set, then stack two strips.
    auto switched = [&](size_t r0) {
        Keyed k = relabel_keyed(surface_strip(r0, 2), [&](const Key &key) { return surface_key_index(s22, key, r0); });
        CssCode c = rebase_generators(k.code, build_surface(s22, StringLogicals::kFoldX).gens());
        c = promote_to_logical(c, {PauliKind::X, c.gens(PauliKind::X).size() - 1});
        k.code = fold_logical(c, 0, PauliKind::Z);
        return k;
    };
    SurfaceSpec s23{2, 3};
    Keyed stacked = keyed_weld(switched(0), switched(1), WeldType::Z);
    CssCode thirteen = relabel_keyed(stacked, [&](const Key &k) { return surface_key_index(s23, k); }).code;
    thirteen = rebase_generators(thirteen, build_surface(s23, StringLogicals::kFoldZ).gens());
    thirteen = promote_to_logical(thirteen, {PauliKind::Z, thirteen.gens(PauliKind::Z).size() - 1});
    out.push_back({"thirteen", thirteen});
    return out;
}

size_t solid_num_qubits(const SolidSpec &s) {
    size_t zc = (s.dx + 1) * (s.dy + 1);
    size_t hc = s.dx * (s.dy + 1) + (s.dx + 1) * s.dy;
    return zc * s.dz + hc * (s.dz - 1);
}

size_t solid_qubit(const SolidSpec &s, SolidAxis axis, size_t x, size_t y, size_t l) {
    size_t zc = (s.dx + 1) * (s.dy + 1);
    size_t hc = s.dx * (s.dy + 1) + (s.dx + 1) * s.dy;
    size_t base = l * zc + (l >= 1 ? (l - 1) * hc : 0);
    switch (axis) {
        case SolidAxis::X:
            return base + y * s.dx + x;
        case SolidAxis::Y:
            return base + s.dx * (s.dy + 1) + y * (s.dx + 1) + x;
        case SolidAxis::Z:
            return base + (l >= 1 && l < s.dz ? hc : 0) + y * (s.dx + 1) + x;
    }
    return SIZE_MAX;
}

CssCode build_solid(const SolidSpec &s) {
    SolidLayout L = solid_layout(s);
    size_t n = L.gens.n;
    std::vector<size_t> membrane, column, bottom, top;
    std::vector<std::vector<size_t>> vertex_qubits((s.dx + 1) * (s.dy + 1));
    for (size_t y = 0; y <= s.dy; y++) {
        for (size_t x = 0; x <= s.dx; x++) {
            bottom.push_back(solid_qubit(s, SolidAxis::Z, x, y, 0));
            top.push_back(solid_qubit(s, SolidAxis::Z, x, y, s.dz - 1));
            for (size_t l = 0; l < s.dz; l++) {
                vertex_qubits[cross_vertex(s, x, y)].push_back(solid_qubit(s, SolidAxis::Z, x, y, l));
            }
        }
    }
    membrane = bottom;
    column = vertex_qubits[0];

    auto meta = std::make_shared<RegionMetadata>();
    auto &xr = meta->x_particles;
    xr.particle_type = PauliKind::X;
    xr.regions.push_back({"solid", QubitSet(range(0, n)), range(0, L.num_stars)});
    xr.incidence.emplace_back();
    if (s.dz >= 2) {
        xr.boundaries.push_back({"bottom", QubitSet(bottom)});
        xr.boundaries.push_back({"top", QubitSet(top)});
        xr.incidence[0] = {0, 1};
    }
    meta->z_particles = cross_section_regions(s, L.gens, L.z_edge, vertex_qubits);

    LogicalClass lc{op(n, PauliKind::Z, column), op(n, PauliKind::X, membrane)};
    return CssCode(std::move(L.gens), {lc}, std::move(meta));
}

CssCode build_solid_by_welding(const SolidSpec &s) {
    check_solid(s);
    SurfaceSpec strip{1, s.dz};
    CssCode base = build_surface(strip, StringLogicals::kFoldX);
    auto make_strip = [&](SolidAxis axis, size_t x, size_t y) {
        size_t x2 = axis == SolidAxis::X ? x + 1 : x;
        size_t y2 = axis == SolidAxis::Y ? y + 1 : y;
        Keyed k{base, std::vector<Key>(base.n())};
        for (size_t r = 0; r < s.dz; r++) {
            k.keys[surface_vertical(strip, r, 0)] = {2, (long long)x, (long long)y, (long long)r};
            k.keys[surface_vertical(strip, r, 1)] = {2, (long long)x2, (long long)y2, (long long)r};
            if (r >= 1) {
                k.keys[surface_horizontal(strip, r, 0)] = {(long long)axis, (long long)x, (long long)y, (long long)r};
            }
        }
        return k;
    };
    std::vector<Keyed> strips;
    for (size_t y = 0; y <= s.dy; y++) {
        for (size_t x = 0; x <= s.dx; x++) {
            if (x < s.dx) strips.push_back(make_strip(SolidAxis::X, x, y));
            if (y < s.dy) strips.push_back(make_strip(SolidAxis::Y, x, y));
        }
    }
    Keyed cur = strips[0];
    for (size_t i = 1; i < strips.size(); i++) {
        cur = keyed_weld(cur, strips[i], WeldType::X);
    }
    return relabel_keyed(cur, [&](const Key &k) {
               return solid_qubit(s, static_cast<SolidAxis>(k[0]), (size_t)k[1], (size_t)k[2], (size_t)k[3]);
           })
        .code;
}

namespace {

/// One piece of a welded assembly. Boundary qubits carry keys {1, vertex, a, b}.
struct Piece {
    CssCode code;  // k=0, folded string is the last generator of the regenerated kind
    std::vector<Key> keys;
};

struct Assembly {
    CssCode code;  // k=0, natural generators
    std::map<Key, size_t> index;
    std::vector<std::vector<size_t>> piece_map;  // local qubit -> global qubit
    std::vector<size_t> keep_offset;             // per piece, into the kept-kind generators
    /// For every natural regenerated generator: its (piece, local generator) sources.
    std::vector<std::vector<std::pair<size_t, size_t>>> sources;
    size_t string_index = 0;
};

Assembly assemble(const WeldGraph &graph, const std::vector<Piece> &pieces, WeldType type) {
    PauliKind k = regenerated_kind(type);
    PauliKind keep = opposite(k);
    Keyed cur{pieces[0].code, pieces[0].keys};
    for (size_t p = 1; p < pieces.size(); p++) {
        cur = keyed_weld(cur, {pieces[p].code, pieces[p].keys}, type);
    }
    Assembly A;
    size_t N = cur.code.n();
    for (size_t i = 0; i < N; i++) {
        A.index[cur.keys[i]] = i;
    }
    auto deg = graph.degrees();
    auto welded_vertex = [&](const Key &key) -> long long {
        if (key[0] == 1 && deg[static_cast<size_t>(key[1])] >= 2) {
            return key[1];
        }
        return -1;
    };

    GeneratingSet natural;
    natural.n = N;
    std::vector<PauliOperator> merged;
    std::vector<std::vector<std::pair<size_t, size_t>>> merged_sources;
    std::map<std::pair<long long, std::vector<Key>>, size_t> merged_slot;
    BitVector string_bits(N);
    size_t offset = 0;
    for (size_t p = 0; p < pieces.size(); p++) {
        const Piece &pc = pieces[p];
        std::vector<size_t> map(pc.code.n());
        for (size_t q = 0; q < map.size(); q++) {
            map[q] = A.index.at(pc.keys[q]);
        }
        A.piece_map.push_back(map);
        A.keep_offset.push_back(offset);
        for (const auto &g : pc.code.gens(keep)) {
            natural.of(keep).push_back(embed_operator(g, map, N));
        }
        offset += pc.code.gens(keep).size();
        const auto &regen = pc.code.gens(k);
        for (size_t i = 0; i < regen.size(); i++) {
            PauliOperator ge = embed_operator(regen[i], map, N);
            if (i + 1 == regen.size()) {
                string_bits |= ge.bits(k);
                continue;
            }
            long long v = -1;
            std::vector<Key> shared;
            for (size_t q : regen[i].bits(k).ones()) {
                long long w = welded_vertex(pc.keys[q]);
                if (w >= 0) {
                    if (v >= 0 && v != w) {
                        throw std::logic_error("assembly: generator touches two welded boundaries");
                    }
                    v = w;
                    shared.push_back(pc.keys[q]);
                }
            }
            if (v < 0) {
                natural.of(k).push_back(ge);
                A.sources.push_back({{p, i}});
                continue;
            }
            auto slot = merged_slot.try_emplace({v, shared}, merged.size());
            if (slot.second) {
                merged.push_back(ge);
                merged_sources.push_back({{p, i}});
            } else {
                merged[slot.first->second] = PauliOperator::from_bits(
                    k, merged[slot.first->second].bits(k) | ge.bits(k));
                merged_sources[slot.first->second].push_back({p, i});
            }
        }
    }
    for (size_t i = 0; i < merged.size(); i++) {
        natural.of(k).push_back(merged[i]);
        A.sources.push_back(merged_sources[i]);
    }
    RowBasis span(N);
    for (const auto &g : natural.of(k)) {
        span.insert(g.bits(k));
    }
    A.string_index = natural.of(k).size();
    natural.of(k).push_back(PauliOperator::from_bits(k, string_bits));
    span.insert(string_bits);
    // Anything the weld generated beyond the natural set, e.g. horizontal
    // plaquettes forced in by weld-independence on a rough solid boundary.
    for (const auto &g : cur.code.gens(k)) {
        if (span.insert(g.bits(k)).independent) {
            natural.of(k).push_back(g);
        }
    }
    A.code = rebase_generators(cur.code, std::move(natural));
    return A;
}

std::vector<size_t> global_qubits(const Assembly &A, size_t p) {
    return A.piece_map[p];
}

/// Regions are the pieces, boundaries the graph vertices in use.
FlatRegionGraph piece_regions(const WeldGraph &graph, const Assembly &A, PauliKind particle,
                              const std::vector<size_t> &gens_per_piece) {
    FlatRegionGraph g;
    g.particle_type = particle;
    std::vector<std::vector<size_t>> vq(graph.num_vertices());
    for (const auto &[key, q] : A.index) {
        if (key[0] == 1) {
            vq[static_cast<size_t>(key[1])].push_back(q);
        }
    }
    std::vector<size_t> bindex(graph.num_vertices(), SIZE_MAX);
    for (size_t v = 0; v < graph.num_vertices(); v++) {
        if (!vq[v].empty()) {
            bindex[v] = g.boundaries.size();
            g.boundaries.push_back({graph.labels[v], QubitSet(vq[v])});
        }
    }
    for (size_t e = 0; e < graph.edges.size(); e++) {
        auto [i, j] = graph.edges[e];
        g.regions.push_back({graph.labels[i] + "-" + graph.labels[j], QubitSet(global_qubits(A, e)),
                             range(A.keep_offset[e], A.keep_offset[e] + gens_per_piece[e])});
        std::vector<size_t> inc{bindex[i], bindex[j]};
        std::sort(inc.begin(), inc.end());
        g.incidence.push_back(inc);
    }
    return g;
}

}  // namespace

CssCode build_welded_surface(const WeldGraph &graph, BoundaryType boundary, const SurfaceSpec &s) {
    check_surface(s);
    graph.validate();
    if (graph.edges.empty()) {
        throw ValidationError("welded surface needs at least one edge");
    }
    bool rough = boundary == BoundaryType::Rough;
    if (rough && s.height < 2) {
        throw ValidationError("rough welds need height >= 2 so the two rough edges are disjoint");
    }
    CssCode base = build_surface(s, rough ? StringLogicals::kFoldZ : StringLogicals::kFoldX);
    std::vector<Piece> pieces;
    for (size_t e = 0; e < graph.edges.size(); e++) {
        auto [i, j] = graph.edges[e];
        Piece p{base, std::vector<Key>(base.n())};
        for (size_t q = 0; q < base.n(); q++) {
            p.keys[q] = {0, (long long)e, (long long)q, 0};
        }
        if (rough) {
            for (size_t c = 0; c <= s.width; c++) {
                p.keys[surface_vertical(s, 0, c)] = {1, (long long)i, (long long)c, 0};
                p.keys[surface_vertical(s, s.height - 1, c)] = {1, (long long)j, (long long)c, 0};
            }
        } else {
            for (size_t r = 0; r < s.height; r++) {
                p.keys[surface_vertical(s, r, 0)] = {1, (long long)i, (long long)r, 0};
                p.keys[surface_vertical(s, r, s.width)] = {1, (long long)j, (long long)r, 0};
            }
        }
        pieces.push_back(std::move(p));
    }
    WeldType type = rough ? WeldType::Z : WeldType::X;
    PauliKind k = regenerated_kind(type);
    Assembly A = assemble(graph, pieces, type);

    auto meta = std::make_shared<RegionMetadata>();
    std::vector<size_t> keep_counts(pieces.size(), base.gens(opposite(k)).size());
    FlatRegionGraph across = piece_regions(graph, A, opposite(k), keep_counts);
    FlatRegionGraph along;
    along.particle_type = k;
    along.regions.push_back({"all", QubitSet(range(0, A.code.n())), range(0, A.string_index)});
    along.incidence.emplace_back();
    std::vector<bool> assigned(A.code.n(), false);
    for (size_t e = 0; e < pieces.size(); e++) {
        for (int side = 0; side < 2; side++) {
            std::vector<size_t> qs;
            size_t len = rough ? s.height : s.width + 1;
            for (size_t t = 0; t < len; t++) {
                size_t local = rough ? surface_vertical(s, t, side ? s.width : 0)
                                     : surface_vertical(s, side ? s.height - 1 : 0, t);
                size_t gq = A.piece_map[e][local];
                if (!assigned[gq]) {
                    assigned[gq] = true;
                    qs.push_back(gq);
                }
            }
            if (!qs.empty()) {
                const char *name = rough ? (side ? "right" : "left") : (side ? "bottom" : "top");
                along.incidence[0].push_back(along.boundaries.size());
                along.boundaries.push_back({std::to_string(e) + ":" + name, QubitSet(qs)});
            }
        }
    }
    if (rough) {
        meta->x_particles = std::move(across);
        meta->z_particles = std::move(along);
    } else {
        meta->z_particles = std::move(across);
        meta->x_particles = std::move(along);
    }
    CssCode promoted = promote_to_logical(A.code, {k, A.string_index});
    return promoted.with_regions(std::move(meta));
}

size_t welded_solid_num_qubits(const WeldGraph &graph, const SolidSpec &s) {
    check_solid(s);
    if (s.dz < 2) {
        throw ValidationError("welded solids need dz >= 2 so the two rough boundaries are disjoint");
    }
    size_t total = graph.edges.size() * solid_num_qubits(s);
    size_t face = (s.dx + 1) * (s.dy + 1);
    for (size_t d : graph.degrees()) {
        if (d >= 2) {
            total -= (d - 1) * face;
        }
    }
    return total;
}

CssCode build_welded_solid(const WeldGraph &graph, const SolidSpec &s) {
    check_solid(s);
    graph.validate();
    if (graph.edges.empty()) {
        throw ValidationError("welded solid needs at least one edge");
    }
    if (s.horizontal_plaquettes) {
        throw ValidationError("welded solids are built from solids without horizontal plaquettes");
    }
    if (s.dz < 2) {
        throw ValidationError("welded solids need dz >= 2 so the two rough boundaries are disjoint");
    }
    SolidLayout L = solid_layout(s);
    CssCode base = fold_logical(build_solid(s), 0, PauliKind::Z);
    std::vector<Piece> pieces;
    for (size_t e = 0; e < graph.edges.size(); e++) {
        auto [i, j] = graph.edges[e];
        Piece p{base, std::vector<Key>(base.n())};
        for (size_t q = 0; q < base.n(); q++) {
            p.keys[q] = {0, (long long)e, (long long)q, 0};
        }
        for (size_t y = 0; y <= s.dy; y++) {
            for (size_t x = 0; x <= s.dx; x++) {
                p.keys[solid_qubit(s, SolidAxis::Z, x, y, 0)] = {1, (long long)i, (long long)x, (long long)y};
                p.keys[solid_qubit(s, SolidAxis::Z, x, y, s.dz - 1)] = {1, (long long)j, (long long)x, (long long)y};
            }
        }
        pieces.push_back(std::move(p));
    }
    Assembly A = assemble(graph, pieces, WeldType::Z);
    size_t N = A.code.n();

    auto meta = std::make_shared<RegionMetadata>();
    meta->x_particles =
        piece_regions(graph, A, PauliKind::X, std::vector<size_t>(pieces.size(), L.num_stars));
    std::vector<size_t> gen_edge;
    for (size_t g = 0; g < A.string_index; g++) {
        gen_edge.push_back(L.z_edge[A.sources[g][0].second]);
    }
    std::vector<std::vector<size_t>> vertex_qubits((s.dx + 1) * (s.dy + 1));
    for (size_t e = 0; e < pieces.size(); e++) {
        for (size_t y = 0; y <= s.dy; y++) {
            for (size_t x = 0; x <= s.dx; x++) {
                for (size_t l = 0; l < s.dz; l++) {
                    vertex_qubits[cross_vertex(s, x, y)].push_back(A.piece_map[e][solid_qubit(s, SolidAxis::Z, x, y, l)]);
                }
            }
        }
    }
    for (auto &v : vertex_qubits) {
        v = QubitSet(v).indices();
    }
    GeneratingSet natural_only = A.code.gens();
    meta->z_particles = cross_section_regions(s, natural_only, gen_edge, vertex_qubits);

    std::vector<size_t> membrane;
    for (size_t y = 0; y <= s.dy; y++) {
        for (size_t x = 0; x <= s.dx; x++) {
            membrane.push_back(A.piece_map[0][solid_qubit(s, SolidAxis::Z, x, y, 0)]);
        }
    }
    PauliOperator xbar = op(N, PauliKind::X, membrane);
    CssCode promoted = promote_to_logical(A.code, {PauliKind::Z, A.string_index}, xbar);
    return promoted.with_regions(std::move(meta));
}

const FlatRegionGraph &flat_region_graph(const CssCode &code, PauliKind particle_type) {
    if (!code.regions()) {
        throw ValidationError("code has no flat-region metadata (only builder-made codes do)");
    }
    return code.regions()->for_particle(particle_type);
}

FlatRegionGraph region_graph_from_weld_graph(const WeldGraph &graph, PauliKind particle_type) {
    graph.validate();
    FlatRegionGraph g;
    g.particle_type = particle_type;
    std::vector<size_t> bindex(graph.num_vertices(), SIZE_MAX);
    std::vector<bool> used(graph.num_vertices(), false);
    for (auto [a, b] : graph.edges) {
        used[a] = used[b] = true;
    }
    for (size_t v = 0; v < graph.num_vertices(); v++) {
        if (used[v]) {
            bindex[v] = g.boundaries.size();
            g.boundaries.push_back({graph.labels[v], QubitSet{v}});
        }
    }
    for (size_t e = 0; e < graph.edges.size(); e++) {
        auto [a, b] = graph.edges[e];
        g.regions.push_back({graph.labels[a] + "-" + graph.labels[b], QubitSet{a, b}, {e}});
        std::vector<size_t> inc{bindex[a], bindex[b]};
        std::sort(inc.begin(), inc.end());
        g.incidence.push_back(inc);
    }
    return g;
}

}  // namespace weldcode
