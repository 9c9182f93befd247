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


#ifndef WELDCODE_GRAPH_H
#define WELDCODE_GRAPH_H

#include <string>
#include <utility>
#include <vector>

namespace weldcode {

/// Graph whose edges are code pieces and whose vertices are the boundaries
/// they are welded on. Edge (i, j) puts a piece's first boundary at i and its
/// second at j.
struct WeldGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<size_t, size_t>> edges;
    /// "path", "star", "grid", "cubic" or "file".
    std::string geometry = "file";

    size_t num_vertices() const { return labels.size(); }
    std::vector<size_t> degrees() const;
    void validate() const;

    /// n edges in a line (n + 1 vertices).
    static WeldGraph path(size_t n);
    /// n edges from a center vertex 0 to leaves 1..n.
    static WeldGraph star(size_t n);
    /// a x b vertices, nearest-neighbour edges.
    static WeldGraph grid(size_t a, size_t b);
    /// a x b x c vertices, nearest-neighbour edges.
    static WeldGraph cubic(size_t a, size_t b, size_t c);

    /// "v <label>" then "e <label> <label>" lines; '#' comments.
    static WeldGraph parse(const std::string &text);
    std::string str() const;
    /// "path:n", "star:n", "grid:a,b", "cubic:a,b,c", or a file path.
    static WeldGraph from_spec(const std::string &spec);
};

}  // namespace weldcode

#endif
