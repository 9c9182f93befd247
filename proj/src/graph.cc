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


#include "weldcode/graph.h"

#include <fstream>
#include <map>
#include <sstream>

#include "weldcode/errors.h"

namespace weldcode {

namespace {

std::vector<size_t> parse_dims(const std::string &s, size_t count) {
    std::vector<size_t> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 1) {
                throw ValidationError("");
            }
            out.push_back(static_cast<size_t>(v));
        } catch (const std::exception &) {
            throw ValidationError("bad graph dimension '" + item + "'");
        }
    }
    if (out.size() != count) {
        throw ValidationError("graph spec expects " + std::to_string(count) + " dimensions");
    }
    return out;
}

}  // namespace

std::vector<size_t> WeldGraph::degrees() const {
    std::vector<size_t> d(labels.size(), 0);
    for (auto [a, b] : edges) {
        d[a]++;
        d[b]++;
    }
    return d;
}

void WeldGraph::validate() const {
    for (auto [a, b] : edges) {
        if (a >= labels.size() || b >= labels.size()) {
            throw ValidationError("graph edge references a missing vertex");
        }
        if (a == b) {
            throw ValidationError("graph edge is a self-loop at '" + labels[a] + "'");
        }
    }
}

WeldGraph WeldGraph::path(size_t n) {
    WeldGraph g;
    g.geometry = "path";
    for (size_t i = 0; i <= n; i++) {
        g.labels.push_back(std::to_string(i));
    }
    for (size_t i = 0; i < n; i++) {
        g.edges.emplace_back(i, i + 1);
    }
    return g;
}

WeldGraph WeldGraph::star(size_t n) {
    WeldGraph g;
    g.geometry = "star";
    for (size_t i = 0; i <= n; i++) {
        g.labels.push_back(std::to_string(i));
    }
    for (size_t i = 1; i <= n; i++) {
        g.edges.emplace_back(0, i);
    }
    return g;
}

WeldGraph WeldGraph::grid(size_t a, size_t b) {
    WeldGraph g = cubic(a, b, 1);
    g.geometry = "grid";
    return g;
}

WeldGraph WeldGraph::cubic(size_t a, size_t b, size_t c) {
    WeldGraph g;
    g.geometry = "cubic";
    auto id = [&](size_t x, size_t y, size_t z) { return (z * b + y) * a + x; };
    for (size_t z = 0; z < c; z++) {
        for (size_t y = 0; y < b; y++) {
            for (size_t x = 0; x < a; x++) {
                g.labels.push_back(std::to_string(x) + "," + std::to_string(y) + (c > 1 ? "," + std::to_string(z) : ""));
            }
        }
    }
    for (size_t z = 0; z < c; z++) {
        for (size_t y = 0; y < b; y++) {
            for (size_t x = 0; x < a; x++) {
                if (x + 1 < a) {
                    g.edges.emplace_back(id(x, y, z), id(x + 1, y, z));
                }
                if (y + 1 < b) {
                    g.edges.emplace_back(id(x, y, z), id(x, y + 1, z));
                }
                if (z + 1 < c) {
                    g.edges.emplace_back(id(x, y, z), id(x, y, z + 1));
                }
            }
        }
    }
    return g;
}

WeldGraph WeldGraph::parse(const std::string &text) {
    WeldGraph g;
    std::map<std::string, size_t> index;
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) {
            continue;
        }
        std::string where = "graph line " + std::to_string(line_no) + ": ";
        if (tag == "v") {
            std::string label;
            if (!(fields >> label)) {
                throw ValidationError(where + "missing vertex label");
            }
            if (!index.emplace(label, g.labels.size()).second) {
                throw ValidationError(where + "duplicate vertex '" + label + "'");
            }
            g.labels.push_back(label);
        } else if (tag == "e") {
            std::string a, b;
            if (!(fields >> a >> b)) {
                throw ValidationError(where + "edge needs two labels");
            }
            auto ia = index.find(a), ib = index.find(b);
            if (ia == index.end() || ib == index.end()) {
                throw ValidationError(where + "edge references an undeclared vertex");
            }
            g.edges.emplace_back(ia->second, ib->second);
        } else {
            throw ValidationError(where + "unknown record '" + tag + "'");
        }
    }
    g.validate();
    return g;
}

std::string WeldGraph::str() const {
    std::ostringstream out;
    for (const auto &l : labels) {
        out << "v " << l << "\n";
    }
    for (auto [a, b] : edges) {
        out << "e " << labels[a] << " " << labels[b] << "\n";
    }
    return out.str();
}

WeldGraph WeldGraph::from_spec(const std::string &spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (kind == "path") {
            return path(parse_dims(rest, 1)[0]);
        }
        if (kind == "star") {
            return star(parse_dims(rest, 1)[0]);
        }
        if (kind == "grid") {
            auto d = parse_dims(rest, 2);
            return grid(d[0], d[1]);
        }
        if (kind == "cubic") {
            auto d = parse_dims(rest, 3);
            return cubic(d[0], d[1], d[2]);
        }
    }
    std::ifstream f(spec);
    if (!f) {
        throw ValidationError("cannot read graph '" + spec + "'");
    }
    std::stringstream buf;
    buf << f.rdbuf();
    return parse(buf.str());
}

}  // namespace weldcode
