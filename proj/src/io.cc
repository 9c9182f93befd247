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


#include "weldcode/io.h"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "weldcode/errors.h"

namespace weldcode {

using nlohmann::json;

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

CssCode assemble(size_t n, std::optional<size_t> k, GeneratingSet gens, const std::vector<PauliOperator> &lx,
                 const std::vector<PauliOperator> &lz, std::shared_ptr<const RegionMetadata> regions = nullptr) {
    if (lx.size() != lz.size()) {
        throw ValidationError("logical X and Z lists differ in length");
    }
    std::vector<LogicalClass> logicals;
    for (size_t i = 0; i < lx.size(); i++) {
        logicals.push_back({lz[i], lx[i]});
    }
    gens.n = n;
    CssCode code(std::move(gens), std::move(logicals), std::move(regions));
    if (k && *k != encoded_qubits(code)) {
        throw ValidationError("header says k=" + std::to_string(*k) + " but the generators give k=" +
                              std::to_string(encoded_qubits(code)));
    }
    return code;
}

PauliOperator parse_op(const std::string &s, size_t n, PauliKind kind, const std::string &where) {
    PauliOperator p = PauliOperator::parse(s);
    if (p.n() != n) {
        throw ValidationError(where + ": operator has " + std::to_string(p.n()) + " qubits, expected " +
                              std::to_string(n));
    }
    if (!p.is_pure(kind)) {
        throw ValidationError(where + ": expected a pure " + std::string(1, kind_char(kind)) + " operator");
    }
    return p;
}

json region_graph_to_json(const FlatRegionGraph &g) {
    json out;
    out["particle_type"] = std::string(1, kind_char(g.particle_type));
    out["regions"] = json::array();
    for (const auto &r : g.regions) {
        out["regions"].push_back({{"label", r.label}, {"qubits", r.qubits.indices()}, {"generators", r.generators}});
    }
    out["boundaries"] = json::array();
    for (const auto &b : g.boundaries) {
        out["boundaries"].push_back({{"label", b.label}, {"qubits", b.qubits.indices()}});
    }
    out["incidence"] = g.incidence;
    return out;
}

FlatRegionGraph region_graph_from_json(const json &j) {
    FlatRegionGraph g;
    g.particle_type = parse_kind(j.at("particle_type").get<std::string>());
    for (const auto &r : j.at("regions")) {
        g.regions.push_back({r.at("label").get<std::string>(), QubitSet(r.at("qubits").get<std::vector<size_t>>()),
                             r.at("generators").get<std::vector<size_t>>()});
    }
    for (const auto &b : j.at("boundaries")) {
        g.boundaries.push_back({b.at("label").get<std::string>(), QubitSet(b.at("qubits").get<std::vector<size_t>>())});
    }
    g.incidence = j.at("incidence").get<std::vector<std::vector<size_t>>>();
    g.validate();
    return g;
}

}  // namespace

std::string code_to_text(const CssCode &code) {
    std::ostringstream out;
    out << "n=" << code.n() << " k=" << encoded_qubits(code) << "\n";
    for (const auto &g : code.gens(PauliKind::X)) {
        out << "X: " << g.str() << "\n";
    }
    for (const auto &g : code.gens(PauliKind::Z)) {
        out << "Z: " << g.str() << "\n";
    }
    for (const auto &l : code.logicals()) {
        out << "LX: " << l.x_rep.str() << "\n";
    }
    for (const auto &l : code.logicals()) {
        out << "LZ: " << l.z_rep.str() << "\n";
    }
    return out.str();
}

CssCode code_from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::optional<size_t> n, k;
    GeneratingSet gens;
    std::vector<PauliOperator> lx, lz;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::string where = "line " + std::to_string(lineno);
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (!n) {
            std::istringstream hdr(line);
            std::string tok;
            while (hdr >> tok) {
                try {
                    if (tok.rfind("n=", 0) == 0) {
                        n = std::stoul(tok.substr(2));
                    } else if (tok.rfind("k=", 0) == 0) {
                        k = std::stoul(tok.substr(2));
                    } else {
                        throw ValidationError(where + ": unexpected header token '" + tok + "'");
                    }
                } catch (const std::logic_error &) {
                    throw ValidationError(where + ": bad header token '" + tok + "'");
                }
            }
            if (!n) {
                throw ValidationError(where + ": header must start with n=<qubits>");
            }
            continue;
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw ValidationError(where + ": expected 'X:', 'Z:', 'LX:' or 'LZ:'");
        }
        std::string tag = trim(line.substr(0, colon));
        std::string body = trim(line.substr(colon + 1));
        if (tag == "X") {
            gens.x_gens.push_back(parse_op(body, *n, PauliKind::X, where));
        } else if (tag == "Z") {
            gens.z_gens.push_back(parse_op(body, *n, PauliKind::Z, where));
        } else if (tag == "LX") {
            lx.push_back(parse_op(body, *n, PauliKind::X, where));
        } else if (tag == "LZ") {
            lz.push_back(parse_op(body, *n, PauliKind::Z, where));
        } else {
            throw ValidationError(where + ": unknown tag '" + tag + "'");
        }
    }
    if (!n) {
        throw ValidationError("empty code file");
    }
    return assemble(*n, k, std::move(gens), lx, lz);
}

std::string code_to_json(const CssCode &code) {
    json out;
    out["n"] = code.n();
    out["k"] = encoded_qubits(code);
    auto list = [](const std::vector<PauliOperator> &ops) {
        json arr = json::array();
        for (const auto &p : ops) {
            arr.push_back(p.str());
        }
        return arr;
    };
    out["x_gens"] = list(code.gens(PauliKind::X));
    out["z_gens"] = list(code.gens(PauliKind::Z));
    out["logical_x"] = json::array();
    out["logical_z"] = json::array();
    for (const auto &l : code.logicals()) {
        out["logical_x"].push_back(l.x_rep.str());
        out["logical_z"].push_back(l.z_rep.str());
    }
    if (code.regions()) {
        out["flat_regions"] = {{"x_particles", region_graph_to_json(code.regions()->x_particles)},
                               {"z_particles", region_graph_to_json(code.regions()->z_particles)}};
    }
    return out.dump(2) + "\n";
}

CssCode code_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("bad JSON: ") + e.what());
    }
    try {
        size_t n = j.at("n").get<size_t>();
        std::optional<size_t> k;
        if (j.contains("k")) {
            k = j.at("k").get<size_t>();
        }
        auto list = [&](const char *key, PauliKind kind) {
            std::vector<PauliOperator> out;
            if (!j.contains(key)) {
                return out;
            }
            for (const auto &s : j.at(key)) {
                out.push_back(parse_op(s.get<std::string>(), n, kind, key));
            }
            return out;
        };
        GeneratingSet gens;
        gens.x_gens = list("x_gens", PauliKind::X);
        gens.z_gens = list("z_gens", PauliKind::Z);
        std::shared_ptr<const RegionMetadata> regions;
        if (j.contains("flat_regions")) {
            auto meta = std::make_shared<RegionMetadata>();
            meta->x_particles = region_graph_from_json(j["flat_regions"].at("x_particles"));
            meta->z_particles = region_graph_from_json(j["flat_regions"].at("z_particles"));
            regions = meta;
        }
        return assemble(n, k, std::move(gens), list("logical_x", PauliKind::X), list("logical_z", PauliKind::Z),
                        regions);
    } catch (const json::exception &e) {
        throw ValidationError(std::string("bad code JSON: ") + e.what());
    }
}

CssCode parse_code(const std::string &text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return code_from_json(text);
    }
    return code_from_text(text);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents)) {
        throw ValidationError("cannot write " + path);
    }
}

CssCode read_code_file(const std::string &path) { return parse_code(read_file(path)); }

std::string barrier_to_json(const BarrierResult &r) {
    json out;
    out["method"] = method_name(r.method);
    out["barrier"] = r.barrier;
    out["witness"] = json::array();
    for (auto [q, k] : r.witness.steps) {
        out["witness"].push_back({q, std::string(1, kind_char(k))});
    }
    out["states_explored"] = r.states_explored;
    return out.dump();
}

}  // namespace weldcode
