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


#include "weldcode/cli.h"

#include <chrono>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weldcode/builders.h"
#include "weldcode/energy.h"
#include "weldcode/errors.h"
#include "weldcode/graph.h"
#include "weldcode/io.h"
#include "weldcode/random_codes.h"
#include "weldcode/welding.h"

namespace weldcode {

using nlohmann::json;

std::string default_golden_dir() { return WELDCODE_GOLDEN_DIR; }

namespace {

CssCode golden(const std::string &dir, const std::string &name) {
    return read_code_file((std::filesystem::path(dir) / name).string());
}

bool same_gens(const CssCode &a, const CssCode &b) { return a.n() == b.n() && groups_equal(a.gens(), b.gens()); }

std::string fmt_d(const DistanceResult &d) {
    return "d_X=" + std::to_string(d.d_x) + " d_Z=" + std::to_string(d.d_z);
}

}  // namespace

std::vector<VerifyCase> verify_reference_examples(const std::string &dir) {
    std::vector<VerifyCase> cases;
    auto check = [&](const std::string &name, const std::function<std::string()> &body) {
        // body returns an empty string on success, else what went wrong.
        try {
            std::string msg = body();
            cases.push_back({name, msg.empty(), msg});
        } catch (const std::exception &e) {
            cases.push_back({name, false, e.what()});
        }
    };
    CssCode two = build_two_qubit();
    check("two_qubit", [&]() -> std::string {
        return two.gens() == golden(dir, "two_qubit.code").gens() ? "" : "generators differ from golden";
    });
    check("rep_zweld", [&]() -> std::string {
        auto ident = QubitIdentification::parse(read_file((std::filesystem::path(dir) / "rep_ident.txt").string()));
        CssCode w = weld(two, two, ident, WeldType::Z).code;
        return same_gens(w, golden(dir, "rep_zweld.code")) ? "" : "weld output: " + code_to_text(w);
    });
    check("rep_xweld", [&]() -> std::string {
        auto ident = QubitIdentification::parse(read_file((std::filesystem::path(dir) / "rep_ident.txt").string()));
        CssCode w = weld(two, two, ident, WeldType::X).code;
        return same_gens(w, golden(dir, "rep_xweld.code")) ? "" : "weld output: " + code_to_text(w);
    });

    std::vector<ChainStage> chain;
    check("surface_chain_builds", [&]() -> std::string {
        chain = surface_chain();
        return "";
    });
    auto stage = [&](const std::string &name) -> const CssCode & {
        for (const auto &s : chain) {
            if (s.name == name) {
                return s.code;
            }
        }
        throw std::runtime_error("missing chain stage " + name);
    };
    check("surface_5", [&]() -> std::string {
        CssCode g = fold_logical(golden(dir, "surface_1x2.code"), 0, PauliKind::X);
        return same_gens(stage("five"), g) ? "" : "5-qubit stage differs from golden";
    });
    check("surface_7", [&]() -> std::string {
        const CssCode &c = stage("seven");
        if (c.n() != 7 || encoded_qubits(c) != 1) {
            return "expected n=7 k=1";
        }
        return "";
    });
    check("surface_8", [&]() -> std::string {
        return same_gens(stage("eight"), golden(dir, "surface_2x2.code")) ? "" : "8-qubit stage differs from golden";
    });
    check("surface_13", [&]() -> std::string {
        const CssCode &c = stage("thirteen");
        if (!same_gens(c, golden(dir, "surface_2x3.code"))) {
            return "13-qubit stage differs from golden";
        }
        DistanceResult d = distance(c);
        return encoded_qubits(c) == 1 && d.d() >= 3 ? "" : "expected k=1, d>=3, got " + fmt_d(d);
    });

    check("welded_surface_barrier", [&]() -> std::string {
        CssCode c = build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, {2, 2});
        BoundReport r = verify_bound(c, 0, PauliKind::Z);
        if (r.exact != 2 || r.bound != 2) {
            return "exact " + std::to_string(r.exact) + " bound " + std::to_string(r.bound);
        }
        return walk_barrier(c, *r.witness).barrier == 2 ? "" : "witness does not replay to 2";
    });
    check("welded_solid_barrier", [&]() -> std::string {
        CssCode c = build_welded_solid(WeldGraph::star(3), {1, 1, 2, false});
        size_t b = exact_barrier(c, 0, PauliKind::Z).barrier;
        return b == 2 ? "" : "exact Z barrier " + std::to_string(b);
    });
    check("solid_string_constant", [&]() -> std::string {
        size_t a = exact_barrier(build_solid({1, 1, 2, false}), 0, PauliKind::Z).barrier;
        size_t b = exact_barrier(build_solid({2, 2, 2, false}), 0, PauliKind::Z).barrier;
        return a == b ? "" : "Z barriers " + std::to_string(a) + " vs " + std::to_string(b);
    });
    check("rough_welds_keep_membrane_barrier", [&]() -> std::string {
        CssCode base = build_solid({1, 1, 2, false});
        for (const WeldGraph &g : {WeldGraph::path(2), WeldGraph::star(3)}) {
            WeldInvarianceReport r = barrier_unchanged_by_rough_welds(base, build_welded_solid(g, {1, 1, 2, false}));
            if (!r.equal) {
                return "membrane barrier changed on " + g.str();
            }
        }
        return "";
    });
    check("scaling_alpha_2", [&]() -> std::string {
        ScalingPlan p = tune_scaling({ScalingBudget::Kind::kSide, 64});
        bool ok = p.alpha == Fraction(2) && p.barrier_exponent_N == Fraction(2, 9) &&
                  p.barrier_exponent_L == Fraction(2, 3) && p.distance_exponent_L == Fraction(4, 3);
        return ok ? "" : "alpha " + p.alpha.str() + " exponents " + p.barrier_exponent_N.str() + ", " +
                             p.barrier_exponent_L.str() + ", " + p.distance_exponent_L.str();
    });
    return cases;
}

namespace {

struct Options {
    bool json_errors = false;
    uint64_t max_states = kDefaultMaxStates;
    std::string out;
    std::string format = "text";
    std::string graph;
};

std::pair<size_t, size_t> parse_range(const std::string &s) {
    size_t colon = s.find(':');
    try {
        if (colon == std::string::npos) {
            size_t v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, colon)), std::stoul(s.substr(colon + 1))};
    } catch (const std::logic_error &) {
        throw ValidationError("bad range '" + s + "', expected a or a:b");
    }
}

void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
    } else {
        write_file(o.out, text);
    }
}

std::string render(const Options &o, const CssCode &code) {
    if (o.format == "json") {
        return code_to_json(code);
    }
    if (o.format == "text") {
        return code_to_text(code);
    }
    throw ValidationError("format must be text or json");
}

std::string walk_json(const PauliWalk &w) {
    json arr = json::array();
    for (auto [q, k] : w.steps) {
        arr.push_back({q, std::string(1, kind_char(k))});
    }
    return arr.dump();
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build, weld and analyze CSS codes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_errors, "Report errors as JSON on stdout");
    app.add_option("--max-states", o.max_states, "Cap on barrier search states");

    auto add_out = [&](CLI::App *c) {
        c->add_option("--out", o.out, "Write to this file instead of stdout");
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    std::string family, strings = "promote", boundary = "rough";
    size_t width = 2, height = 2, rep_n = 3, dx = 1, dy = 1, dz = 2;
    bool folded = false, horizontal = false, by_welding = false;
    auto *build = app.add_subcommand("build", "Build a code family");
    build->add_option("family", family, "two-qubit | repetition | surface | solid | welded-surface | welded-solid")
        ->required();
    build->add_option("--width", width);
    build->add_option("--height", height);
    build->add_option("--n", rep_n, "Repetition length");
    build->add_flag("--folded", folded, "Repetition: make Z^n a generator");
    build->add_option("--dx", dx);
    build->add_option("--dy", dy);
    build->add_option("--dz", dz);
    build->add_flag("--horizontal-plaquettes", horizontal);
    build->add_option("--boundary", boundary, "rough | smooth");
    build->add_option("--strings", strings, "none | fold-x | fold-z | promote");
    build->add_flag("--by-welding", by_welding, "Surface/solid: assemble by welding (k=0 output)");
    build->add_option("--graph", o.graph, "file | path:n | star:n | grid:a,b | cubic:a,b,c");
    add_out(build);

    std::string file1, file2, ident_file, weld_type;
    bool reverse = false, prepare = false;
    auto *weldc = app.add_subcommand("weld", "Weld two codes");
    weldc->add_option("code1", file1)->required();
    weldc->add_option("code2", file2)->required();
    weldc->add_option("ident", ident_file)->required();
    weldc->add_option("--type", weld_type, "z | x")->required();
    weldc->add_flag("--reverse-pairing", reverse);
    weldc->add_flag("--prepare", prepare, "Rewrite inputs so the preconditions hold");
    add_out(weldc);

    auto *info = app.add_subcommand("info", "Summarize a code");
    info->add_option("code", file1)->required();

    std::string logical = "z", method = "both";
    size_t index = 0;
    auto *barrier = app.add_subcommand("barrier", "Energy barrier of a logical");
    barrier->add_option("code", file1)->required();
    barrier->add_option("--logical", logical, "z | x");
    barrier->add_option("--method", method, "exact | bound | both")
        ->check(CLI::IsMember({"exact", "bound", "both"}));
    barrier->add_option("--index", index);

    auto *bound = app.add_subcommand("bound", "Compare the parity bound with the exact barrier");
    bound->add_option("code", file1)->required();
    bound->add_option("--logical", logical, "z | x");
    bound->add_option("--index", index);

    std::string golden_dir = default_golden_dir();
    std::optional<uint64_t> seed;
    size_t random_count = 200;
    auto *verify = app.add_subcommand("verify", "Run the reference suite");
    verify->add_option("--golden-dir", golden_dir);
    verify->add_option("--seed", seed, "Also check random welds against the oracle");
    verify->add_option("--random", random_count, "Number of random welds with --seed");

    std::string d_range = "1:2", r_range = "1:2", plan;
    auto *sweep = app.add_subcommand("sweep", "Barrier sweep over solid width d and weld path length R");
    sweep->add_option("--d", d_range, "a or a:b");
    sweep->add_option("--R", r_range, "a or a:b");
    sweep->add_option("--plan", plan, "side:L or qubits:N, print the scaling plan instead");
    sweep->add_option("--out", o.out);

    auto *exportc = app.add_subcommand("export", "Convert a code file");
    exportc->add_option("code", file1)->required();
    add_out(exportc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*build) {
            CssCode code;
            auto strings_mode = [&] {
                if (strings == "none") return StringLogicals::kNone;
                if (strings == "fold-x") return StringLogicals::kFoldX;
                if (strings == "fold-z") return StringLogicals::kFoldZ;
                if (strings == "promote") return StringLogicals::kPromote;
                throw ValidationError("--strings must be none, fold-x, fold-z or promote");
            };
            SolidSpec solid{dx, dy, dz, horizontal};
            if (family == "two-qubit") {
                code = build_two_qubit();
            } else if (family == "repetition") {
                code = build_repetition(rep_n, folded);
            } else if (family == "surface") {
                code = by_welding ? build_surface_by_welding({width, height})
                                  : build_surface({width, height}, strings_mode());
            } else if (family == "solid") {
                code = by_welding ? build_solid_by_welding(solid) : build_solid(solid);
            } else if (family == "welded-surface" || family == "welded-solid") {
                if (o.graph.empty()) {
                    throw ValidationError("--graph is required for " + family);
                }
                WeldGraph g = WeldGraph::from_spec(o.graph);
                code = family == "welded-surface" ? build_welded_surface(g, parse_boundary_type(boundary), {width, height})
                                                  : build_welded_solid(g, solid);
            } else {
                throw ValidationError("unknown family '" + family + "'");
            }
            emit(o, out, render(o, code));
        } else if (*weldc) {
            CssCode c1 = read_code_file(file1), c2 = read_code_file(file2);
            QubitIdentification ident = QubitIdentification::parse(read_file(ident_file));
            WeldType type = parse_weld_type(weld_type);
            if (prepare) {
                std::tie(c1, c2) = prepare_weld(c1, c2, ident, type);
            }
            emit(o, out, render(o, weld(c1, c2, ident, type, {reverse}).code));
        } else if (*info) {
            CssCode c = read_code_file(file1);
            out << "n=" << c.n() << " k=" << encoded_qubits(c) << "\n";
            out << "X generators: " << c.gens(PauliKind::X).size() << " (rank " << rank_gf2(c.gens(), PauliKind::X)
                << ")\n";
            out << "Z generators: " << c.gens(PauliKind::Z).size() << " (rank " << rank_gf2(c.gens(), PauliKind::Z)
                << ")\n";
            out << "promoted logicals: " << c.logicals().size() << "\n";
            out << "flat regions: " << (c.regions() ? "yes" : "no") << "\n";
            if (encoded_qubits(c) > 0) {
                try {
                    out << "distance: " << fmt_d(distance(c)) << "\n";
                } catch (const FeasibilityError &e) {
                    out << "distance: skipped (" << e.what() << ")\n";
                }
            }
        } else if (*barrier) {
            CssCode c = read_code_file(file1);
            PauliKind kind = parse_kind(logical);
            if (index >= c.logicals().size()) {
                throw ValidationError("no promoted logical " + std::to_string(index));
            }
            if (method == "bound" || method == "both") {
                if (!c.regions()) {
                    throw ValidationError("the bound needs flat-region metadata (build with --format json)");
                }
                out << barrier_to_json(parity_lower_bound(c.regions()->for_particle(opposite(kind)),
                                                          c.logicals()[index].rep(kind)))
                    << "\n";
            }
            if (method == "exact" || method == "both") {
                out << barrier_to_json(exact_barrier(c, index, kind, o.max_states)) << "\n";
            }
        } else if (*bound) {
            CssCode c = read_code_file(file1);
            BoundReport r = verify_bound(c, index, parse_kind(logical), o.max_states);
            json j{{"bound", r.bound}, {"exact", r.exact}, {"holds", r.holds}, {"saturated", r.saturated}};
            if (r.witness) {
                j["witness"] = json::parse(walk_json(*r.witness));
            }
            out << j.dump() << "\n";
            if (!r.holds) {
                return 1;
            }
        } else if (*verify) {
            auto cases = verify_reference_examples(golden_dir);
            if (seed) {
                std::mt19937_64 rng(*seed);
                size_t bad = 0;
                for (size_t i = 0; i < random_count; i++) {
                    WeldInstance w = random_weld_instance(rng);
                    CssCode got = weld(w.code1, w.code2, w.ident, w.type).code;
                    CssCode want = weld_oracle(w.code1, w.code2, w.ident, w.type);
                    if (!groups_equal(got.gens(), want.gens()) || encoded_qubits(got) != 0) {
                        bad++;
                    }
                }
                cases.push_back({"random_welds", bad == 0,
                                 std::to_string(bad) + " of " + std::to_string(random_count) + " differ from oracle"});
            }
            bool all = true;
            for (const auto &c : cases) {
                out << (c.ok ? "PASS " : "FAIL ") << c.name;
                if (!c.ok) {
                    out << ": " << c.detail;
                }
                out << "\n";
                all = all && c.ok;
            }
            return all ? 0 : 1;
        } else if (*sweep) {
            std::ostringstream csv;
            if (!plan.empty()) {
                size_t colon = plan.find(':');
                std::string kind = plan.substr(0, colon);
                if (colon == std::string::npos || (kind != "side" && kind != "qubits")) {
                    throw ValidationError("--plan must be side:L or qubits:N");
                }
                ScalingPlan p = tune_scaling({kind == "side" ? ScalingBudget::Kind::kSide : ScalingBudget::Kind::kQubits,
                                              parse_range(plan.substr(colon + 1)).first});
                json j{{"alpha", p.alpha.str()},
                       {"d", p.d},
                       {"R", p.R},
                       {"L", p.L},
                       {"N", p.N},
                       {"barrier_exponent_N", p.barrier_exponent_N.str()},
                       {"barrier_exponent_L", p.barrier_exponent_L.str()},
                       {"distance_exponent_L", p.distance_exponent_L.str()},
                       {"predicted_barrier_Z", p.predicted_z_barrier},
                       {"predicted_barrier_X", p.predicted_x_barrier},
                       {"note", "power-law planning estimate"}};
                emit(o, out, j.dump(2) + "\n");
                return 0;
            }
            auto [d0, d1] = parse_range(d_range);
            auto [r0, r1] = parse_range(r_range);
            csv << "d,R,n,barrier_X,barrier_Z,bound_X,bound_Z,seconds\n";
            for (size_t d = d0; d <= d1; d++) {
                for (size_t R = r0; R <= r1; R++) {
                    auto t0 = std::chrono::steady_clock::now();
                    std::string cells[6] = {"NA", "NA", "NA", "NA", "NA", "NA"};
                    try {
                        CssCode c = R == 1 ? build_solid({d, d, d, false})
                                           : build_welded_solid(WeldGraph::path(R), {d, d, d, false});
                        cells[0] = std::to_string(c.n());
                        auto attempt = [&](int slot, const std::function<size_t()> &f) {
                            try {
                                cells[slot] = std::to_string(f());
                            } catch (const FeasibilityError &) {
                            }
                        };
                        attempt(1, [&] { return exact_barrier(c, 0, PauliKind::X, o.max_states).barrier; });
                        attempt(2, [&] { return exact_barrier(c, 0, PauliKind::Z, o.max_states).barrier; });
                        attempt(3, [&] {
                            return parity_lower_bound(c.regions()->z_particles, c.logicals()[0].x_rep).barrier;
                        });
                        attempt(4, [&] {
                            return parity_lower_bound(c.regions()->x_particles, c.logicals()[0].z_rep).barrier;
                        });
                    } catch (const ValidationError &) {
                    }
                    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    csv << d << "," << R;
                    for (int i = 0; i < 5; i++) {
                        csv << "," << cells[i];
                    }
                    csv << "," << secs << "\n";
                }
            }
            emit(o, out, csv.str());
        } else if (*exportc) {
            emit(o, out, render(o, read_code_file(file1)));
        }
    } catch (const WeldPreconditionError &e) {
        if (o.json_errors) {
            out << json{{"error", "weld_precondition"}, {"check", e.check}, {"side", e.side},
                        {"witness", e.witness}, {"message", e.what()}, {"exit", 1}}.dump()
                << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 1;
    } catch (const ValidationError &e) {
        if (o.json_errors) {
            out << json{{"error", "validation"}, {"message", e.what()}, {"exit", 1}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 1;
    } catch (const FeasibilityError &e) {
        if (o.json_errors) {
            out << json{{"error", "feasibility"}, {"message", e.what()}, {"exit", 2}}.dump() << "\n";
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 0;
}

}  // namespace weldcode
