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

#include <filesystem>
#include <random>
#include <sstream>

#include "json.hpp"
#include "weldcode/builders.h"
#include "weldcode/cli.h"
#include "weldcode/errors.h"
#include "weldcode/graph.h"
#include "weldcode/io.h"
#include "weldcode/random_codes.h"

using namespace weldcode;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "weldcode");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string golden(const std::string &name) { return (fs::path(WELDCODE_GOLDEN_DIR) / name).string(); }

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir = fs::temp_directory_path() / ("weldcode_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                           "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string &name) const { return (dir / name).string(); }
    fs::path dir;
};

void expect_same_code(const CssCode &a, const CssCode &b) {
    EXPECT_EQ(a.gens(), b.gens());
    EXPECT_EQ(a.logicals(), b.logicals());
}

}  // namespace

TEST(Io, TextFormat) {
    CssCode c = code_from_text("# comment\nn=3 k=0\nX: XXI\nX: n=3; X:1,2\nZ: ZZZ\n");
    EXPECT_EQ(c.gens(PauliKind::X)[1].str(), "IXX");
    EXPECT_EQ(code_to_text(c), "n=3 k=0\nX: XXI\nX: IXX\nZ: ZZZ\n");
    EXPECT_THROW(code_from_text("n=3 k=1\nX: XXI\nX: IXX\nZ: ZZZ\n"), ValidationError);
    EXPECT_THROW(code_from_text("n=3\nX: XZI\n"), ValidationError);
    EXPECT_THROW(code_from_text("n=3\nQ: XXI\n"), ValidationError);
    EXPECT_THROW(code_from_text("n=3\nX: XX\n"), ValidationError);
}

TEST(Io, JsonCarriesRegions) {
    CssCode c = build_welded_surface(WeldGraph::star(3), BoundaryType::Rough, {2, 2});
    CssCode back = code_from_json(code_to_json(c));
    expect_same_code(back, c);
    ASSERT_NE(back.regions(), nullptr);
    EXPECT_EQ(back.regions()->x_particles, c.regions()->x_particles);
    EXPECT_EQ(back.regions()->z_particles, c.regions()->z_particles);
    EXPECT_THROW(code_from_json("{\"n\": 2, \"x_gens\": [\"XZ\"]}"), ValidationError);
    EXPECT_THROW(code_from_json("{"), ValidationError);
}

TEST(Io, LargeCodesUseSparseText) {
    CssCode c = build_solid({2, 2, 4, false});
    ASSERT_GT(c.n(), 64u);
    std::string text = code_to_text(c);
    EXPECT_NE(text.find("; X:"), std::string::npos);
    expect_same_code(parse_code(text), c);
}

// Property: export then import keeps the group and the generator order.
TEST(IoProperty, ExportRoundTrip) {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1000; i++) {
        CssCode c = random_k0_code(rng, 1 + rng() % 80);
        if (rng() % 3 == 0) {
            c = build_surface({1 + rng() % 4, 1 + rng() % 4});
        }
        CssCode t = parse_code(code_to_text(c));
        CssCode j = parse_code(code_to_json(c));
        expect_same_code(t, c);
        expect_same_code(j, c);
        EXPECT_TRUE(groups_equal(t.gens(), c.gens()));
    }
}

TEST(Io, BarrierJson) {
    BarrierResult r;
    r.barrier = 2;
    r.witness.steps = {{3, PauliKind::Z}, {1, PauliKind::Z}};
    r.states_explored = 10;
    auto j = nlohmann::json::parse(barrier_to_json(r));
    EXPECT_EQ(j["method"], "exact");
    EXPECT_EQ(j["barrier"], 2);
    EXPECT_EQ(j["witness"][0][0], 3);
    EXPECT_EQ(j["witness"][0][1], "Z");
    EXPECT_EQ(j["states_explored"], 10);
}

TEST(Cli, BuildTwoQubit) {
    CliResult r = cli({"build", "two-qubit"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n=2 k=0\nX: XX\nZ: ZZ\n");
}

TEST_F(TempDir, WeldRepetitionHalves) {
    CliResult r = cli({"weld", golden("two_qubit.code"), golden("two_qubit.code"), golden("rep_ident.txt"), "--type",
                       "z", "--out", path("w.code")});
    ASSERT_EQ(r.status, 0) << r.err;
    CssCode w = read_code_file(path("w.code"));
    EXPECT_TRUE(groups_equal(w.gens(), read_code_file(golden("rep_zweld.code")).gens()));
}

TEST_F(TempDir, WeldPreconditionErrorJson) {
    write_file(path("xs.code"), "n=2 k=0\nX: XI\nX: IX\n");
    CliResult r = cli({"--json", "weld", golden("two_qubit.code"), path("xs.code"), golden("rep_ident.txt"), "--type",
                       "z"});
    EXPECT_EQ(r.status, 1);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["error"], "weld_precondition");
    EXPECT_EQ(j["check"], "well_matched");
    EXPECT_EQ(j["witness"], nlohmann::json::array({0}));
}

TEST_F(TempDir, BarrierBothMethodsOnThreeWayWeld) {
    ASSERT_EQ(cli({"build", "welded-surface", "--graph", "star:3", "--boundary", "rough", "--format", "json", "--out",
                   path("s.json")})
                  .status,
              0);
    CliResult r = cli({"barrier", path("s.json"), "--logical", "z", "--method", "both"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream lines(r.out);
    std::string bound_line, exact_line;
    std::getline(lines, bound_line);
    std::getline(lines, exact_line);
    EXPECT_EQ(nlohmann::json::parse(bound_line)["barrier"], 2);
    EXPECT_EQ(nlohmann::json::parse(bound_line)["method"], "parity_bound");
    EXPECT_EQ(nlohmann::json::parse(exact_line)["barrier"], 2);

    CliResult capped = cli({"barrier", path("s.json"), "--method", "exact", "--max-states", "4", "--json"});
    EXPECT_EQ(capped.status, 2);
    EXPECT_EQ(nlohmann::json::parse(capped.out)["error"], "feasibility");

    CliResult b = cli({"bound", path("s.json"), "--logical", "z"});
    ASSERT_EQ(b.status, 0);
    auto j = nlohmann::json::parse(b.out);
    EXPECT_EQ(j["saturated"], true);
}

TEST_F(TempDir, ExportRoundTripThroughCli) {
    ASSERT_EQ(cli({"build", "surface", "--width", "2", "--height", "3", "--out", path("s.code")}).status, 0);
    ASSERT_EQ(cli({"export", path("s.code"), "--format", "json", "--out", path("s.json")}).status, 0);
    ASSERT_EQ(cli({"export", path("s.json"), "--format", "text", "--out", path("t.code")}).status, 0);
    EXPECT_EQ(read_file(path("s.code")), read_file(path("t.code")));
    CliResult info = cli({"info", path("s.json")});
    EXPECT_NE(info.out.find("n=13 k=1"), std::string::npos);
    EXPECT_NE(info.out.find("d_X=3 d_Z=3"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitOne) {
    EXPECT_EQ(cli({"build", "torus"}).status, 1);
    EXPECT_EQ(cli({"build", "surface", "--width", "0"}).status, 1);
    EXPECT_EQ(cli({"info", "/nonexistent/file.code"}).status, 1);
    EXPECT_EQ(cli({"frobnicate"}).status, 1);
    EXPECT_EQ(cli({"--help"}).status, 0);
}

TEST(Cli, SweepCsv) {
    CliResult r = cli({"sweep", "--d", "1:2", "--R", "1:2"});
    ASSERT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    EXPECT_EQ(header, "d,R,n,barrier_X,barrier_Z,bound_X,bound_Z,seconds");
    std::vector<std::string> rows;
    while (std::getline(lines, row)) rows.push_back(row.substr(0, row.rfind(',')));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "1,1,4,2,0,2,0");
    EXPECT_EQ(rows[1], "1,2,NA,NA,NA,NA,NA");
    CliResult plan = cli({"sweep", "--plan", "side:64"});
    auto j = nlohmann::json::parse(plan.out);
    EXPECT_EQ(j["alpha"], "2");
    EXPECT_EQ(j["barrier_exponent_N"], "2/9");
}

TEST(Cli, VerifySuitePasses) {
    CliResult r = cli({"verify", "--seed", "5", "--random", "50"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST_F(TempDir, VerifyNamesCorruptedCase) {
    fs::copy(WELDCODE_GOLDEN_DIR, dir / "golden");
    write_file(path("golden/rep_zweld.code"), "n=3 k=0\nX: XXX\nZ: ZZI\nZ: IZZ\n");
    CliResult r = cli({"verify", "--golden-dir", path("golden")});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("FAIL rep_zweld"), std::string::npos);
    EXPECT_NE(r.out.find("PASS rep_xweld"), std::string::npos);
}

TEST(Cli, ExecutableRuns) {
    std::string cmd = std::string(WELDCODE_CLI) + " build two-qubit > /dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
}
