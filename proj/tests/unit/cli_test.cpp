#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace cocycle_forge;
using namespace cocycle_forge::testing;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cocycle_forge_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kZ9R = data_path("z9_r.txt");
const std::string kZ9Table = data_path("z9_table.txt");
const std::string kD3Table = data_path("d3_table.txt");

}  // namespace

TEST(Cli, ValidateReferenceTable) {
  const CliRun r = run({"validate", "--group", "cyclic9", "--cocycle", kZ9Table});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, DecomposeZ9ByClasses) {
  const CliRun r = run({"decompose", "--by", "classes", "--group", "cyclic9", "--r", kZ9R});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, data("z9_decompose_classes.golden"));
}

TEST(Cli, DecomposeRPrimeByBstar) {
  const CliRun r = run({"decompose", "--by", "bstar", "--group", "cyclic9", "--r", data_path("z9_r_prime.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, data("z9_prime_bstar.golden"));
}

TEST(Cli, GeneratorsGolden) {
  const CliRun r = run({"generators", "--group", "cyclic9", "--r", kZ9R});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, data("z9_generators.golden"));
}

TEST(Cli, D3GraphGolden) {
  const CliRun r = run({"graph", "--kind", "generator", "--group", data_path("d3_group.txt"), "--cocycle", kD3Table});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, data("d3_generator_graph.golden"));
}

TEST(Cli, SearchD3Exhausts) {
  const CliRun r = run({"search-r", "--bound", "20", "--group", "d3", "--cocycle", kD3Table});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("# no realization", 0), 0u);
}

TEST(Cli, SearchZ9FindsReferenceR) {
  const CliRun r = run({"search-r", "--bound", "4", "--group", "cyclic9", "--cocycle", kZ9Table});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, data("z9_r.txt"));
}

TEST(Cli, ChainCocycleAndLift) {
  const std::string chain = temp_file("chain3", "1 2 3 4 5 6 7 8\n6 7\n\n");
  const CliRun t = run({"chain-cocycle", "--group", "cyclic9", "--r", kZ9R, "--chain", chain});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, emit_table(cocycle_from_r(z9_r_prime()).table()));
  const CliRun l = run({"lift-r", "--group", "cyclic9", "--r", kZ9R, "--chain", chain});
  EXPECT_EQ(l.code, 0);
  EXPECT_EQ(l.out, "(0,0,0,0)\n(1,1,1,0)\n(2,2,2,0)\n(3,3,3,0)\n(4,4,4,0)\n(1,1,1,0)\n(2,2,0,0)\n(3,3,0,0)\n(3,3,3,0)\n");
}

TEST(Cli, PadLiftIsCertifiedAndParsesBack) {
  const std::string chain = temp_file("chain_mid", "3 4 8\n4\n");
  const CliRun r = run({"pad-lift", "--group", "cyclic9", "--r", kZ9R, "--chain", chain});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# certified=true"), std::string::npos);
  const auto lifted = parse_r(make_cyclic(9), r.out);
  EXPECT_EQ(lifted.values().size(), 9u);
}

TEST(Cli, IdentityAndMorphism) {
  EXPECT_EQ(run({"identity", "--name", "fI_eq_f", "--group", "cyclic9", "--r", kZ9R, "--ideal", "{6,7}"}).code, 0);
  EXPECT_EQ(run({"identity", "--name", "cap_zero", "--group", "cyclic9", "--r", kZ9R, "--family", "{6,7}",
                 "--family", "{3,4,8}"})
                .code,
            0);
  EXPECT_EQ(run({"identity", "--name", "cap_zero", "--group", "cyclic9", "--r", kZ9R, "--family", "{6,7}",
                 "--family", "{4,6,7}"})
                .code,
            1);
  const CliRun m = run({"morphism", "--group", "cyclic9", "--r", kZ9R, "--ideal", "{3,4,5,6,7,8}"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("dimensions=9=3+6"), std::string::npos);
}

TEST(Cli, OutFileReceivesOutput) {
  const auto path = (std::filesystem::temp_directory_path() / "cocycle_forge_cli_out.txt").string();
  std::filesystem::remove(path);
  const CliRun r = run({"inertial", "--group", "cyclic9", "--r", kZ9R, "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_file(path), "H={0}\nG*={1,2,3,4,5,6,7,8}\n");
}

TEST(Cli, Census) {
  const CliRun r = run({"census", "--order", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# count=4 truncated=false"), std::string::npos);
  const CliRun s = run({"census", "--group", "z3", "--suite"});
  EXPECT_EQ(s.code, 0) << s.out;
}

// Exit-code matrix: 0 success, 1 validation or identity failure, 2 parse or usage error.
TEST(Cli, ExitCodeMatrix) {
  const std::string malformed = temp_file("bad_row", "111111111\n1111x1100\n111001000\n110000000\n100000000\n111000001\n110000000\n100000000\n100001000\n");
  const std::string bad_chain = temp_file("bad_chain", "6 7\n3 4 8\n");
  const std::string not_cocycle = temp_file("not_cocycle", "111\n100\n110\n");
  const std::string other_r = temp_file("other_r", "0\n1\n1\n1\n1\n1\n1\n1\n1\n");
  const std::string bad_r = temp_file("bad_r", "0\n1\n9\n1\n1\n1\n1\n1\n1\n");

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"validate", "--group", "cyclic9", "--r", kZ9R}, 0},
      {{"nk", "--group", "cyclic9", "--cocycle", kZ9Table, "--r", kZ9R}, 0},
      {{"validate", "--group", "cyclic9", "--cocycle", malformed}, 2},
      {{"validate", "--group", "cyclic9", "--r", kZ9R, "--chain", bad_chain}, 1},
      {{"validate", "--group", "cyclic3", "--cocycle", not_cocycle}, 1},
      {{"validate", "--group", "cyclic9", "--cocycle", kZ9Table, "--r", other_r}, 1},
      {{"validate", "--group", "cyclic9", "--r", bad_r}, 1},
      {{"validate", "--group", "cyclic9", "--cocycle", "/nonexistent/table"}, 2},
      {{"validate", "--group", "no-such-group"}, 2},
      {{"validate"}, 2},
      {{"nk", "--group", "cyclic9"}, 2},
      {{"frobnicate"}, 2},
      {{}, 2},
      {{"graph", "--kind", "hasse", "--group", "cyclic9", "--r", kZ9R}, 2},
      {{"decompose", "--by", "classes", "--group", "d3", "--cocycle", kD3Table}, 0},
      {{"decompose", "--by", "classes", "--group", "cyclic3", "--r", temp_file("r3", "0\n1\n1\n")}, 1},
      {{"identity", "--name", "nope", "--group", "cyclic9", "--r", kZ9R}, 2},
      {{"inertial", "--group", "cyclic9", "--r", kZ9R, "--out", "/nonexistent/dir/out"}, 1},
      {{"--help"}, 0},
  };
  for (const auto& c : cases) {
    const CliRun r = run(c.args);
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    EXPECT_EQ(r.code, c.code) << joined << "\n" << r.err;
  }
}

TEST(Cli, BadChainNamesContainment) {
  const std::string bad_chain = temp_file("bad_chain2", "6 7\n3 4 8\n");
  const CliRun r = run({"validate", "--group", "cyclic9", "--r", kZ9R, "--chain", bad_chain});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("ideal 2 {3,4,8} is not contained in ideal 1 {6,7}"), std::string::npos);
}

TEST(Cli, MalformedRowNamesLine) {
  const std::string malformed = temp_file("bad_row2", "111111111\n1111x1100\n111001000\n110000000\n100000000\n111000001\n110000000\n100000000\n100001000\n");
  const CliRun r = run({"validate", "--group", "cyclic9", "--cocycle", malformed});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}
