#include "mspace/cli.hpp"
#include "mspace/io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mspace {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(MSPACE_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("MSPACE_GRID"); }
  void TearDown() override { unsetenv("MSPACE_GRID"); }
};

TEST_F(Cli, GenPrintsTheClosedAlgebra) {
  const Outcome r = run({"gen", data("split.json")});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["members"].size(), 4u);
  EXPECT_EQ(doc["atoms"].size(), 2u);
  EXPECT_EQ(doc["separating"], false);

  const Json trivial = Json::parse(run({"gen", data("one_atom.json")}).out);
  EXPECT_EQ(trivial["members"], Json::parse(R"([[], ["a", "b"]])"));
}

TEST_F(Cli, InputErrorsExitTwo) {
  const Outcome dup = run({"gen", data("duplicate_labels.json")});
  EXPECT_EQ(dup.code, exit_input_error);
  EXPECT_NE(dup.err.find("duplicate"), std::string::npos);
  EXPECT_TRUE(dup.out.empty());

  EXPECT_EQ(run({"gen", data("truncated.json")}).code, exit_input_error);
  EXPECT_EQ(run({"gen", data("no_such_file.json")}).code, exit_input_error);
  EXPECT_EQ(run({"gen", data("six_points.json")}).code, exit_input_error);
  EXPECT_EQ(run({"--max-points", "6", "gen", data("six_points.json")}).code, exit_ok);
  EXPECT_EQ(run({}).code, exit_input_error);
  EXPECT_EQ(run({"frobnicate"}).code, exit_input_error);
  EXPECT_EQ(run({"enumerate", data("power3.json"), "lattices"}).code, exit_input_error);
  EXPECT_EQ(run({"verify", data("power3.json"), "no-such-suite"}).code, exit_input_error);
  EXPECT_EQ(run({"verify", data("power3.json"), "duality", "--grid", "1/0"}).code, exit_input_error);
  EXPECT_EQ(run({"verify", data("power3.json"), "duality", "--grid", "-1,2"}).code, exit_input_error);
}

TEST_F(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("isocheck"), std::string::npos);
}

TEST_F(Cli, EnumerateCounts) {
  EXPECT_EQ(json_lines(run({"enumerate", data("power3.json"), "ideals"}).out).size(), 8u);
  EXPECT_EQ(json_lines(run({"enumerate", data("power3.json"), "zcongruences"}).out).size(), 8u);
  const auto maxcong = json_lines(run({"enumerate", data("power3.json"), "maxcong"}).out);
  ASSERT_EQ(maxcong.size(), 3u);
  EXPECT_EQ(maxcong[0], Json::parse(R"({"kind": "fromFilter", "core": ["a"]})"));

  const auto filters = json_lines(run({"enumerate", data("one_atom.json"), "filters"}).out);
  ASSERT_EQ(filters.size(), 2u);
  EXPECT_EQ(filters[0], Json::parse(R"({"core": [], "proper": false})"));
  EXPECT_EQ(filters[1], Json::parse(R"({"core": ["a", "b"], "proper": true})"));

  const auto ring = json_lines(run({"enumerate", data("split.json"), "ideals", "--side", "ring"}).out);
  ASSERT_EQ(ring.size(), 4u);
  EXPECT_EQ(ring.front()["side"], "ring");
}

TEST_F(Cli, VerifyPassesAndReportsCounts) {
  const Outcome all = run({"verify", data("power3.json"), "all"});
  EXPECT_EQ(all.code, exit_ok);
  EXPECT_NE(all.out.find(" 0 failures"), std::string::npos);
  EXPECT_EQ(all.out.find("elapsed"), std::string::npos);

  const Outcome duality = run({"verify", data("split.json"), "duality"});
  EXPECT_EQ(duality.code, exit_ok) << duality.out;

  const Outcome timed = run({"verify", data("power2.json"), "prime", "--timing"});
  EXPECT_EQ(timed.code, exit_ok);
  EXPECT_NE(timed.out.find("elapsed: "), std::string::npos);
}

TEST_F(Cli, MutationIsCaught) {
  const Outcome r = run({"verify", data("power2.json"), "all", "--mutate", "swap-join-meet"});
  EXPECT_EQ(r.code, exit_counterexample);
  EXPECT_NE(r.out.find("first counterexample: "), std::string::npos);
  EXPECT_EQ(r.out.find(" 0 failures"), std::string::npos);
}

TEST_F(Cli, GridFromFlagAndEnvironment) {
  auto checks = [](const Outcome& r) { return r.out.substr(0, r.out.find(" checks")); };
  const Outcome base = run({"verify", data("power2.json"), "duality"});
  const Outcome flag = run({"verify", data("power2.json"), "duality", "--grid", "0,1"});
  const Outcome flag_first = run({"--grid", "0,1", "verify", data("power2.json"), "duality"});
  EXPECT_EQ(flag.code, exit_ok);
  EXPECT_NE(checks(base), checks(flag));
  EXPECT_EQ(flag.out, flag_first.out);

  setenv("MSPACE_GRID", "0,1", 1);
  const Outcome env = run({"verify", data("power2.json"), "duality"});
  EXPECT_EQ(env.out, flag.out);
  const Outcome both = run({"verify", data("power2.json"), "duality", "--grid", "0,1/2,1,2"});
  EXPECT_EQ(both.out, base.out);
}

TEST_F(Cli, ExportIsDeterministic) {
  const Outcome dot = run({"export", data("power2.json"), "ideal-lattice-dot"});
  ASSERT_EQ(dot.code, exit_ok);
  EXPECT_EQ(dot.out, run({"export", data("power2.json"), "ideal-lattice-dot"}).out);
  EXPECT_NE(dot.out.find("rankdir=BT"), std::string::npos);

  const Json st = Json::parse(run({"export", data("power3.json"), "structure-json"}).out);
  EXPECT_EQ(st["points"], 3);

  for (const std::string target : {"filter-lattice-dot", "structure-dot", "quotient-json"}) {
    const Outcome a = run({"export", data("split.json"), target});
    EXPECT_EQ(a.code, exit_ok) << target;
    EXPECT_EQ(a.out, run({"export", data("split.json"), target}).out) << target;
  }

  const auto path = std::filesystem::temp_directory_path() / "mspace_cli_test.dot";
  ASSERT_EQ(run({"export", data("power2.json"), "ideal-lattice-dot", "-o", path.string()}).code, exit_ok);
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  EXPECT_EQ(file.str(), dot.out);
  std::filesystem::remove(path);
}

TEST_F(Cli, IsocheckPassesForHomeomorphicSpaces) {
  const Outcome id = run({"isocheck", data("power3.json"), data("power3.json"), data("identity_map.json")});
  EXPECT_EQ(id.code, exit_ok) << id.out;

  const Outcome swap = run({"isocheck", data("power3.json"), data("relabelled3.json"), data("swap_map.json")});
  ASSERT_EQ(swap.code, exit_ok) << swap.out;
  const Json doc = Json::parse(swap.out);
  EXPECT_EQ(doc["atomPermutation"], Json::parse("[1, 0, 2]"));
  EXPECT_EQ(doc["certificate"]["multiplicative"], true);
  EXPECT_EQ(doc["roundTrip"], true);

  const Outcome atoms = run({"isocheck", data("power2.json"), data("power2.json"), data("swap_atoms_map.json")});
  EXPECT_EQ(atoms.code, exit_ok);
  EXPECT_EQ(Json::parse(atoms.out)["mode"], "atoms");

  const Json split = Json::parse(
      run({"isocheck", data("split.json"), data("split.json"), data("identity_map.json")}).out);
  EXPECT_EQ(split["pass"], true);
  EXPECT_TRUE(split["roundTrip"].is_null());
}

TEST_F(Cli, IsocheckFailsWithAReason) {
  const Outcome shape = run({"isocheck", data("power3.json"), data("split.json"), data("identity_map.json")});
  EXPECT_EQ(shape.code, exit_counterexample);
  const Json doc = Json::parse(shape.out);
  EXPECT_EQ(doc["pass"], false);
  EXPECT_NE(doc["reason"].get<std::string>().find("NotHomeomorphism"), std::string::npos);

  const Outcome scaled = run({"isocheck", data("power2.json"), data("power2.json"), data("scaled_atoms_map.json")});
  EXPECT_EQ(scaled.code, exit_counterexample);
  EXPECT_NE(scaled.out.find("NotRepresentable"), std::string::npos);

  EXPECT_EQ(run({"isocheck", data("power2.json"), data("power2.json"), data("power2.json")}).code,
            exit_input_error);
}

}  // namespace
}  // namespace mspace
