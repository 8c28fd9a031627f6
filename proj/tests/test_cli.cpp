#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "adekit/cli.hpp"

using namespace adekit;

namespace {

struct Outcome {
  int code = 0;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string quoted(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Outcome run_binary(const std::vector<std::string>& args) {
  std::string cmd = ADEKIT_CLI_PATH;
  for (const auto& a : args) cmd += " " + quoted(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

Json parsed(const Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST(Cli, Classify) {
  const auto o = run({"classify", "coxeter(2; 1-2:5)"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "{\"type\":[\"I5\"],\"finite\":true,\"crystallographic\":false}\n");
  const auto affine = parsed(run({"classify", "coxeter(3; 1-2:3, 2-3:3, 1-3:3)"}));
  EXPECT_TRUE(affine["type"].is_null());
  EXPECT_FALSE(affine["finite"].get<bool>());
  EXPECT_EQ(parsed(run({"classify", "A2+G2"}))["type"], Json({"A2", "G2"}));
}

TEST(Cli, Roots) {
  const auto e8 = parsed(run({"roots", "E8"}));
  EXPECT_EQ(e8["root_count"], 240);
  EXPECT_EQ(e8["positive"], 120);
  EXPECT_EQ(e8["weyl_order"], "696729600");
  EXPECT_EQ(e8["lie"]["dim"], 248);
  const auto g2 = parsed(run({"roots", "G2"}));
  EXPECT_EQ(g2["gram"], Json::parse(R"([["6","-3"],["-3","2"]])"));
  EXPECT_EQ(g2["lie"]["name"], "g2");
  const auto h3 = parsed(run({"roots", "H3"}));
  EXPECT_EQ(h3["root_count"], 30);
  EXPECT_TRUE(h3["marks"].is_null());
  EXPECT_TRUE(h3["lie"].is_null());
  EXPECT_EQ(parsed(run({"roots", "A1+A2"}))["lie"]["name"], "su(2)+su(3)");
}

TEST(Cli, Weyl) {
  EXPECT_EQ(parsed(run({"weyl", "H4"}))["weyl_order"], "14400");
  EXPECT_EQ(parsed(run({"weyl", "BC2"}))["weyl_order"], "8");
  EXPECT_EQ(parsed(run({"weyl", "I2(7)"}))["weyl_order"], "14");
  EXPECT_EQ(run({"weyl", "coxeter(3; 1-2:3, 2-3:3, 1-3:3)"}).code, 2);
}

TEST(Cli, Orientation) {
  const std::string b3 = "coxeter(3; 1-2:4, 2-3:3)";
  EXPECT_EQ(parsed(run({"lattice", b3, "--kissing"}))["kissing"], 6);
  EXPECT_EQ(parsed(run({"lattice", b3, "--kissing", "--orientation", "c"}))["kissing"], 12);
  EXPECT_EQ(parsed(run({"weyl", b3, "--orientation", "c"}))["weyl_order"], "48");
  EXPECT_EQ(run({"lattice", b3, "--orientation", "x"}).code, 2);
  EXPECT_EQ(run({"classify", b3, "--orientation", "c"}).code, 2);
}

TEST(Cli, Lattice) {
  EXPECT_EQ(run({"lattice", "E8", "--kissing"}).out, "{\"kissing\":240,\"min\":\"2\",\"det\":\"1\"}\n");
  const auto d4 = parsed(run({"lattice", "D4"}));
  EXPECT_EQ(d4["det"], "4");
  EXPECT_NEAR(d4["density"].get<double>(), 0.616850275068, 1e-12);
  const auto shells = parsed(run({"lattice", "A2", "--bound", "6"}));
  EXPECT_EQ(shells["count"], 12);
  EXPECT_EQ(shells["shells"], Json::parse(R"([{"norm":"2","count":6},{"norm":"6","count":6}])"));
  EXPECT_EQ(parsed(run({"lattice", "slice(E6)", "--kissing"}))["det"], "3");
  EXPECT_EQ(parsed(run({"lattice", "glue(8)", "--kissing"}))["kissing"], 240);
  EXPECT_EQ(parsed(run({"lattice", "Z3"}))["kissing"], 6);
  EXPECT_EQ(parsed(run({"lattice", "[[2,\"1/2\"],[\"1/2\",2]]"}))["min"], "2");
  EXPECT_EQ(run({"lattice", "E8", "--kissing", "--bound", "4"}).code, 2);
  EXPECT_EQ(run({"lattice", "[[1,2],[2,1]]"}).code, 2);
  EXPECT_EQ(run({"lattice", "[[1,2]"}).code, 2);
}

TEST(Cli, Witt) {
  EXPECT_EQ(run({"witt", "[[1,0,0],[0,2,1],[0,1,2]]"}).out, "{\"components\":[\"A2\"],\"z_rank\":1}\n");
  EXPECT_EQ(parsed(run({"witt", "E7"}))["components"], Json({"E7"}));
}

TEST(Cli, Quiver) {
  const auto q = parsed(run({"quiver", "quiver(3; 1>2, 3>2)"}));
  EXPECT_EQ(q["arrows"], Json::parse("[[1,2],[3,2]]"));
  EXPECT_TRUE(q["finite_type"].get<bool>());
  EXPECT_EQ(q["type"], Json({"A3"}));
  EXPECT_EQ(q["root_count"], 6);
  const auto k = parsed(run({"quiver", "quiver(2; 1>2, 1>2)"}));
  EXPECT_FALSE(k["finite_type"].get<bool>());
  EXPECT_TRUE(k["roots"].is_null());
  EXPECT_EQ(run({"quiver", "quiver(2; 1>5)"}).code, 2);
}

TEST(Cli, McKay) {
  const auto t = parsed(run({"mckay", "2T"}));
  EXPECT_EQ(t["order"], 24);
  EXPECT_EQ(t["classes"], 7);
  EXPECT_EQ(t["affine"], "E6~");
  EXPECT_EQ(t["finite"], "E6");
  const auto& adj = t["mckay"]["adjacency"];
  const int trivial = t["mckay"]["trivial_node"].get<int>();
  EXPECT_EQ(t["dims"][static_cast<std::size_t>(trivial)], 1);
  EXPECT_EQ(adj.size(), 7u);
  EXPECT_EQ(parsed(run({"mckay", "BinaryDihedral(4)"}))["affine"], "D6~");
  EXPECT_EQ(parsed(run({"mckay", "Cyclic(5)"}))["finite"], "A4");
  EXPECT_EQ(run({"mckay", "2I", "--seed", "9"}).out, run({"mckay", "2I"}).out);
  EXPECT_EQ(run({"mckay", "2X"}).code, 2);
  EXPECT_EQ(run({"mckay", "Cyclic(1)"}).code, 1);
}

TEST(Cli, Polytope) {
  const auto p = parsed(run({"polytope", "600-cell"}));
  EXPECT_EQ(p["vertices"], 120);
  EXPECT_EQ(p["degree"], 12);
  EXPECT_EQ(p["cells"], 600);
  EXPECT_NEAR(p["edge_length"].get<double>(), 0.618033988750, 1e-12);
  EXPECT_TRUE(parsed(run({"polytope", "E8"}))["cells"].is_null());
  const auto csv = run({"polytope", "24-cell", "--csv"}).out;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 24);
  EXPECT_EQ(run({"polytope", "demihypercube(30)"}).code, 2);
}

TEST(Cli, TextOutput) {
  const auto o = run({"classify", "E6", "--text"});
  EXPECT_EQ(o.out, "type: [\"E6\"]\nfinite: true\ncrystallographic: true\n");
  EXPECT_EQ(run({"weyl", "A3", "--text"}).out, "type: [\"A3\"]\nweyl_order: 24\n");
  EXPECT_EQ(run({"classify", "E6", "--text", "--json"}).code, 2);
}

TEST(Cli, FileInput) {
  const auto path = std::filesystem::temp_directory_path() / "adekit_cli_test_input.txt";
  std::ofstream(path) << "coxeter(4; 1-2:3, 2-3:3, 3-4:5)\n";
  EXPECT_EQ(parsed(run({"classify", path.string()}))["type"], Json({"H4"}));
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"classify", "coxeter(2; 1-2:"}).code, 2);
  EXPECT_EQ(run({"frobnicate", "E8"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "E8", "--kissing"}).code, 2);
  EXPECT_EQ(run({"roots", "coxeter(3; 1-2:3, 2-3:3, 1-3:3)"}).code, 2);
  const auto bad = run({"classify", "coxeter(2; 1-2:"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("position"), std::string::npos);
}

TEST(Cli, ByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"classify", "E8"}, {"roots", "F4"}, {"lattice", "E7"}, {"mckay", "2O"}, {"polytope", "H4"}, {"quiver", "quiver(4; 1>2, 3>2, 4>2)"}};
  for (const auto& c : commands) {
    const auto first = run(c), second = run(c);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.code, 0);
  }
}

TEST(Cli, BinaryMatchesInProcess) {
  const std::vector<std::vector<std::string>> commands{
      {"classify", "coxeter(2; 1-2:5)"}, {"lattice", "E8", "--kissing"}, {"mckay", "2T"}, {"weyl", "H3", "--text"}};
  for (const auto& c : commands) {
    const auto bin = run_binary(c);
    const auto in = run(c);
    EXPECT_EQ(bin.code, 0);
    EXPECT_EQ(bin.out, in.out);
    EXPECT_EQ(run_binary(c).out, bin.out);
  }
  EXPECT_EQ(run_binary({"classify", "coxeter(2; 1-2"}).code, 2);
}
