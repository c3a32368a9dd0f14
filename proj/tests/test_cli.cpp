#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run(const std::string& args) { return shell(std::string(CHAINRING_CLI) + " " + args + " 2>&1"); }

std::string data(const std::string& name) { return std::string(CHAINRING_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, DescribeAnnihilator) {
  auto r = run("describe ann-u 0 --height 2");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  std::vector<std::string> gens = j["generators"];
  EXPECT_EQ(gens, (std::vector<std::string>{"x[00]", "x[01]", "x[1]", "x[10]", "x[11]", "x[0]^2"}));
}

TEST(Cli, DescribeBasisQueries) {
  auto none = run("describe basis-from-degree '{\"0\": -1, \"1\": -1}' --height 2");
  ASSERT_EQ(none.code, 0) << none.out;
  EXPECT_EQ(json::parse(none.out)["basis_element"], "none");
  auto some = run("describe basis-from-degree '{\"\": -1, \"0\": -1}' --height 2");
  EXPECT_EQ(json::parse(some.out)["basis_element"], "u[0]");
  auto piece = run("describe basis-piece -1 --height 1");
  ASSERT_EQ(piece.code, 0) << piece.out;
  EXPECT_EQ(json::parse(piece.out)["basis"], json({"u[]"}));
  auto chains = run("describe maximal-chains --height 3");
  EXPECT_EQ(json::parse(chains.out)["maximal_chains"].size(), 8u);
  EXPECT_EQ(run("describe basis-piece x --height 1").code, 2);
}

TEST(Cli, VerifyConstructionExitCodes) {
  EXPECT_EQ(run("verify-construction --height 0").code, 0);
  auto chain = run("verify-construction --poset file:" + data("chain.json") + " --degree 4");
  EXPECT_EQ(chain.code, 1);
  auto j = json::parse(chain.out);
  EXPECT_EQ(j["checks"][0]["counterexamples"][0]["condition"], "branching");
  auto bad = run("verify-construction --poset file:/nonexistent.json");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(run("verify-construction --bogus").code, 2);
  EXPECT_EQ(run("verify-construction --field Fp:9").code, 2);
  EXPECT_EQ(run("verify-construction --height -1").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, MalformedInputNamesLineOrField) {
  std::string path = ::testing::TempDir() + "/bad_poset.json";
  std::ofstream(path) << "{\"frontier_height\": 2,\n \"elements\": [oops]}";
  auto r = run("verify-construction --poset file:" + path);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;

  std::string inst = ::testing::TempDir() + "/bad_instance.json";
  auto j = json::parse(slurp(data("caps.json")));
  j["map"][1][2] = "q";
  std::ofstream(inst) << j.dump();
  auto f = run("finalg run " + inst);
  EXPECT_EQ(f.code, 2);
  EXPECT_NE(f.out.find("map[1][2]"), std::string::npos) << f.out;
}

TEST(Cli, FinalgCapLemmaOnInstanceFile) {
  auto r = run("finalg run " + data("caps.json") + " --suite cap-lemma --seed 7");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["checks"][0]["notes"]["discrepancies"], 0);
  EXPECT_EQ(j["config"]["seed"], 7);
  EXPECT_EQ(j["config"]["instance_hash"].get<std::string>().size(), 16u);
  EXPECT_EQ(run("finalg run " + data("caps.json") + " --suite content").code, 2);
}

TEST(Cli, ReportsAreDeterministic) {
  std::string a = ::testing::TempDir() + "/a.json", b = ::testing::TempDir() + "/b.json";
  ASSERT_EQ(run("verify-construction --height 2 --degree 4 --field Fp:3 --seed 5 --out " + a).code, 1);
  ASSERT_EQ(run("verify-construction --height 2 --degree 4 --field Fp:3 --seed 5 --out " + b).code, 1);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
  std::string args = std::string(CHAINRING_CLI) + " finalg battery --suite equivalence --count 12 --max-dim 4 --seed 3";
  auto t1 = shell("env CHAINRING_THREADS=1 " + args), t3 = shell("env CHAINRING_THREADS=3 " + args);
  EXPECT_EQ(t1.code, 0);
  EXPECT_EQ(t1.out, t3.out);
}

TEST(Cli, EnumerateStreamsVerdicts) {
  auto r = run("enumerate --family gf2 --max-dim 2");
  ASSERT_EQ(r.code, 0) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    EXPECT_TRUE(j["agree"].get<bool>());
    ++n;
  }
  EXPECT_GT(n, 0);
  auto q = run("enumerate --family random --field Q --count 3 --max-dim 4 --instances");
  ASSERT_EQ(q.code, 0) << q.out;
  EXPECT_NE(q.out.find("\"instance\""), std::string::npos);
}
