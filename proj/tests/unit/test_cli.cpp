#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(PLUMBCURVE_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const char* f) { return std::string(PLUMBCURVE_TEST_DATA) + "/" + f; }

nlohmann::json result(const std::string& args) {
  CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  return j["result"];
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, Invariant) {
  auto r = result("invariant " + data("ta.json"));
  EXPECT_EQ(r["components"][0]["word"], "(aabABABABAb)");
  EXPECT_EQ(r["class"]["type"], "alpha");
}

TEST(Cli, Rank) {
  auto r = result("rank " + data("tb.json"));
  EXPECT_EQ(r["generators"], 16);
  EXPECT_EQ(r["det"], "-16");
  EXPECT_EQ(r["lspace"], true);
  EXPECT_EQ(r["spinc"].size(), 16u);
}

TEST(Cli, DeltaSymAndMubar) {
  EXPECT_EQ(result("delta-sym " + data("t1.json"))["value"], "-1/2");
  EXPECT_EQ(result("delta-mubar " + data("ta.json"))["value"], -10);
  auto w = result("wu " + data("tb.json"));
  EXPECT_EQ(w["wu_type"], "(1,1,0,0)");
  EXPECT_EQ(w["sets"].size(), 2u);
}

TEST(Cli, Gradings) {
  auto r = result("gradings " + data("ta.json"));
  EXPECT_EQ(r["table"].size(), 4u);
  EXPECT_EQ(r["delta_d"]["value"], "1/2");
  EXPECT_EQ(r["delta_d"]["lspace"], false);
}

TEST(Cli, Reduce) {
  auto r = result("reduce " + data("t1.json"));
  EXPECT_EQ(r["reduced"], true);
  EXPECT_EQ(r["tree"]["root"], "a");
}

TEST(Cli, TextFormat) {
  CliRun r = run("--format text rank " + data("t1.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ok: true"), std::string::npos);
  EXPECT_NE(r.out.find("result.generators: 2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  CliRun bad = run("rank " + data("bad_endpoint.json"));
  EXPECT_EQ(bad.code, 2);
  auto j = nlohmann::json::parse(bad.out);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(j["error"]["code"], "unknown_endpoint");
  EXPECT_EQ(run("rank /nonexistent/tree.json").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("verify --count 0").code, 2);
  CliRun dom = run("delta-sym " + data("domain.json"));
  EXPECT_EQ(dom.code, 1) << dom.out;
  EXPECT_EQ(nlohmann::json::parse(dom.out)["ok"], false);
}

TEST(Cli, VerifyDeterministic) {
  CliRun a = run("verify --seed 3 --count 40 --max-vertices 8");
  CliRun b = run("verify --seed 3 --count 40 --max-vertices 8");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["result"]["summary"]["violations"], 0);
}

TEST(Cli, SvgByteStable) {
  const std::string d = testing::TempDir();
  EXPECT_EQ(run("svg " + data("t1.json") + " -o " + d + "/a.svg").code, 0);
  EXPECT_EQ(run("svg " + data("t1.json") + " -o " + d + "/b.svg").code, 0);
  EXPECT_EQ(slurp(d + "/a.svg"), slurp(d + "/b.svg"));
  EXPECT_EQ(slurp(d + "/a.svg"), slurp(data("t1.svg")));
  EXPECT_EQ(run("svg --word b --no-markers --no-shade -o " + d + "/c.svg").code, 0);
  EXPECT_EQ(run("svg " + data("ta.json") + " --mark-generators --periods 2 -o " + d + "/d.svg").code, 0);
  EXPECT_NE(slurp(d + "/d.svg").find("id=\"generators\""), std::string::npos);
}
