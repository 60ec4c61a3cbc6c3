#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gbei/cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<std::string> args) {
  std::vector<std::string> storage = {"gbei"};
  storage.insert(storage.end(), args);
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = gbei::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gbei_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze a complete graph") {
  const Result r = run({"analyze", "--graph6", "C~", "--m", "3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["verdict"] == "CohenMacaulay");
  CHECK(doc["unmixed"] == true);
  CHECK(doc["num_cutsets"] == 1);
  CHECK_FALSE(doc.contains("dual_empty"));
}

TEST_CASE("analyze the 4-cycle from an edge list and from distances") {
  const fs::path dir = scratch_dir("edges");
  {
    std::ofstream f(dir / "c4.txt");
    f << "4 4\n0 1\n1 2\n2 3\n3 0\n";
  }
  const Result a = run({"analyze", "--edges", (dir / "c4.txt").string(), "--m", "3"});
  REQUIRE(a.code == 0);
  const json da = json::parse(a.out);
  CHECK(da["unmixed"] == true);
  CHECK(da["verdict"] == "NotCohenMacaulay");
  CHECK(da["dual_empty"]["isolated"] == true);
  CHECK(da["dual_empty"]["gaps"].size() == 2);

  const Result b = run({"analyze", "--distances", "1", "--n", "4", "--m", "3"});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out) == da);
  fs::remove_all(dir);
}

TEST_CASE("analyze rejects a disconnected graph") {
  const Result r = run({"analyze", "--graph6", "C?", "--m", "3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("disconnected") != std::string::npos);
  CHECK(r.err.find("{0} {1} {2} {3}") != std::string::npos);
}

TEST_CASE("circulant text and json") {
  const Result t = run({"circulant", "--n", "8", "--r", "2", "--m", "5"});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("unmixed=true\n") != std::string::npos);
  CHECK(t.out.find("nonempty_cutsets=12\n") != std::string::npos);
  CHECK(t.out.find("verdict=NotCohenMacaulay\n") != std::string::npos);
  CHECK(t.out.find("closed_form_unmixed=true\n") != std::string::npos);

  const Result j = run({"circulant", "--n", "8", "--r", "2", "--m", "5", "--json"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["graph"] == "C_8(1,2)");
  CHECK(doc["nonempty_cutsets"] == 12);
  CHECK(doc["profile"]["unmixed"] == true);
  CHECK(doc["power_cycle"]["closed_form_unmixed"] == true);

  const Result d = run({"circulant", "--n", "8", "--distances", "1,3,4", "--m", "5", "--json"});
  REQUIRE(d.code == 0);
  const json dd = json::parse(d.out);
  CHECK(dd["profile"]["unmixed"] == true);
  CHECK_FALSE(dd.contains("power_cycle"));
}

TEST_CASE("classify to stdout and to files") {
  const Result csv = run({"classify", "--n", "4..6", "--m", "3..4", "--threads", "1"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "n,m,count\n4,3,3\n5,3,5\n6,3,8\n4,4,1\n5,4,3\n6,4,8\n");

  const fs::path dir = scratch_dir("classify");
  const std::string path = (dir / "t.json").string();
  const Result j = run({"classify", "--n", "4..5", "--out", path, "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(j.out == "wrote " + path + "\n");
  const json doc = json::parse(slurp(path));
  CHECK(doc["meta"]["source"] == "generator");
  CHECK(doc["counts"].size() == 16);

  const Result s = run({"classify", "--n", "4", "--out", path, "--json"});
  REQUIRE(s.code == 0);
  CHECK(json::parse(s.out)["out"] == path);

  const std::string cache = (dir / "cache").string();
  const Result c = run({"classify", "--n", "4..5", "--m", "3", "--cache-dir", cache, "--strict"});
  REQUIRE(c.code == 0);
  CHECK(fs::exists(dir / "cache" / "connected_5.g6"));
  CHECK(c.out == "n,m,count\n4,3,3\n5,3,5\n");
  fs::remove_all(dir);
}

TEST_CASE("gen output") {
  const Result g = run({"gen", "--n", "3"});
  REQUIRE(g.code == 0);
  CHECK(g.out.size() == 6);  // two lines of "Bx\n"

  const Result j = run({"gen", "--n", "2..4", "--json"});
  REQUIRE(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc["graph_totals"]["4"] == 6);
  CHECK(doc["graphs"]["4"].size() == 6);
}

TEST_CASE("usage and domain errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"analyze", "--graph6", "C~"}).code == 2);
  CHECK(run({"analyze", "--m", "3"}).code == 2);
  CHECK(run({"analyze", "--graph6", "C~", "--distances", "1", "--n", "4", "--m", "3"}).code == 2);
  CHECK(run({"classify", "--n", "4", "--format", "xml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  CHECK(run({"analyze", "--graph6", "C!", "--m", "3"}).code == 1);
  CHECK(run({"analyze", "--graph6", "C~", "--m", "1"}).code == 1);
  CHECK(run({"circulant", "--n", "8", "--r", "5", "--m", "3"}).code == 1);
  CHECK(run({"classify", "--n", "12"}).code == 1);
}

TEST_CASE("thread environment override") {
  const Result base = run({"classify", "--n", "5..6", "--m", "3..5", "--threads", "1"});
  ::setenv("GBEI_THREADS", "3", 1);
  const Result env = run({"classify", "--n", "5..6", "--m", "3..5", "--threads", "1"});
  ::setenv("GBEI_THREADS", "many", 1);
  const Result bad = run({"classify", "--n", "5", "--m", "3"});
  ::unsetenv("GBEI_THREADS");
  CHECK(base.code == 0);
  CHECK(env.code == 0);
  CHECK(env.out == base.out);
  CHECK(bad.code == 1);
}
