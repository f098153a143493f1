#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jkron/cli.hpp"

using namespace jkron;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kJ2 = R"([{"eig":"0","size":2}])";
const std::string kJ3 = R"([{"eig":"0","size":3}])";

JordanStructure result(const Run& r, const char* key = "result") { return jordan_structure_from_json(r.json()[key]); }

JordanStructure single(const Rational& e, BlockSizes s) {
  JordanStructure js;
  js.add(e, s);
  return js;
}

std::vector<std::string> lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string l; std::getline(in, l);)
    out.push_back(l);
  return out;
}

} // namespace

TEST_CASE("predict in generic mode") {
  const Run r = run({"predict", "--p", "0,1;1,0", "--X", kJ2, "--Y", kJ2});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["schema"] == "jordan-kron/1");
  CHECK(j["mode"] == "generic");
  CHECK(result(r) == single(0, {3, 1}));
  CHECK(j["diagnostics"][0]["branch"] == "BothNonzero");
  CHECK_FALSE(j.contains("agreement"));
}

TEST_CASE("predict in frechet mode") {
  const Run r = run({"predict", "--mode", "frechet", "--f", "0,0,-6,0,1", "--X", R"([{"eig":"1","size":3}])",
                     "--Y", R"([{"eig":"1","size":2}])"});
  REQUIRE(r.code == kExitOk);
  CHECK(result(r) == single(-8, {2, 2, 1, 1}));
  const Json pair = r.json()["diagnostics"][0];
  CHECK(pair["d"] == 2);
  CHECK(pair["nullities"] == Json::parse("[0,4,6]"));
  CHECK(pair["ranks"].size() > 0);
}

TEST_CASE("constant polynomial predicts unit blocks") {
  const Run r = run({"predict", "--p", "5", "--X", kJ2, "--Y", kJ3});
  REQUIRE(r.code == kExitOk);
  CHECK(result(r) == single(5, BlockSizes(6, 1)));
}

TEST_CASE("degenerate pairs exit 2 with bounds") {
  const Run r = run({"predict", "--p", "0,0,1;0,1;1", "--W", kJ3});
  REQUIRE(r.code == kExitDegenerate);
  const Json deg = r.json()["degenerate"];
  CHECK(deg["localDegree"] == 2);
  CHECK(deg["countLower"] == 5);
  CHECK(deg["countUpper"] == 6);
  CHECK(deg["maxBlockSize"] == 3);
}

TEST_CASE("check agrees on the worked examples") {
  struct Case {
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {{"--p", "0,1;1", "--X", kJ2, "--Y", kJ2}},
      {{"--p", "0,1,-1;-2,1", "--X", R"([{"eig":0,"size":2},{"eig":1,"size":1}])", "--Y",
        R"([{"eig":2,"size":2},{"eig":3,"size":1}])"}},
      {{"--mode", "frechet", "--f", "0,0,-2,0,1", "--X", R"([{"eig":-1,"size":4}])", "--Y",
        R"([{"eig":1,"size":3}])"}},
      {{"--mode", "frechet", "--f", "0,0,-1,1", "--X", R"([{"eig":0,"size":4}])", "--Y",
        R"([{"eig":1,"size":3}])"}},
      {{"--mode", "frechet", "--f", "0,0,-6,0,1", "--X", R"([{"eig":1,"size":3}])", "--Y",
        R"([{"eig":1,"size":2}])"}},
      {{"--mode", "frechet", "--f", "0,0,0,0,0,1", "--W", R"([{"eig":0,"size":4}])"}},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args{"check"};
    args.insert(args.end(), c.args.begin(), c.args.end());
    const Run r = run(args);
    CHECK(r.code == kExitOk);
    CHECK(r.json()["agreement"] == true);
    CHECK(r.json()["mode"] == "check");
  }
}

TEST_CASE("check on a degenerate instance reports the oracle and the bounds") {
  const Run r = run({"check", "--p", "0,0,1;0,1;1", "--W", kJ3});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(result(r, "oracle") == single(0, {3, 2, 1, 1, 1, 1}));
  CHECK(j["agreement"] == true);
  REQUIRE(j["bounds"].size() == 1);
  CHECK(j["bounds"][0]["countLower"] == 5);
  CHECK(j["bounds"][0]["countUpper"] == 6);
  CHECK(j["bounds"][0]["observedCount"] == 6);
  CHECK(j["bounds"][0]["holds"] == true);
}

TEST_CASE("check respects the dimension cap") {
  const Run r = run({"check", "--p", "0,1;1", "--W", kJ3, "--cap", "8"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("cap") != std::string::npos);
}

TEST_CASE("minimized diff") {
  const Json d = cli::minimized_diff(single(0, {3, 1}), single(0, {2, 2}));
  CHECK(d["eig"] == "0");
  CHECK(d["predicted"] == Json::parse("[3,1]"));
  CHECK(d["oracle"] == Json::parse("[2,2]"));
  JordanStructure two = single(0, {1});
  two.add(1, {1});
  CHECK(cli::minimized_diff(single(0, {1}), two)["eig"] == "1");
  CHECK(cli::minimized_diff(two, two).is_null());
}

TEST_CASE("frechet subcommand") {
  const Run r = run({"frechet", "--f", "0,0,1", "--W", kJ2});
  REQUIRE(r.code == kExitOk);
  CHECK(result(r) == single(0, {3, 1}));
  CHECK(r.json()["mode"] == "frechet");
  const Run d = run({"frechet", "--f", "0,0,-2,0,1", "--X", R"([{"eig":-1,"size":4}])", "--Y",
                     R"([{"eig":1,"size":3}])"});
  const Json pair = d.json()["diagnostics"][0];
  CHECK(pair["k"] == 2);
  CHECK(pair["h"] == 2);
  CHECK(pair["s"] == Json::parse("[2,2]"));
  CHECK(pair["t"] == Json::parse("[2,1]"));
  CHECK(run({"frechet", "--p", "0,1;1", "--W", kJ2}).code == kExitInput);
}

TEST_CASE("oracle subcommand, literal kronecker matrix and dump") {
  const std::string path = "test_cli_dump.txt";
  const Run r = run({"oracle", "--p", "0,1;1", "--X", kJ2, "--Y", kJ2, "--raw-kron", "--dump", path});
  REQUIRE(r.code == kExitOk);
  CHECK(result(r) == single(0, {3, 1}));
  const auto rows = lines(path);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "0/1 1/1 1/1 0/1");
  std::remove(path.c_str());
}

TEST_CASE("bounds subcommand") {
  const Run a = run({"bounds", "4", "4", "4"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.json()["countLower"] == 12);
  CHECK(a.json()["countUpper"] == 16);
  CHECK(a.json()["maxBlockSize"] == 2);
  const Run b = run({"bounds", "3", "3", "2"});
  CHECK(b.json()["countLower"] == 5);
  CHECK(b.json()["maxBlockSize"] == 3);
  const Run c = run({"bounds", "2", "5", "1"});
  CHECK(c.json()["countUpper"] == 5);
  CHECK(run({"bounds", "2", "0", "1"}).code == kExitInput);
}

TEST_CASE("scan-ranks to stdout") {
  const Run r = run({"scan-ranks", "--m-max", "4", "--n-max", "8", "--d-max", "3", "--ell-max", "2"});
  REQUIRE(r.code == kExitOk);
  bool found = false;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    const Json j = Json::parse(line);
    if (j["m"] == 4 && j["n"] == 8 && j["d"] == 3 && j["ell"] == 2 && j["k"] == 9) {
      found = true;
      CHECK(j["deficiency"] == 1);
      CHECK(j["predicted"] == true);
    }
  }
  CHECK(found);
}

TEST_CASE("scan-ranks resumes from its progress file") {
  const std::string path = "test_cli_scan.jsonl";
  std::remove(path.c_str());
  std::remove((path + ".progress").c_str());
  const std::vector<std::string> args{"scan-ranks", "--m-max", "6", "--n-max", "6", "--d-max", "2",
                                      "--ell-max",  "1", "--out", path};
  const Run first = run(args);
  REQUIRE(first.code == kExitOk);
  const auto records = lines(path);
  const auto progress = lines(path + ".progress");
  CHECK(first.json()["recordsWritten"] == records.size());
  bool found = false;
  for (const auto& l : records) {
    const Json j = Json::parse(l);
    found = found || (j["m"] == 6 && j["n"] == 6 && j["k"] == 7 && j["predicted"] == false);
  }
  CHECK(found);

  const Run again = run(args);
  CHECK(again.json()["recordsWritten"] == 0);
  CHECK(again.json()["resumedSkipped"] == progress.size());
  CHECK(lines(path).size() == records.size());

  // interrupted run: drop the last half of the progress log
  {
    std::ofstream p(path + ".progress", std::ios::trunc);
    for (std::size_t i = 0; i < progress.size() / 2; ++i)
      p << progress[i] << '\n';
  }
  const Run resumed = run(args);
  CHECK(resumed.json()["recordsWritten"] == 0);
  CHECK(lines(path).size() == records.size());
  CHECK(lines(path + ".progress").size() == progress.size());
  std::remove(path.c_str());
  std::remove((path + ".progress").c_str());
}

TEST_CASE("reduce demo") {
  const Run r = run({"reduce", "--demo", "4", "3", "2", "--seed", "7"});
  REQUIRE(r.code == kExitOk);
  const Json j = r.json();
  CHECK(j["seed"] == 7);
  CHECK(j["residualZero"] == true);
  CHECK(j["similarityResidualZero"] == true);
  CHECK(j["Z"].size() == 12);
  CHECK(run({"reduce", "--demo", "4", "3", "2", "--seed", "7"}).out == r.out);
}

TEST_CASE("reduce rejects a singular leading block") {
  const Run r = run({"reduce", "--blocks", "[[0,0,1],[0,2,0],[-2,0,0]]"});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("A_1") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
  CHECK(run({"predict", "--p", "0,x", "--W", kJ2}).code == kExitInput);
  CHECK(run({"predict", "--p", "0,1", "--W", "[{]"}).code == kExitInput);
  CHECK(run({"predict", "--p", "0,1"}).code == kExitInput);
  CHECK(run({"predict", "--p", "0,1", "--W", kJ2, "--mode", "other"}).code == kExitInput);
  CHECK(run({"nonsense"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}
