#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "kwj/algebras.hpp"
#include "kwj/ext.hpp"
#include "oracles.hpp"

using namespace kwj;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json j() const { return json::parse(out); }
};

std::string bin() {
  const char* b = std::getenv("KWJ_BIN");
  return b ? b : "kwj";
}

Run run(const std::string& args) {
  Run r;
  std::string cmd = bin() + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("kwj_cli_" + std::to_string(::getpid()) + "_" + name)).string();
}

}  // namespace

TEST_CASE("pbw exit code follows the numeric overlap oracle") {
  for (auto [family, n, r, x] : {std::tuple{"jackson", 3u, 1, 1L}, {"jackson", 6u, 2, 2L}, {"kummerwitt", 3u, 1, 1L},
                                 {"kummerwitt", 4u, 0, 1L}, {"kummerwitt", 4u, 2, 0L}, {"kummerwitt", 5u, 2, 1L}}) {
    Run res = run(std::string("pbw --family ") + family + " --n " + std::to_string(n) + " --r " + std::to_string(r) +
                  " --x " + std::to_string(x));
    auto sys = std::string(family) == "jackson" ? oracle::jackson(n, r, double(x)) : oracle::kummer_witt(n, r, double(x));
    int expect = oracle::coverlaps(sys) == 0 ? 0 : 1;
    CHECK(res.code == expect);
    json j = res.j();
    CHECK(j["schema"] == "kwj-report/1");
    CHECK(j["ok"] == (expect == 0));
  }
}

TEST_CASE("algebra build emits a presentation that round-trips") {
  Run res = run("algebra build --family jackson --n 6 --r 2 --x 'z + 1'");
  REQUIRE(res.code == 0);
  json p = res.j()["data"]["presentation"];
  Presentation q = presentation_from_json(p);
  CHECK(presentation_to_json(q) == p);
  CHECK(presentation_to_json(jackson(6, 2, zeta(6, 1) + CycElem(6, 1L))) == p);
}

TEST_CASE("usage and parse errors exit with 2") {
  Run bad = run("pbw --family jackson --n 3 --r 1 --x '1+'");
  CHECK(bad.code == 2);
  json j = bad.j();
  CHECK(j["details"]["position"] == 2);
  CHECK(j["details"]["literal"] == "1+");
  CHECK(j["details"]["flag"] == "--x");
  CHECK(run("frobnicate").code == 2);
  CHECK(run("fibre --family jackson --n 3 --r 1 --x 1").code == 2);
  CHECK(run("algebra build --family nosuch --n 3 --r 1 --x 1").code == 2);
  CHECK(run("ext --family jackson --alg-n 3 --r 1 --x 1").code == 2);
}

TEST_CASE("identical invocations give identical bytes") {
  for (std::string args : {"centre --n 4 --r 1 --x 1", "ext sweep --n 3 --r 1 --x 1", "homlie --kind infinitesimal --n 4 --q z --a 2 --probe 0,1,2 --field-order 7"}) {
    Run a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
  Run plain = run("centre --n 3 --r 1 --x 1"), pretty = run("--pretty centre --n 3 --r 1 --x 1");
  CHECK(plain.j() == pretty.j());
  CHECK(plain.out != pretty.out);
}

TEST_CASE("module output feeds ext") {
  Run m = run("module torsion --n 3 --r 1 --x 1 --d 3 --a 5");
  REQUIRE(m.code == 0);
  std::string path = temp_path("torsion.json");
  {
    std::ofstream f(path);
    f << m.out;
  }
  Run e = run("ext --family jackson --alg-n 3 --r 1 --x 1 --m " + path + " --n " + path);
  std::filesystem::remove(path);
  REQUIRE(e.code == 0);
  Presentation J = jackson(3, 1, CycElem(1, 1L));
  Representation T = torsion_module(3, 1, 3, CycElem(1, 1L), CycElem(3, 5L));
  CHECK(e.j()["data"]["dim"] == ext1(J, T, T).dim);
}

TEST_CASE("regression report") {
  Run res = run("report --paper-regression");
  json j = res.j();
  CHECK(j["schema"] == "kwj-report/1");
  std::size_t pass = 0, fail = 0, props = 0;
  for (const auto& c : j["checks"]) {
    std::string name = c["name"];
    if (c["status"] == "pass") ++pass;
    if (c["status"] == "fail") ++fail;
    if (name.rfind("property.", 0) == 0) {
      ++props;
      CHECK_MESSAGE(c["status"] == "pass", name);
    }
  }
  CHECK(props >= 5);
  CHECK(j["summary"]["pass"] == pass);
  CHECK(j["summary"]["fail"] == fail);
  CHECK(res.code == (fail == 0 ? 0 : 1));
}
