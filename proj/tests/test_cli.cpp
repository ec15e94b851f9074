#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "skeinlab/cli.hpp"
#include "skeinlab/poly_json.hpp"

using namespace skeinlab;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("reduce prints the canonical form") {
  const Run r = run({"reduce", "--rank", "2", "a b^-1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t1*t2 - t[1,2]\n");
  const Run d = run({"reduce", "--rank", "3", "--mode", "dyadic", "a c b"});
  CHECK(d.out == "-t1*t2*t3 + t1*t[2,3] + t2*t[1,3] + t3*t[1,2] - t[1,2,3]\n");
  CHECK(run({"reduce", "a^2"}).out == "t1^2 - 2\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"reduce", "--rank", "0", "a"}).code == kExitUsage);
  CHECK(run({"reduce", "--rank", "1", "b"}).code == kExitUsage);
  CHECK(run({"reduce", "--mode", "rational", "a"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"abelian", "--rank", "2", "--vector", "1,-1,2"}).code == kExitUsage);
  CHECK(run({"harvest", "--group", "abelian:2", "--degree", "3", "--samples", "5"}).code == kExitUsage);
  CHECK(run({"two-bridge", "--epsilons", "1,2"}).code == kExitUsage);
  CHECK(run({"fuzz", "--count", "0"}).code == kExitUsage);
  CHECK(run({"tangent", "--from", "/nonexistent/basis.json"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("two-bridge") != std::string::npos);
}

TEST_CASE("json output parses back") {
  const Run r = run({"reduce", "--rank", "2", "--json", "a b^-1"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pretty"] == "t1*t2 - t[1,2]");
  CHECK(to_string(trace_poly_from_json(j["poly"])) == "t1*t2 - t[1,2]");

  const Run m = run({"multiply", "--rank", "2", "--mode", "dyadic", "--json", "a", "b"});
  CHECK(nlohmann::json::parse(m.out)["pretty"] == "t1*t2");
  const Run a = run({"abelian", "--rank", "2", "--vector", "1,-1", "--json"});
  CHECK(nlohmann::json::parse(a.out)["pretty"] == "u1*u2 - v[1,2]");
  CHECK(run({"abelian", "--rank", "2", "--vector", "1,-1"}).out == "u1*u2 - v[1,2]\n");
}

TEST_CASE("two-bridge") {
  const Run r = run({"two-bridge", "--knot", "trefoil"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["Phi_pretty"] == "t[1,2] - 1");
  CHECK(j["square_free"] == true);
  CHECK(j["phi_at_22"] == "1");
  const Run e = run({"two-bridge", "--epsilons", "+1,-1", "--json"});
  CHECK(nlohmann::json::parse(e.out)["word"] == "a b^-1 a^-1 b");
  CHECK(run({"two-bridge", "--knot", "fig8", "--epsilons", "1"}).code == kExitUsage);
}

TEST_CASE("harvest then tangent through a file") {
  const std::string path = "test_cli_basis.json";
  const Run h = run({"harvest", "--group", "abelian:2", "--degree", "3", "--samples", "auto",
                     "--seed", "11", "--out", path});
  REQUIRE(h.code == kExitOk);
  CHECK(nlohmann::json::parse(h.out)["relations_pretty"][0] == "u1*u2*v[1,2] - u1^2 - u2^2 - v[1,2]^2 + 4");
  const Run t = run({"tangent", "--from", path});
  REQUIRE(t.code == kExitOk);
  const auto j = nlohmann::json::parse(t.out);
  CHECK(j["tangent_dim"] == 3);
  CHECK(j["ambient_dim"] == 3);

  // A relation that does not hold is rejected on re-verification.
  auto basis = nlohmann::json::parse(h.out);
  basis["relations"][0]["terms"][0]["coeff"] = "2";
  std::ofstream(path) << basis.dump();
  CHECK(run({"tangent", "--from", path}).code == kExitCheckFailed);
  std::remove(path.c_str());
}

TEST_CASE("fuzz") {
  const Run f = run({"fuzz", "--count", "40", "--max-rank", "3", "--max-len", "8", "--seed", "7", "--json"});
  CHECK(f.code == kExitOk);
  const auto j = nlohmann::json::parse(f.out);
  CHECK(j["passed"] == true);
  CHECK(j["seed"] == 7);
  CHECK(j["count"] == 40);
}

TEST_CASE("output is byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"fuzz", "--count", "30", "--seed", "3", "--mode", "dyadic"},
        std::vector<std::string>{"harvest", "--group", "free:2", "--degree", "3", "--seed", "5"},
        std::vector<std::string>{"selftest", "--quick", "--criterion", "5"}})
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("selftest --quick passes") {
  const Run r = run({"selftest", "--quick"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (line.rfind("criterion ", 0) == 0) {
      ++count;
      CHECK(line.find("PASS") != std::string::npos);
    }
  CHECK(count == 10);
}
