#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recon/cli.hpp"
#include "recon/format.hpp"
#include "recon/fundamental.hpp"
#include "recon/weights.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace recon;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("weights at a point (known values)") {
  auto r = run({"weights", "--mm", "2", "--mp", "2", "--ks", "2", "--xi", "1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/10 3/5 3/10\n");
  CHECK(r.err.empty());
}

TEST_CASE("weights at a non-convex point prints a note and exits 0") {
  auto r = run({"weights", "--mm", "3", "--mp", "4", "--ks", "4", "--xi", "-1/2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-3/1750") != std::string::npos);
  CHECK(r.err.find("not convex") != std::string::npos);
}

TEST_CASE("weights at a pole exits 1") {
  auto r = run({"weights", "--mm", "1", "--mp", "1", "--ks", "1", "--xi", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("pole") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"weights", "--mm", "1"}).code == 2);
  CHECK(run({"weights", "--mm", "1", "--mp", "1", "--ks", "1", "--xi", "0.5"}).code == 2);
  CHECK(run({"alpha", "--mm", "1", "--mp", "1", "--ell", "7"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha") != std::string::npos);
}

TEST_CASE("alpha text and JSON round trip") {
  auto t = run({"alpha", "--mm", "1", "--mp", "1", "--ell", "0", "--kind", "recon"});
  CHECK(t.code == 0);
  CHECK(t.out == "13/12 - xi^2\n");

  auto j = run({"alpha", "--mm", "1", "--mp", "1", "--ell", "1", "--kind", "recon",
                "--format", "json"});
  CHECK(j.code == 0);
  Poly parsed = poly_from_json(nlohmann::json::parse(j.out));
  CHECK(parsed == alpha_recon(Stencil(1, 1), 1));

  auto i = run({"alpha", "--mm", "0", "--mp", "1", "--ell", "0", "--kind", "interp"});
  CHECK(i.out == "1 - xi\n");
}

TEST_CASE("weights JSON round trips through the documented schema") {
  auto r = run({"weights", "--mm", "2", "--mp", "1", "--ks", "2", "--format", "json"});
  CHECK(r.code == 0);
  auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    RationalFunction f = ratfun_from_json(row);
    CHECK(f == sigma(Subdivision(Stencil(2, 1), 2), row.at("k").get<int>()));
  }
}

TEST_CASE("weno table reproduces the classic values") {
  auto r = run({"table", "weno", "--max-m", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1/3 2/3") != std::string::npos);
  CHECK(r.out.find("1/10 3/5 3/10") != std::string::npos);
  CHECK(r.out.find("1/20 9/20 9/20 1/20") != std::string::npos);

  auto csv = run({"table", "weno", "--max-m", "4", "--format", "csv"});
  CHECK(csv.out.find("m,m_minus,m_plus,ks,weights") != std::string::npos);
}

TEST_CASE("alpha, error, and convexity tables") {
  auto a = run({"table", "alpha", "--mm", "1", "--mp", "1", "--format", "latex"});
  CHECK(a.code == 0);
  CHECK(a.out.find("\\tfrac{13}{12} - \\xi^{2}") != std::string::npos);

  auto e = run({"table", "errors", "--mm", "0", "--mp", "1", "--max-order", "2"});
  CHECK(e.code == 0);
  CHECK(e.out.find("n=2") != std::string::npos);

  auto c = run({"table", "convexity", "--max-m", "3", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.find("m,m_minus,m_plus,ks,lo,hi,length") != std::string::npos);
  CHECK(c.out.find("0.0773502691896") != std::string::npos);
}

TEST_CASE("roots output") {
  auto r = run({"roots", "--mm", "3", "--mp", "4", "--ell", "-3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("integer roots: 1") != std::string::npos);

  auto none = run({"roots", "--mm", "1", "--mp", "1", "--ell", "0", "--width", "1/1000"});
  CHECK(none.code == 0);
  CHECK(none.out.find("integer roots: none") != std::string::npos);

  auto j = run({"roots", "--mm", "1", "--mp", "1", "--ell", "0", "--format", "json"});
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("integer_roots").empty());
  CHECK(parsed.at("roots").size() == 2);
}

TEST_CASE("convexity output") {
  auto r = run({"convexity", "--mm", "1", "--mp", "1", "--ks", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.0773502691896") != std::string::npos);
  CHECK(r.out.find("1.07735026919") != std::string::npos);

  auto bad = run({"convexity", "--mm", "3", "--mp", "3", "--ks", "4"});
  CHECK(bad.code == 2); // not a positive subdivision: usage error
}

TEST_CASE("verify suite runs clean at small size") {
  auto r = run({"verify", "--suite", "identities", "--max-m", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);

  auto bad = run({"verify", "--suite", "bogus"});
  CHECK(bad.code == 2);
}

TEST_CASE("sigma cache persistence via RECON_CACHE_DIR") {
  std::string dir = "recon_cache_test_dir";
  std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
  setenv("RECON_CACHE_DIR", dir.c_str(), 1);
  auto first = run({"weights", "--mm", "1", "--mp", "2", "--ks", "2", "--xi", "1/2"});
  CHECK(first.code == 0);
  std::ifstream cache(dir + "/sigma_cache.json");
  CHECK(cache.good());
  auto second = run({"weights", "--mm", "1", "--mp", "2", "--ks", "2", "--xi", "1/2"});
  CHECK(second.out == first.out);
  unsetenv("RECON_CACHE_DIR");
  std::system(("rm -rf " + dir).c_str());
}
