#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = aalpha::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pipeline: generate | central | spectrum") {
  const auto g = run({"generate", "petersen"});
  REQUIRE(g.code == 0);
  const auto c = run({"central", "-"}, g.out);
  REQUIRE(c.code == 0);
  const auto s = run({"spectrum", "-", "--alpha", "0.5", "--json"}, c.out);
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  const auto values = j["values"].get<std::vector<double>>();
  CHECK(values.size() == 25);
  CHECK(std::accumulate(values.begin(), values.end(), 0.0) == doctest::Approx(60.0).epsilon(1e-9));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"spectrum", "petersen", "--alpha", "0.5", "--bogus"}).code == 1);
  CHECK(run({"spectrum", "petersen"}).code == 1);
  CHECK(run({"charpoly", "petersen", "--alpha", "0", "--exact", "1/2"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("input and precondition errors") {
  const auto missing = run({"spectrum", "missing.txt", "--alpha", "0.5"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("not found") != std::string::npos);
  const auto bad = run({"spectrum", "-", "--alpha", "0.5"}, "2\n0 2\n");
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"spectrum", "petersen", "--alpha", "2"}).code == 2);
  CHECK(run({"energy", "petersen", "--alpha", "1"}).code == 2);
  const auto pre = run({"closed-spectrum", "central", "complete:2", "--alpha", "0.5"});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("precondition") != std::string::npos);
  CHECK(run({"cospectral", "complete:4", "cycle:4", "path:3"}).code == 2);
}

TEST_CASE("file input and output") {
  const auto dir = std::filesystem::temp_directory_path() / "aalpha_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "k23.txt").string();
  REQUIRE(run({"generate", "complete_bipartite", "2", "3", "--out", path}).code == 0);
  const auto e = run({"energy", path, "--alpha", "0"});
  REQUIRE(e.code == 0);
  CHECK(std::stod(e.out) == doctest::Approx(2 * std::sqrt(6.0)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("charpoly") {
  const auto exact = run({"charpoly", "complete:2", "--exact", "1/2", "--json"});
  REQUIRE(exact.code == 0);
  // A_1/2(K_2) = J/2: x^2 - x
  const auto j = nlohmann::json::parse(exact.out);
  CHECK(j["coeffs"] == nlohmann::json({"0", "-1", "1"}));
  const auto num = run({"charpoly", "complete:3", "--alpha", "0"});
  CHECK(num.code == 0);
}

TEST_CASE("closed-spectrum") {
  const auto reg = run({"closed-spectrum", "cvjoin", "petersen", "cycle:5", "--alpha", "0.5", "--json"});
  REQUIRE(reg.code == 0);
  const auto j = nlohmann::json::parse(reg.out);
  CHECK(j["spectrum"]["values"].size() == 30);
  const auto auto_kpq = run({"closed-spectrum", "cvjoin", "cycle:4", "complete_bipartite:2,3", "--alpha", "1/4"});
  const auto flag_kpq = run({"closed-spectrum", "cvjoin", "cycle:4", "--kpq", "2,3", "--alpha", "1/4"});
  CHECK(auto_kpq.code == 0);
  CHECK(auto_kpq.out == flag_kpq.out);
  CHECK(run({"closed-spectrum", "central", "petersen", "--alpha", "0.25"}).code == 0);
  CHECK(run({"closed-spectrum", "cvjoin", "petersen", "path:4", "--alpha", "0.25"}).code == 2);
}

TEST_CASE("verify and cospectral") {
  const auto v = run({"verify", "--grid", "0,0.25,0.5,0.75,1", "--threads", "2"});
  CHECK(v.code == 0);
  CHECK(v.out.find("summary: 145 passed, 0 failed") != std::string::npos);
  const auto c = run({"cospectral", "shrikhande", "rook4x4", "complete_bipartite:2,3", "--json"});
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["summary"]["failed"] == 0);
}
