#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = hsaw::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bounds json is deterministic and carries the constants") {
  auto a = run({"bounds", "-d", "7", "-k", "3", "--format", "json"});
  auto b = run({"bounds", "-d", "7", "-k", "3", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["d"] == 7);
  CHECK(double(j["mu_p_upper_mixed"]["value"]) == doctest::Approx(4.9575).epsilon(1e-4));
  CHECK(double(j["mu_w_lower_eigen"]) == doctest::Approx(5.13912).epsilon(1e-4));
  CHECK(j["verdicts"]["mu_p_lt_mu_w"] == true);
  CHECK(j["verdicts"]["exponent_condition"] == false);
}

TEST_CASE("bounds for H(3,8) reports the degree-3 bound") {
  auto r = run({"bounds", "-d", "3", "-k", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["mu_p_upper_deg3"]) == doctest::Approx(1.75477).epsilon(1e-4));
}

TEST_CASE("non-hyperbolic parameters exit 2 with a message naming the flags") {
  auto r = run({"bounds", "-d", "3", "-k", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("-d/-k") != std::string::npos);
  CHECK(r.err.find("not hyperbolic") != std::string::npos);
}

TEST_CASE("missing required flags exit 2") {
  auto r = run({"enumerate", "-d", "7", "-k", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("enumerate walks") {
  auto r = run({"enumerate", "-d", "7", "-k", "3", "-n", "6", "--kind", "walks",
                "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n,c_n\n") == 0);
  CHECK(r.out.find("1,7\n") != std::string::npos);
  CHECK(r.out.find("2,42\n") != std::string::npos);
}

TEST_CASE("enumerate polygons on H(3,7)") {
  auto r = run({"enumerate", "-d", "3", "-k", "7", "-n", "10", "--kind",
                "polygons", "--format", "csv"});
  REQUIRE(r.code == 0);
  for (int n = 3; n <= 6; ++n)
    CHECK(r.out.find(std::to_string(n) + ",0\n") != std::string::npos);
  CHECK(r.out.find("7,3\n") != std::string::npos);
}

TEST_CASE("enumerate beyond the vertex budget exits 4") {
  auto r = run({"enumerate", "-d", "7", "-k", "3", "-n", "40"});
  CHECK(r.code == 4);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("worker flag leaves output unchanged") {
  auto one = run({"enumerate", "-d", "4", "-k", "5", "-n", "7", "--format",
                  "csv", "--workers", "1"});
  auto four = run({"enumerate", "-d", "4", "-k", "5", "-n", "7", "--format",
                   "csv", "--workers", "4"});
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("geometry run is clean on H(7,3)") {
  auto r = run({"geometry", "-d", "7", "-k", "3", "-n", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["edges_enum_residual_failures"] == 0);
  for (const auto& row : j["per_length"]) CHECK(int(row["min_margin"]) >= 0);
}

TEST_CASE("displacement of a single step") {
  auto r = run({"displacement", "-d", "7", "-k", "3", "-n", "1", "--epsilon",
                "0.5", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(double(j["prob_displacement_ge_eps_n"]) == doctest::Approx(1.0));
}

TEST_CASE("eigen subcommand prints all four systems") {
  auto r = run({"eigen", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("h73") != std::string::npos);
  CHECK(r.out.find("h38") != std::string::npos);
  auto param = run({"eigen", "--system", "param", "--param-d", "9",
                    "--format", "csv"});
  REQUIRE(param.code == 0);
  CHECK(param.out.find("param(9)") != std::string::npos);
}

TEST_CASE("asymptotics range errors exit 2, success exits 0") {
  auto bad = run({"asymptotics", "--d-range", "3:10"});
  CHECK(bad.code == 2);
  auto good = run({"asymptotics", "--d-range", "7:100", "--format", "csv"});
  REQUIRE(good.code == 0);
  CHECK(good.out.find("false") == std::string::npos);
}

TEST_CASE("dump-map of the radius-1 ball") {
  auto r = run({"dump-map", "-d", "7", "-k", "3", "--radius", "1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["d"] == 7);
  CHECK(j["k"] == 3);
  CHECK(j["radius"] == 1);
  CHECK(j["vertices"].size() == 8);
  CHECK(j["faces"].size() == 7);
  for (const auto& f : j["faces"]) CHECK(f.size() == 3);
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bounds") != std::string::npos);
}
