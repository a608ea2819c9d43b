#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_fixtures.hpp"

TEST_CASE("every fixture exits with its expected code") {
  for (const auto& row : cli::matrix()) {
    INFO(row.file);
    auto r = cli::run("report --input " + cli::fixture(row.file));
    CHECK(r.exit_code == row.exit_code);
    if (row.exit_code != 2) CHECK(r.out.find("result: ") != std::string::npos);
  }
}

TEST_CASE("subcommands select their stages") {
  auto r = cli::run("relations --input " + cli::fixture("example_w.yaml"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[relations] pass") != std::string::npos);
  CHECK(r.out.find("[coideal-check] pass") != std::string::npos);
  CHECK(r.out.find("[antipode]") == std::string::npos);

  auto a = cli::run("antipode --input " + cli::fixture("projection.yaml"));
  CHECK(a.exit_code == 1);
  CHECK(a.out.find("[antipode] fail") != std::string::npos);

  auto s = cli::run("report --stages closure --input " + cli::fixture("example_w.yaml"));
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("[closure] pass") != std::string::npos);
  CHECK(s.out.find("[relations]") == std::string::npos);
}

TEST_CASE("bounds given on the command line override the file and appear in the report") {
  auto r = cli::run("relations --max-degree 1 --truncation 4 --input " + cli::fixture("example_w.yaml"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bounds: N = 4, d = 1") != std::string::npos);
  CHECK(r.out.find("homogeneous degree 2") == std::string::npos);
}

TEST_CASE("--emit writes the YAML report") {
  const std::string path = std::string(TEST_OUTPUT_DIR) + "/emit_test.yaml";
  std::remove(path.c_str());
  auto r = cli::run("antipode --input " + cli::fixture("example_w.yaml") + " --emit " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("exit_code: 0") != std::string::npos);
  CHECK(text.str().find("-l(2,1)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("bad command lines exit 2") {
  CHECK(cli::run("report").exit_code == 2);
  CHECK(cli::run("").exit_code == 2);
  CHECK(cli::run("report --input " + cli::fixture("example_w.yaml") + " --max-degree 0").exit_code == 2);
  CHECK(cli::run("report --input " + cli::fixture("example_w.yaml") + " --stages relations,bogus").exit_code == 2);
  CHECK(cli::run("report --input /nonexistent.yaml").exit_code == 2);
}
