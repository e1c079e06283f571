#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pihall/cli.hpp"

namespace pihall {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun result;
  result.code = run_cli(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

TEST_CASE("invariants reports exact values as json") {
  const CliRun r = run({"invariants", "Semidirect(7,3)", "--pi", "3,7",
                        "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["group"] == "Semidirect(7,3)");
  CHECK(doc["order"] == "21");
  CHECK(doc["pi"] == "{3,7}");
  CHECK(doc["order_pi"] == "21");
  CHECK(doc["k"] == 5);
  CHECK(doc["k_pi"] == 5);
  CHECK(doc["d_pi"] == "5/21");
  CHECK(doc["pr"] == "5/21");
  CHECK(doc["p"] == 3);
  CHECK(doc["threshold_nilpotent"] == "1/3");
  CHECK(doc["d_pi_exceeds_nilpotent_threshold"] == false);
}

TEST_CASE("invariants defaults pi to every prime divisor") {
  const CliRun r = run({"invariants", "Sym(4)", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["pi"] == "{2,3}");
  CHECK(doc["k"] == 5);
  CHECK(doc["k_pi"] == 5);
  CHECK(doc["d_pi"] == "5/24");
}

TEST_CASE("invariants text output lists the same fields") {
  const CliRun r = run({"invariants", "Semidirect(7,3)", "--pi", "3,7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("d_pi: 5/21\n") != std::string::npos);
  CHECK(r.out.find("pr: 5/21\n") != std::string::npos);
  CHECK(r.out.find("threshold_nilpotent: 1/3\n") != std::string::npos);
}

TEST_CASE("hall reports the witness as json") {
  const CliRun r = run({"hall", "Extraspecial(3) x Cyclic(5)", "--pi", "3,5",
                        "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["nilpotent_hall"] == true);
  CHECK(doc["abelian_hall"] == false);
  REQUIRE_FALSE(doc["witness"].is_null());
  CHECK(doc["witness"]["order"] == "135");
  CHECK(doc["witness"]["derived_order"] == "3");
  CHECK(doc["witness"]["generators"].size() >= 2);
}

TEST_CASE("hall reports a failed search without a witness") {
  const CliRun r = run({"hall", "Semidirect(7,3)", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["nilpotent_hall"] == false);
  CHECK(doc["abelian_hall"] == false);
  CHECK(doc["witness"].is_null());
}

TEST_CASE("usage problems exit with code 1") {
  CHECK(run({"invariants"}).code == 1);
  CHECK(run({"invariants", "Sym(3)", "--file", "x.gens"}).code == 1);
  CHECK(run({"verify", "nosuch"}).code == 1);
  CHECK(run({"invariants", "Sym(3)", "--format", "xml"}).code == 1);
  CHECK(run({}).code == 1);

  const CliRun bad_pi = run({"invariants", "Sym(3)", "--pi", "2,9"});
  CHECK(bad_pi.code == 1);
  CHECK(bad_pi.err.find("9") != std::string::npos);
}

TEST_CASE("computation problems exit with code 2") {
  const CliRun parse = run({"invariants", "Sym(4"});
  CHECK(parse.code == 2);
  CHECK(parse.err.find("error:") != std::string::npos);

  CHECK(run({"invariants", "--file", "/nonexistent/file.gens"}).code == 2);
  CHECK(run({"invariants", "Sym(13)"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  const CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("invariants") != std::string::npos);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify emits a report and exits by outcome") {
  const CliRun r = run({"verify", "sharpness", "--format", "json"});
  REQUIRE(r.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["suite"] == "sharpness");
  CHECK(doc["summary"]["counterexamples"] == 0);
  CHECK(doc["summary"]["paper_value_mismatches"] == 2);
}

TEST_CASE("verify output is byte stable across runs") {
  const CliRun first = run({"verify", "sharpness", "--format", "json"});
  const CliRun second = run({"verify", "sharpness", "--format", "json"});
  REQUIRE(first.code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("catalogue lists the built-in groups") {
  const CliRun r = run({"catalogue"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Sym(3): order 6, degree 3") != std::string::npos);
  CHECK(r.out.find("SL2(13)") != std::string::npos);

  const CliRun json = run({"catalogue", "--format", "json"});
  REQUIRE(json.code == 0);
  const nlohmann::json doc = nlohmann::json::parse(json.out);
  CHECK(doc.is_array());
  CHECK(doc.size() >= 30);
}

TEST_CASE("the format environment variable sets only the default") {
  setenv("PIHALL_FORMAT", "json", 1);
  const CliRun from_env = run({"invariants", "Sym(3)"});
  const CliRun from_flag = run({"invariants", "Sym(3)", "--format", "text"});
  unsetenv("PIHALL_FORMAT");

  REQUIRE(from_env.code == 0);
  CHECK(nlohmann::json::parse(from_env.out)["group"] == "Sym(3)");
  REQUIRE(from_flag.code == 0);
  CHECK(from_flag.out.find("group: Sym(3)\n") == 0);
}

}  // namespace
}  // namespace pihall
