#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gradedproj/report.hpp"

using namespace gradedproj;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string corpus(const std::string& name) {
  return std::string(GRADEDPROJ_CORPUS_DIR) + "/" + name;
}

int run_corpus(const std::string& file, const std::string& command) {
  ProblemDescription doc = parse_problem(slurp(corpus(file)));
  return run_command(command, doc).exit_code;
}

}  // namespace

TEST_CASE("schema validation") {
  // Minimal document parses.
  ProblemDescription doc = parse_problem(R"({
    "ring": {"group": {"rank": 1}, "variables": [{"name": "x", "degree": [1]}]}
  })");
  CHECK(doc.ring->nvars() == 1);
  CHECK(doc.seed == 0);
  CHECK(doc.samples == 20);
  CHECK(doc.degree_bound == 12);

  // Inhomogeneous ideal generators are rejected with context.
  CHECK_THROWS_WITH_AS(parse_problem(R"({
    "ring": {"group": {"rank": 1},
             "variables": [{"name": "x", "degree": [1]}, {"name": "y", "degree": [2]}],
             "ideal": ["x + y"]}
  })"),
                       doctest::Contains("ring"), SchemaError);

  // Dangling family member names are rejected.
  CHECK_THROWS_WITH_AS(parse_problem(R"({
    "ring": {"group": {"rank": 1}, "variables": [{"name": "x", "degree": [1]}]},
    "family": ["missing"]
  })"),
                       doctest::Contains("missing"), SchemaError);

  // Wrong degree vector length names the variable.
  CHECK_THROWS_AS(parse_problem(R"({
    "ring": {"group": {"rank": 2}, "variables": [{"name": "x", "degree": [1]}]}
  })"),
                  SchemaError);

  // Malformed JSON is a syntax error.
  CHECK_THROWS_AS(parse_problem("{"), SchemaError);
}

TEST_CASE("exit code contract over the corpus") {
  CHECK(run_corpus("p1-relevance.json", "check-relevance") == 0);
  CHECK(run_corpus("z2-not-relevant.json", "check-relevance") == 1);
  CHECK(run_corpus("mod2-relevance.json", "check-relevance") == 0);
  CHECK(run_corpus("p1-potion-eq.json", "potion-eq") == 0);
  CHECK(run_corpus("cross-potion-eq.json", "potion-eq") == 0);
  CHECK(run_corpus("p1-magic2.json", "magic2") == 0);
  CHECK(run_corpus("p1-atlas.json", "atlas") == 0);
  CHECK(run_corpus("p1-twist.json", "twist") == 0);
  CHECK(run_corpus("p1-negligible.json", "negligible") == 0);
  CHECK(run_corpus("p1-free-not-negligible.json", "negligible") == 1);

  ProblemDescription doc = parse_problem(slurp(corpus("p1-relevance.json")));
  CHECK_THROWS_AS(run_command("twist", doc), SchemaError);      // missing block
  CHECK_THROWS_AS(run_command("no-such-cmd", doc), SchemaError);
}

TEST_CASE("machine reports are deterministic") {
  for (const std::string file :
       {"p1-relevance.json", "p1-magic2.json", "p1-atlas.json", "p1-negligible.json"}) {
    std::string command = file.find("relevance") != std::string::npos ? "check-relevance"
                          : file.find("magic2") != std::string::npos  ? "magic2"
                          : file.find("atlas") != std::string::npos   ? "atlas"
                                                                      : "negligible";
    std::string text = slurp(corpus(file));
    Report first = run_command(command, parse_problem(text));
    Report second = run_command(command, parse_problem(text));
    CHECK(first.machine.dump(2) == second.machine.dump(2));
    CHECK(first.exit_code == second.exit_code);
  }

  // The seed is recorded and changing it changes only what it should.
  std::string text = slurp(corpus("p1-magic2.json"));
  ProblemDescription doc = parse_problem(text);
  doc.seed = 42;
  Report r = run_command("magic2", doc);
  CHECK(r.machine.at("seed") == 42);
  CHECK(r.exit_code == 0);
}

TEST_CASE("atlas report content") {
  ProblemDescription doc = parse_problem(slurp(corpus("p1-atlas.json")));
  Report r = run_command("atlas", doc);
  CHECK(r.exit_code == 0);
  CHECK(r.machine.at("info").at("charts").size() == 2);
  CHECK(r.machine.at("info").at("overlaps").size() == 2);
  // The x-chart transition element is y/x.
  std::string transition =
      r.machine.at("info").at("overlaps").at(0).at("transition").at(0).get<std::string>();
  CHECK(transition.find("y") != std::string::npos);
  CHECK(transition.find("x") != std::string::npos);
  CHECK(r.human.find("PASS") != std::string::npos);
}
