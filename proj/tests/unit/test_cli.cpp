#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "fusionfact/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = fusionfact::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Unit, duality and reciprocity hold, but (x x) x != x (x x).
const char* kNonAssociative = R"({"labels": ["1", "x", "y"], "dual": [0, 1, 2], "tensor": [
  [0,0,0,1],[0,1,1,1],[0,2,2,1],[1,0,1,1],[2,0,2,1],
  [1,1,0,1],[1,1,2,1],[2,2,0,1],[2,2,1,1],
  [1,2,1,1],[1,2,2,1],[2,1,1,1],[2,1,2,1]]})";

}  // namespace

TEST_CASE("ring validate on a builtin") {
  const auto r = run({"ring", "validate", "--ring", "builtin:Ising"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["rank"] == 3);
  CHECK(j["command"] == "ring validate");
  CHECK(j["inputs_digest"].get<std::string>().size() == 16);
}

TEST_CASE("non-associative table exits 1 with a 4-index witness") {
  const auto r = run({"ring", "validate", "--ring", "-"}, kNonAssociative);
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["valid"] == false);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["code"] == "AssociativityViolation");
  CHECK(j["violations"][0]["witness"].size() == 4);
}

TEST_CASE("commands that need a valid ring reject it") {
  const auto r = run({"ring", "fpdim", "--ring", "-"}, kNonAssociative);
  CHECK(r.code == 1);
  CHECK(r.err.find("AssociativityViolation") != std::string::npos);
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"ring"}).code == 1);
  CHECK(run({"ring", "bogus"}).code == 1);
  CHECK(run({"ring", "fpdim"}).code == 1);
  CHECK(run({"ring", "fpdim", "--ring", "builtin:Nope"}).code == 1);
  CHECK(run({"ring", "fpdim", "--ring", "-"}, "{not json").code == 1);
  CHECK(run({"ring", "fpdim", "--ring", "/nonexistent/file.json"}).code == 1);
  CHECK(run({"cocycle", "cyclic", "3", "3"}).code == 1);
  CHECK(run({"ring", "factorize", "--ring", "builtin:Ising", "0,2", "all"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fpdim output") {
  const auto r = run({"ring", "fpdim", "--ring", "builtin:Ising"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["dims"][2] == "1.41421356237");
  CHECK(j["ring_dim"] == "4");
}

TEST_CASE("construct then validate round trip") {
  const auto made = run({"construct", "vec-ring", "S3"});
  REQUIRE(made.code == 0);
  const auto again = run({"ring", "validate", "--ring", "-"}, made.out);
  REQUIRE(again.code == 0);
  CHECK(json::parse(again.out)["ring"] == json::parse(made.out));

  const auto rep = run({"construct", "rep-ring", "--group", "S3"});
  REQUIRE(rep.code == 0);
  CHECK(json::parse(rep.out)["labels"].size() == 3);
}

TEST_CASE("factorize and exact factorizations") {
  auto r = run({"ring", "exact-factorizations", "--ring", "builtin:vecS3"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 8);

  // Subsets by index, by label, and by generators agree.
  const auto a = run({"ring", "factorize", "--ring", "builtin:vecS3", "0,2,5", "0,1"});
  const auto b = run({"ring", "factorize", "--ring", "builtin:vecS3", "gen:2", "gen:1"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  auto ja = json::parse(a.out)["report"], jb = json::parse(b.out)["report"];
  CHECK(ja["is_exact_dim"] == true);
  CHECK(ja["is_exact_unique"] == true);
  CHECK(ja["A"] == jb["A"]);
  CHECK(ja["C"] == jb["C"]);

  r = run({"ring", "factorize", "--ring", "builtin:vecC4", "0,2", "0,2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["report"]["is_exact_unique"] == false);
}

TEST_CASE("group and cocycle commands") {
  auto r = run({"group", "subgroups", "--group", "D4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["count"] == 10);

  r = run({"cocycle", "brute-classes", "--group", "C2", "3", "4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["classes"] == 2);

  const auto w = run({"cocycle", "cyclic", "2", "1"});
  REQUIRE(w.code == 0);
  r = run({"cocycle", "check", "--cochain", "-"}, w.out);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["is_cocycle"] == true);

  r = run({"cocycle", "trivialize", "--cochain", "cyclic3:1", "--group", "C2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["trivial"] == false);
}

TEST_CASE("pointed classify") {
  const auto r = run({"construct", "pointed-classify", "--group", "S3", "--omega", "zero", "--g1", "gen:(0 1 2)",
                      "--g2", "gen:(0 1)"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["positive"] == true);
  CHECK(j["failed_checks"].empty());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"ring", "exact-factorizations", "--ring", "builtin:repD4"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> args2{"construct", "gt-simples", "--group", "S4", "all", "--seed", "3"};
  CHECK(run(args2).out == run(args2).out);
}
