#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int status = pclose(pipe);
  RunResult r;
  r.output = out;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("graded-betti: worked example text is exact") {
  const RunResult r = run_cli("graded-betti --gens 7,8,11,12,13 --lambda 19");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "0-dim faces: 7 8 11 12\n"
        "1-dim faces: {7,12} {8,11}\n"
        "rank: 2\n"
        "betti: 1\n");
}

TEST_CASE("graded-betti: machine format carries the same numbers") {
  const RunResult r =
      run_cli("graded-betti --gens 7,8,11,12,13 --lambda 19 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["meta"]["command"] == "graded-betti");
  CHECK(doc["meta"]["version"] == "1.0.0");
  const json& res = doc["result"];
  CHECK(res["lambda"] == 19);
  CHECK(res["in_semigroup"] == true);
  CHECK(res["zero_faces"] == json::array({7, 8, 11, 12}));
  CHECK(res["one_faces"] == json::array({{7, 12}, {8, 11}}));
  CHECK(res["rank"] == 2);
  CHECK(res["betti"] == 1);
}

TEST_CASE("graded-betti: family parameters and a window-interior degree") {
  const RunResult r = run_cli("graded-betti --e 10 --m 2 --n 6 --lambda 24");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "betti: 1\n"));
  // 22 has a one-monomial fiber when m = 2, so its Betti number vanishes.
  const RunResult low = run_cli("graded-betti --e 10 --m 2 --n 6 --lambda 22");
  CHECK(low.exit_code == 0);
  CHECK(contains(low.output, "betti: 0\n"));
}

TEST_CASE("graded-betti: degree below the multiplicity") {
  const RunResult r = run_cli("graded-betti --e 10 --m 2 --n 6 --lambda 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "0-dim faces:\n"
        "1-dim faces:\n"
        "rank: 0\n"
        "betti: 0\n");
}

TEST_CASE("graded-betti: parameter errors exit 2") {
  CHECK(run_cli("graded-betti --gens 7,8,11,12,13").exit_code == 2);  // no --lambda
  CHECK(run_cli("graded-betti --lambda 19").exit_code == 2);          // no semigroup
  CHECK(run_cli("graded-betti --gens 4,6 --lambda 10").exit_code == 2);
  CHECK(run_cli("graded-betti --e 10 --m 2 --lambda 22").exit_code == 2);
  CHECK(run_cli("graded-betti --gens 7,8,11,12,13 --lambda 19 --format csv").exit_code == 2);
  CHECK(run_cli("graded-betti --gens 7,8,11,12,13 --lambda 19 --format yaml").exit_code == 2);
}

TEST_CASE("betti1: family totals agree with the closed form") {
  const RunResult r = run_cli("betti1 --e 10 --m 2 --n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "window: 22:38 (established)\n"));
  CHECK(contains(r.output, "lambda 22: 0\n"));
  CHECK(contains(r.output, "lambda 24: 1\n"));
  CHECK(contains(r.output, "total: 27\n"));
  CHECK(contains(r.output, "mu: 27\n"));
  CHECK(contains(r.output, "verdict: AGREE\n"));
}

TEST_CASE("betti1: generator-list form detects the family") {
  const RunResult r = run_cli("betti1 --gens 7,8,11,12,13");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "total: 9\n"));
  CHECK(contains(r.output, "verdict: AGREE\n"));
}

TEST_CASE("betti1: csv is the per-degree table") {
  const RunResult r = run_cli("betti1 --e 10 --m 2 --n 6 --format csv");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string first;
  std::getline(lines, first);
  CHECK(first == "lambda,betti1");
  CHECK(contains(r.output, "22,0\n"));
  CHECK(contains(r.output, "24,1\n"));
}

TEST_CASE("betti1: json document matches the text numbers") {
  const RunResult r = run_cli("betti1 --e 10 --m 2 --n 6 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["result"]["total"] == 27);
  CHECK(doc["result"]["mu"] == 27);
  CHECK(doc["result"]["verdict"] == "AGREE");
  CHECK(doc["result"]["window"]["lo"] == 22);
  CHECK(doc["result"]["window"]["hi"] == 38);
  long long sum = 0;
  for (const auto& row : doc["result"]["table"]) sum += row["betti1"].get<long long>();
  CHECK(sum == 27);
}

TEST_CASE("betti1: a straggler degree outside the window makes it disagree") {
  const RunResult r = run_cli("betti1 --e 6 --m 2 --n 4");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "verdict: DISAGREE\n"));
  // Widening the window to include the straggler restores agreement... but a
  // caller-supplied window never carries the verdict guarantee; totals do.
  const RunResult wide = run_cli("betti1 --e 6 --m 2 --n 4 --window 14:24");
  CHECK(wide.exit_code == 0);
  CHECK(contains(wide.output, "total: 6\n"));
}

TEST_CASE("betti1: worker count does not change the bytes") {
  const RunResult a = run_cli("betti1 --e 11 --m 3 --n 6 --jobs 1");
  const RunResult b = run_cli("betti1 --e 11 --m 3 --n 6 --jobs 4");
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.output == b.output);
}

TEST_CASE("sweep: single-e run agrees everywhere") {
  const RunResult r = run_cli("sweep --e-range 5:5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "triples: 1\n"));
  CHECK(contains(r.output, "frobenius: 1/1 agree\n"));
  CHECK(contains(r.output, "verdict: AGREE\n"));
}

TEST_CASE("sweep: multiplicity six has known straggler mismatches") {
  const RunResult r = run_cli("sweep --e-range 6:6");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "verdict: DISAGREE\n"));
  CHECK(contains(r.output, "FAIL e=6 m=2 n=4: mu"));
}

TEST_CASE("sweep: parameter errors exit 2") {
  CHECK(run_cli("sweep").exit_code == 2);
  CHECK(run_cli("sweep --e-range 3:4").exit_code == 2);
  CHECK(run_cli("sweep --e-range 8:5").exit_code == 2);
  CHECK(run_cli("sweep --e-range 5:6 --format csv").exit_code == 2);
}

TEST_CASE("gens: emission with case id and count") {
  const RunResult r = run_cli("gens --e 10 --m 2 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "case: 5.6\n"));
  CHECK(contains(r.output, "count: 27\n"));
  CHECK(contains(r.output, "f2(0): X_0^3 - X_1 X_9\n"));
}

TEST_CASE("gens: the inhomogeneous cubic surfaces without repair") {
  const RunResult r = run_cli("gens --e 10 --m 2 --n 4");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "f13a"));
  CHECK(contains(r.output, "--repair"));
  const RunResult fixed = run_cli("gens --e 10 --m 2 --n 4 --repair");
  CHECK(fixed.exit_code == 0);
  CHECK(contains(fixed.output, "count: 28\n"));
  CHECK(contains(fixed.output, "f13a*"));
}

TEST_CASE("gens: small multiplicities are refused") {
  CHECK(run_cli("gens --e 9 --m 2 --n 4").exit_code == 2);
}

TEST_CASE("verify-gens: verified sets pass with a four-line verdict") {
  const RunResult r = run_cli("verify-gens --e 12 --m 4 --n 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "case 5.1\n"));
  CHECK(contains(r.output, "cardinality: PASS (43 of 43)\n"));
  CHECK(contains(r.output, "homogeneity: PASS\n"));
  CHECK(contains(r.output, "minimality_evidence:"));
  CHECK(contains(r.output, "verify_generates: PASS"));
  const RunResult q = run_cli("verify-gens --e 10 --m 2 --n 3");
  CHECK(q.exit_code == 0);
  CHECK(contains(q.output, "verify_generates: PASS"));
}

TEST_CASE("verify-gens: degenerate tail item is a verification failure") {
  const RunResult r = run_cli("verify-gens --e 10 --m 7 --n 8");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "f10"));
}

TEST_CASE("verify-gens: json document exposes the four checks") {
  const RunResult r = run_cli("verify-gens --e 10 --m 2 --n 3 --format json");
  REQUIRE(r.exit_code == 0);
  const json doc = json::parse(r.output);
  const json& res = doc["result"];
  CHECK(res["cardinality"]["pass"] == true);
  CHECK(res["cardinality"]["count"] == 27);
  CHECK(res["homogeneity"]["pass"] == true);
  CHECK(res["generates"]["pass"] == true);
  CHECK(res["verdict"] == "PASS");
}

TEST_CASE("info: facts and closed forms") {
  const RunResult r = run_cli("info --e 10 --m 2 --n 6");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "generators: 10 11 13 14 15 17 18 19\n"));
  CHECK(contains(r.output, "frobenius: 16\n"));
  CHECK(contains(r.output, "mu formula: 27\n"));
}

TEST_CASE("output goes to a file with --out") {
  const std::string path = "/tmp/sgb_test_out.txt";
  std::remove(path.c_str());
  const RunResult r = run_cli("betti1 --e 10 --m 2 --n 6 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(contains(buf.str(), "total: 27\n"));
  std::remove(path.c_str());
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").exit_code == 0);
}
