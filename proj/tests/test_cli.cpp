#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "polya/arith.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  const std::string cmd = std::string(POLYA_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json results_of(const RunResult& run) {
  const auto j = nlohmann::json::parse(run.output);
  CHECK(j.at("schema_version") == 1);
  return j.at("results");
}

}  // namespace

TEST_CASE("cli quadratic 33") {
  const auto run = run_cli("quadratic 33 --format json");
  REQUIRE(run.exit_code == 0);
  const auto r = results_of(run);
  CHECK(r.at("unit").at("x") == "23");
  CHECK(r.at("unit").at("y") == "4");
  CHECK(r.at("unit").at("norm") == 1);
  CHECK(r.at("a_class").at("repr") == "3");
  CHECK(r.at("hilbert_order") == "1");
  CHECK(r.at("sequence_order") == "1");
  CHECK(r.at("orders_agree") == true);
  CHECK(r.at("s") == 2);
}

TEST_CASE("cli quadratic 15 has order 2") {
  const auto run = run_cli("quadratic 15 --format json");
  REQUIRE(run.exit_code == 0);
  CHECK(results_of(run).at("hilbert_order") == "2");
}

TEST_CASE("cli format renderings carry the same numbers") {
  const auto json = run_cli("quadratic 33 --format json");
  const auto text = run_cli("quadratic 33 --format text");
  const auto csv = run_cli("quadratic 33 --format csv");
  REQUIRE(json.exit_code == 0);
  REQUIRE(text.exit_code == 0);
  REQUIRE(csv.exit_code == 0);
  CHECK(text.output.find("x: 23") != std::string::npos);
  CHECK(text.output.find("discriminant: 132") != std::string::npos);
  CHECK(csv.output.find("d,discriminant,s,ramified,") == 0);
  CHECK(csv.output.find("33,132,2,3;11,23,4,false,1,3,2,1,1,true") != std::string::npos);
}

TEST_CASE("cli exit codes: input and factoring errors") {
  CHECK(run_cli("quadratic 12").exit_code == 2);           // not squarefree
  CHECK(run_cli("quadratic 0").exit_code == 2);
  CHECK(run_cli("quadratic abc").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("quadratic 1000036000099").exit_code == 3);  // 1000003 * 1000033
  CHECK(run_cli("quadratic 33 --factors 33=3*7").exit_code == 2);
  CHECK(run_cli("quadratic 33 --factors 33=3*9").exit_code == 2);
  CHECK(run_cli("quadratic 33 --factors 33=3*11").exit_code == 0);
}

TEST_CASE("cli quadratic handles units beyond 64 bits exactly") {
  const auto run = run_cli("quadratic 271 --format json");
  REQUIRE(run.exit_code == 0);
  const auto unit = results_of(run).at("unit");
  const mpz_class x(unit.at("x").get<std::string>());
  const mpz_class y(unit.at("y").get<std::string>());
  CHECK(x > mpz_class("9223372036854775807"));  // exceeds int64
  CHECK(x * x - 271 * y * y == unit.at("norm").get<int>());
}

TEST_CASE("cli biquadratic") {
  const auto run = run_cli("biquadratic 33 105 --format json");
  REQUIRE(run.exit_code == 0);
  const auto r = results_of(run);
  CHECK(r.at("d3") == "385");
  CHECK(r.at("order") == "1");
  CHECK(r.at("rank") == 0);
  CHECK(r.at("h1_rank") == 4);
  CHECK(r.at("two_status") == "unramified");

  const auto withheld = run_cli("biquadratic 2 3 --format json");
  REQUIRE(withheld.exit_code == 0);
  CHECK(results_of(withheld).at("rank").is_null());
  CHECK(results_of(withheld).at("order") == "1");

  CHECK(run_cli("biquadratic 2 3 --require-rank").exit_code == 4);
  CHECK(run_cli("biquadratic 33 33").exit_code == 2);
  CHECK(run_cli("biquadratic 12 5").exit_code == 2);
}

TEST_CASE("cli lemma commands") {
  const auto a1 = run_cli("lemma-a1 3 11 --format json");
  REQUIRE(a1.exit_code == 0);
  CHECK(results_of(a1).at("pass") == true);
  CHECK(results_of(a1).at("actual").at("repr") == "3");

  const auto a2 = run_cli("lemma-a2 3 7 5 --format json");
  REQUIRE(a2.exit_code == 0);
  CHECK(results_of(a2).at("pass") == true);
  CHECK(results_of(a2).at("actual").at("repr") == "3*7");

  CHECK(run_cli("lemma-a1 3 5").exit_code == 2);
  CHECK(run_cli("lemma-a1 3").exit_code == 2);

  const auto corpus = run_cli("lemma-a1 --seed-corpus --bound 2000 --format json");
  REQUIRE(corpus.exit_code == 0);
  CHECK(results_of(corpus).at("failures") == 0);
  CHECK(results_of(corpus).at("count").get<int>() > 10);

  const auto csv = run_cli("lemma-a2 --seed-corpus --bound 2000 --format csv");
  REQUIRE(csv.exit_code == 0);
  CHECK(csv.output.find("p1,p2,p3,s12,s13,s23,a_class,pass") == 0);
}

TEST_CASE("cli verify-theorem") {
  const auto empty = run_cli("verify-theorem --bound 10 --format json");
  REQUIRE(empty.exit_code == 0);
  for (const auto& c : results_of(empty).at("cases")) CHECK(c.at("matched") == 0);

  const auto run = run_cli("verify-theorem --bound 60 --limit 1 --format json");
  REQUIRE(run.exit_code == 0);
  const auto r = results_of(run);
  CHECK(r.at("all_passed") == true);
  REQUIRE(r.at("cases").size() == 6);
  for (const auto& c : r.at("cases")) {
    CHECK(c.at("matched") == 1);
    CHECK(c.at("failures") == 0);
  }

  const auto filtered = run_cli("verify-theorem --bound 60 --limit 1 --case case3 --format json");
  REQUIRE(filtered.exit_code == 0);
  REQUIRE(results_of(filtered).at("cases").size() == 1);
  CHECK(results_of(filtered).at("cases")[0].at("case") == "case3");

  CHECK(run_cli("verify-theorem --bound 60 --case case9").exit_code == 2);
}

TEST_CASE("cli search") {
  const auto run = run_cli("search --preset case4 --bound 300 --limit 5 --verify --format json");
  REQUIRE(run.exit_code == 0);
  const auto r = results_of(run);
  CHECK(r.at("count").get<int>() <= 5);
  CHECK(r.at("count").get<int>() >= 1);
  for (const auto& t : r.at("tuples")) {
    CHECK(t.at("verdict") == "case4");
    CHECK(t.at("verification").at("passed") == true);
  }

  const auto empty = run_cli("search --preset case1 --bound 3 --format json");
  REQUIRE(empty.exit_code == 0);
  CHECK(results_of(empty).at("count") == 0);

  CHECK(run_cli("search --preset case1").exit_code == 2);           // missing bound
  CHECK(run_cli("search --bound 100").exit_code == 2);              // no source
  CHECK(run_cli("search --preset nope --bound 100").exit_code == 2);
}

TEST_CASE("cli search with a constraint file") {
  {
    std::ofstream f("/tmp/polya_pairs.json");
    f << R"({"slots":[{"name":"q1","mod4":3},{"name":"q2","mod4":3}],)"
      << R"("products":[{"slots":["q1","q2"],"mod":8,"residue":1}],"bound":40})";
  }
  const auto run = run_cli("search --file /tmp/polya_pairs.json --format json");
  REQUIRE(run.exit_code == 0);
  const auto tuples = results_of(run).at("tuples");
  REQUIRE(tuples.size() >= 2);
  CHECK(tuples[0].at("primes") == nlohmann::json({3, 11}));
  CHECK(tuples[1].at("primes") == nlohmann::json({3, 19}));

  {
    std::ofstream f("/tmp/polya_bad.json");
    f << "{ not json";
  }
  CHECK(run_cli("search --file /tmp/polya_bad.json").exit_code == 2);
  CHECK(run_cli("search --file /tmp/polya_missing.json").exit_code == 2);
}

TEST_CASE("cli search output is byte-identical across job counts") {
  const auto one = run_cli("search --preset case2 --bound 200 --jobs 1 --format json");
  const auto eight = run_cli("search --preset case2 --bound 200 --jobs 8 --format json");
  REQUIRE(one.exit_code == 0);
  REQUIRE(eight.exit_code == 0);
  CHECK(one.output == eight.output);
  CHECK(one.output.find("case2") != std::string::npos);
}
