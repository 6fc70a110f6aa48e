// End-to-end tests of the command-line binary: the documented examples, the
// exit-code contract, format round-trips, and cache persistence.  The binary
// path comes from the build system via SL2CB_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

namespace {

using json = nlohmann::ordered_json;

struct RunResult {
  int status;
  std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SL2CB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

bool float_free(const json& v) {
  if (v.is_number_float()) return false;
  if (v.is_object() || v.is_array()) {
    for (const json& e : v) {
      if (!float_free(e)) return false;
    }
  }
  return true;
}

json parse_record(const std::string& text) {
  const json rec = json::parse(text);
  REQUIRE(rec.is_object());
  for (const char* key : {"command", "inputs", "outputs", "verdicts", "citations"}) {
    REQUIRE(rec.contains(key));
  }
  return rec;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char ch : text) lines += ch == '\n';
  return lines;
}

}  // namespace

TEST_CASE("documented rank example, pretty and json") {
  const RunResult pretty = run_cli("rank --level 3 --weights 1x15,3");
  CHECK(pretty.status == 0);
  CHECK(pretty.out.find("rank = 377") != std::string::npos);

  const RunResult js = run_cli("rank --level 3 --weights 1x15,3 --format json");
  CHECK(js.status == 0);
  const json rec = parse_record(js.out);
  CHECK(rec["command"] == "rank");
  CHECK(rec["outputs"]["rank"] == "377");
  CHECK(rec["inputs"]["level"] == 3);
  CHECK(rec["inputs"]["weights"].size() == 16);
}

TEST_CASE("documented intersection and class examples") {
  const RunResult inter = run_cli("intersect --level 2 --n 16 --fcurve 1,1,2,12 --format json");
  CHECK(inter.status == 0);
  const json irec = parse_record(inter.out);
  CHECK(irec["outputs"]["degree"] == "32");

  const RunResult cls = run_cli("class --level 1 --n 6 --format json");
  CHECK(cls.status == 0);
  const json crec = parse_record(cls.out);
  const json& coeffs = crec["outputs"]["coefficients"];
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0]["basis"] == "B_2");
  CHECK(coeffs[0]["coefficient"] == "2/5");
  CHECK(coeffs[1]["basis"] == "B_3");
  CHECK(coeffs[1]["coefficient"] == "1/5");
  CHECK(crec["verdicts"]["is_zero"] == false);
}

TEST_CASE("closed-form class agrees with the computed class") {
  for (const char* args : {"class --level 2 --n 10", "class --level 4 --n 12"}) {
    const RunResult computed = run_cli(std::string(args) + " --format json");
    const RunResult closed = run_cli(std::string(args) + " --closed-form --format json");
    REQUIRE(computed.status == 0);
    REQUIRE(closed.status == 0);
    CHECK(parse_record(computed.out)["outputs"]["coefficients"] ==
          parse_record(closed.out)["outputs"]["coefficients"]);
  }
}

TEST_CASE("json output is float-free and round-trips") {
  for (const char* args :
       {"rank --level 3 --weights 1x15,3", "logcan --level 2 --n 8",
        "nef-face --level 1 --n 8", "pullback h --genus 3 --a 1 --b 0,0",
        "fdiv-check --genus 8 --a 10 --b 1,1,1,1,1", "deg4 --level 3 --mu 3,3,1,1"}) {
    const RunResult r = run_cli(std::string(args) + " --format json");
    REQUIRE(r.status == 0);
    const json rec = parse_record(r.out);
    CHECK(float_free(rec));
    CHECK(json::parse(rec.dump()) == rec);
  }
}

TEST_CASE("exit codes separate usage, precondition, and verification failures") {
  CHECK(run_cli("rank --bogus").status == 2);
  CHECK(run_cli("rank --level 2").status == 2);
  CHECK(run_cli("rank --level 2 --weights 1,x3").status == 2);
  CHECK(run_cli("deg4 --level 2 --mu 1,2,3").status == 2);
  CHECK(run_cli("rank --level 3 --weights 1x15,3 --format yaml").status == 2);
  CHECK(run_cli("nosuchcommand").status == 2);

  const RunResult level0 = run_cli("rank --level 0 --weights 1,1");
  CHECK(level0.status == 3);
  CHECK(level0.out.find("ell >= 1") != std::string::npos);

  const RunResult mismatch = run_cli("intersect --level 1 --n 10 --fcurve 1,1,1,1");
  CHECK(mismatch.status == 3);
  CHECK(mismatch.out.find("requires n == a+b+c+d") != std::string::npos);

  const RunResult badmu = run_cli("deg4 --level 2 --mu 1,2,3,9");
  CHECK(badmu.status == 3);

  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("csv renders one row per table cell with a header") {
  const RunResult table = run_cli("rank-table --level 1 --max-j 3 --format csv");
  CHECK(table.status == 0);
  CHECK(table.out.rfind("j,t,rank\n", 0) == 0);
  CHECK(count_lines(table.out) == 9);  // header plus (3+1) values of j times 2 of t

  const RunResult cls = run_cli("class --level 1 --n 6 --format csv");
  CHECK(cls.status == 0);
  CHECK(cls.out == "basis,coefficient\nB_2,2/5\nB_3,1/5\n");

  // No table in the outputs: flat field,value rows for the whole record.
  const RunResult flat = run_cli("rank --level 1 --weights 1,1 --format csv");
  CHECK(flat.status == 0);
  CHECK(flat.out.rfind("field,value\n", 0) == 0);
  CHECK(flat.out.find("outputs.rank,1\n") != std::string::npos);
}

TEST_CASE("cache file persists the rank memo and is validated on load") {
  const std::string path = "/tmp/sl2cb_cli_cache_test.json";
  std::remove(path.c_str());

  const std::string args = "rank --level 3 --weights 1x15,3 --cache " + path;
  const RunResult first = run_cli(args);
  CHECK(first.status == 0);
  CHECK(first.out.find("377") != std::string::npos);

  std::FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string text;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, got);
  std::fclose(f);
  const json memo = json::parse(text);
  REQUIRE(memo.contains("entries"));
  CHECK(memo["entries"].size() > 0);
  for (const json& e : memo["entries"]) {
    CHECK(e.contains("level"));
    CHECK(e.contains("weights"));
    CHECK(e.contains("value"));
    CHECK(e["value"].is_string());
  }

  const RunResult second = run_cli(args);
  CHECK(second.status == 0);
  CHECK(second.out.find("377") != std::string::npos);

  std::FILE* bad = std::fopen(path.c_str(), "w");
  REQUIRE(bad != nullptr);
  std::fputs("not json", bad);
  std::fclose(bad);
  const RunResult corrupt = run_cli(args);
  CHECK(corrupt.status == 3);
  CHECK(corrupt.out.find("malformed") != std::string::npos);

  std::remove(path.c_str());
}

TEST_CASE("verify-paper reports every claim and exits zero on success") {
  const RunResult js = run_cli("verify-paper --max-n 8 --format json");
  REQUIRE(js.status == 0);
  const json rec = parse_record(js.out);
  CHECK(rec["verdicts"]["all_pass"] == true);
  const json& claims = rec["outputs"]["claims"];
  REQUIRE(claims.size() == 10);
  for (const json& claim : claims) {
    CHECK(claim["pass"] == true);
    CHECK(claim["citation"].is_string());
    CHECK_FALSE(claim["citation"].get<std::string>().empty());
  }
  CHECK(rec["citations"].size() == 10);
  CHECK(float_free(rec));

  const RunResult pretty = run_cli("verify-paper --max-n 8");
  CHECK(pretty.status == 0);
  int passes = 0;
  std::string::size_type at = 0;
  // Claim lines pad the verdict with two spaces; the summary line does not.
  while ((at = pretty.out.find(" PASS  ", at)) != std::string::npos) {
    ++passes;
    at += 1;
  }
  CHECK(passes == 10);
  CHECK(pretty.out.find("ALL CLAIMS PASS") != std::string::npos);

  CHECK(run_cli("verify-paper --max-n 7").status == 3);
}
