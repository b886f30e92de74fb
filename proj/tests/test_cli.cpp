// End-to-end tests for the opercli binary: each case feeds a JSON payload
// through a subcommand and checks the emitted report and the process exit
// code.  The binary path is injected by the build as OPERCLI_PATH.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "operalg/json_io.hpp"

using namespace operalg;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Run `opercli <args>`, optionally piping `input` to stdin, and capture
// stdout.  stderr is left alone so failures stay visible in the test log.
RunResult run_cli(const std::string& args, const std::string& input = "") {
  std::string tmp_in;
  std::string cmd = std::string(OPERCLI_PATH) + " " + args;
  if (!input.empty()) {
    tmp_in = std::string("/tmp/opercli_test_in_") +
             std::to_string(::getpid()) + ".json";
    std::ofstream f(tmp_in);
    f << input;
    f.close();
    cmd += " < " + tmp_in;
  }
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = ::pclose(pipe);
  if (!tmp_in.empty()) std::remove(tmp_in.c_str());
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json laurent_json(const LaurentSeries& s) { return laurent_to_json(s); }

std::string connection_payload(const std::string& type,
                               const Json& components) {
  Json j;
  j["type"] = type;
  j["v"] = components;
  return j.dump();
}

}  // namespace

TEST_CASE("reduce maps a Cartan-valued connection to its canonical form") {
  // d/dt + f + u h with u = -1/t + t: the rank-one closed form says the
  // canonical coordinate is u^2 + u', here 2/t^2 - 1 + t^2.
  LaurentSeries u = LaurentSeries::from_window(
      -1, 6, {Rat(-1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  Json comps;
  comps["h[1]"] = laurent_json(u);
  RunResult r = run_cli("reduce --in -", connection_payload("A1", comps));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["type"] == "A1");
  REQUIRE(out["coords"].size() == 1);
  LaurentSeries v1 = laurent_from_json(out["coords"][0]);
  LaurentSeries expect = u * u + u.derivative();
  CHECK(agrees(v1, expect));
}

TEST_CASE("reduce returns canonical input unchanged") {
  CanonicalOper c;
  c.type = "A1";
  c.coords = {LaurentSeries::monomial(Rat(7, 3), -2)};
  RunResult r = run_cli("reduce --in -", canonical_to_json(c).dump());
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(laurent_from_json(out["coords"][0]).identical(c.coords[0]));
}

TEST_CASE("reduce honors the precision cap") {
  LaurentSeries u = LaurentSeries::from_window(
      -1, 6, {Rat(-1), Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  Json comps;
  comps["h[1]"] = laurent_json(u);
  RunResult r =
      run_cli("reduce --in - --precision 1", connection_payload("A1", comps));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  LaurentSeries v1 = laurent_from_json(out["coords"][0]);
  CHECK(v1.precision() == 1);
  CHECK(v1.coeff(-2) == Rat(2));
  CHECK(v1.coeff(0) == Rat(-1));
  CHECK_THROWS_AS(v1.coeff(1), PrecisionError);
}

TEST_CASE("classify finds the coweight and reports misses as null") {
  CanonicalOper c;
  c.type = "A1";
  c.coords = {LaurentSeries::monomial(Rat(2), -2)};
  RunResult hit = run_cli("classify --in - --bound 4",
                          canonical_to_json(c).dump());
  REQUIRE(hit.exit_code == 0);
  Json out = Json::parse(hit.out);
  CHECK(out["lambda"] == Json::array({2}));

  c.coords = {LaurentSeries::monomial(Rat(1), -2)};
  RunResult miss = run_cli("classify --in - --bound 6",
                           canonical_to_json(c).dump());
  REQUIRE(miss.exit_code == 0);
  CHECK(Json::parse(miss.out)["lambda"].is_null());
}

TEST_CASE("malformed input exits with code 2") {
  RunResult r = run_cli("reduce --in - 2>/dev/null", "{not json");
  CHECK(r.exit_code == 2);

  // Valid JSON, unknown type label.
  CanonicalOper c;
  c.type = "A1";
  c.coords = {LaurentSeries::monomial(Rat(1), -2)};
  Json j = canonical_to_json(c);
  j["type"] = "E8";
  RunResult r2 = run_cli("classify --in - 2>/dev/null", j.dump());
  CHECK(r2.exit_code == 2);

  // A lowering component in a connection payload.
  Json comps;
  comps["f[1]"] = laurent_json(LaurentSeries::constant(Rat(1)));
  RunResult r3 =
      run_cli("reduce --in - 2>/dev/null", connection_payload("A1", comps));
  CHECK(r3.exit_code == 2);
}

TEST_CASE("too-short windows exit with code 3") {
  // The window [-2,-1) pins the double pole but hides every decision
  // coefficient past it, so classification cannot resolve the residue.
  Json j;
  j["type"] = "A1";
  j["coords"] = Json::array({laurent_json(
      LaurentSeries::from_window(-2, -1, {Rat(2)}))});
  RunResult r = run_cli("classify --in - --bound 4 2>/dev/null", j.dump());
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify emits byte-identical reports for identical seeds") {
  const std::string args =
      "verify --type A1 --lambda-max 1 --order 12 --precision 12 --seed 99 "
      "2>/dev/null";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  Json rep = Json::parse(a.out);
  CHECK(rep["failed"] == 0);
  CHECK(rep["groups"].size() > 0);

  RunResult c = run_cli(
      "verify --type A1 --lambda-max 1 --order 12 --precision 12 --seed 100 "
      "2>/dev/null");
  REQUIRE(c.exit_code == 0);
  CHECK(c.out != a.out);  // the digest folds the seed in
}

TEST_CASE("verify restricted to one lambda passes quickly") {
  RunResult r = run_cli(
      "verify --type A1 --lambda 2 --lambda-max 2 --order 10 --precision 10 "
      "2>/dev/null");
  CHECK(r.exit_code == 0);
}
