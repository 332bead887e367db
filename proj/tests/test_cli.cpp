#include "doctest.h"

#include "io/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using curvelattice::Json;
using curvelattice::K3Model;
using curvelattice::model_to_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("CURVELATTICE_BIN");
  REQUIRE_MESSAGE(bin != nullptr,
                  "CURVELATTICE_BIN must point at the CLI binary");
  std::string cmd = std::string("\"") + bin + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  RunResult r;
  r.out = out;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

Json parse_report(const RunResult& r) {
  CAPTURE(r.out);
  REQUIRE(r.exit_code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: classify quartic json reports") {
  RunResult rr =
      run_cli("classify quartic --model q1 --class 8,6 --stable");
  Json j = parse_report(rr);
  CHECK(j["command"] == "classify quartic");
  CHECK(j["model"] == "q1");
  CHECK(j["inputs"]["class"] == Json::array({8, 6}));
  CHECK(j["result"]["kind"] == "NonReducedComponent");
  CHECK(j["result"]["d"] == 26);
  CHECK(j["result"]["g"] == 81);
  CHECK(j["result"]["h1_ideal_4"] == 1);
  CHECK(j["result"]["dim_w"] == 114);
  CHECK(j["result"]["tangent_dim"] == 115);
  CHECK_FALSE(j.contains("wall_time_ms"));

  // without --stable the wall time is reported
  Json timed = parse_report(run_cli("classify quartic --model q1 "
                                    "--class 8,6"));
  CHECK(timed.contains("wall_time_ms"));

  // not-applicable verdicts carry a reason and omit the dimensions
  Json na = parse_report(run_cli("classify quartic --model q1 "
                                 "--class 3,3 --stable"));
  CHECK(na["result"]["kind"] == "NotApplicable");
  CHECK(na["result"]["reason"] == "complete-intersection");
  CHECK_FALSE(na["result"].contains("dim_w"));
  CHECK_FALSE(na["result"].contains("tangent_dim"));

  Json gs = parse_report(run_cli("classify quartic --model q2 "
                                 "--class 6,5 --stable"));
  CHECK(gs["result"]["kind"] == "GenericallySmoothComponent");
  CHECK(gs["result"]["dim_w"] == 93);
  CHECK(gs["result"]["tangent_dim"] == 93);

  Json enr = parse_report(run_cli("classify quartic --model q2 "
                                  "--class 7,5 --stable"));
  CHECK(enr["result"]["kind"] == "ExpectedNonReduced");
  CHECK(enr["result"].contains("clifford_line_bound"));
}

TEST_CASE("cli: classify quartic csv") {
  const std::string header =
      "a,b,d,g,h1_I4,kind,dim_w,tangent_dim,criteria\n";
  RunResult rr = run_cli(
      "classify quartic --model q1 --class 8,6 --stable --format csv");
  CHECK(rr.exit_code == 0);
  CHECK(rr.out ==
        header +
            "8,6,26,81,1,NonReducedComponent,114,115,"
            "h1-ideal-quartic-nonzero;genus-above-crossover;"
            "component-dim-g+33\n");

  // a verdict without dimensions renders empty cells, not a crash
  RunResult na = run_cli(
      "classify quartic --model q1 --class 3,3 --stable --format csv");
  CHECK(na.exit_code == 0);
  CHECK(na.out == header + "3,3,12,19,0,NotApplicable,,,\n");
}

TEST_CASE("cli: classify quartic on a custom model file") {
  Json doc = model_to_json(K3Model::q2());
  doc["name"] = "mirror";
  auto path = std::filesystem::temp_directory_path() /
              "curvelattice_cli_model.json";
  {
    std::ofstream f(path);
    f << doc.dump();
  }
  Json j = parse_report(run_cli("classify quartic --model " + path.string() +
                                " --class 6,5 --stable"));
  CHECK(j["model"] == "mirror");
  CHECK(j["result"]["kind"] == "GenericallySmoothComponent");

  RunResult bad =
      run_cli("classify quartic --model /nonexistent/m.json --class 1,1");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error [invalid_input]") != std::string::npos);

  RunResult short_class =
      run_cli("classify quartic --model q1 --class 1,2,3");
  CHECK(short_class.exit_code == 2);
  CHECK(short_class.out.find("error [invalid_input]") != std::string::npos);
}

TEST_CASE("cli: classify cubic") {
  Json j = parse_report(
      run_cli("classify cubic --tuple 12,4,4,4,4,4,2 --stable"));
  CHECK(j["command"] == "classify cubic");
  CHECK_FALSE(j.contains("model"));
  CHECK(j["inputs"]["tuple"] == Json::array({12, 4, 4, 4, 4, 4, 2}));
  CHECK(j["result"]["kind"] == "Undetermined");
  CHECK(j["result"]["d"] == 14);
  CHECK(j["result"]["g"] == 24);
  CHECK(j["result"]["dim_w"] == 56);
  CHECK(j["result"]["tangent_dim"] == 57);
  CHECK(j["result"]["h1_I3"] == 1);
  CHECK(j["result"]["h1_I1_zero"] == true);
  CHECK(j["result"]["conjecture_range"] == true);
  bool saw_guard = false;
  for (const auto& gtext : j["result"]["failed_guards"]) {
    if (gtext == "m6=2 branch: requires d >= 21 (d = 14)") saw_guard = true;
  }
  CHECK(saw_guard);

  Json nr = parse_report(
      run_cli("classify cubic --tuple 15,5,4,4,4,4,2 --stable"));
  CHECK(nr["result"]["kind"] == "NonReducedComponent");
  CHECK(nr["result"]["criteria"] == Json::array({"m6-2-m5-ge-4-d-ge-21"}));

  Json exc = parse_report(
      run_cli("classify cubic --tuple 11,5,3,3,3,3,3 --stable"));
  CHECK(exc["result"]["kind"] == "Undetermined");
  CHECK(exc["result"]["h1_I3"] == "unknown");
  CHECK(exc["result"]["criteria"] ==
        Json::array({"exceptional-projection-tuple"}));

  // the plane-model inequalities are enforced
  RunResult bad = run_cli("classify cubic --tuple 3,2,2,2,0,0,0");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error [invalid_input]") != std::string::npos);
}

TEST_CASE("cli: enumerate bands") {
  Json j = parse_report(
      run_cli("enumerate --model q1 --bmax 10 --check --stable"));
  CHECK(j["command"] == "enumerate");
  CHECK(j["result"]["region"] == "families");
  CHECK(j["result"]["count"] == 6);
  REQUIRE(j["result"]["rows"].size() == 6);
  CHECK(j["result"]["rows"][0]["a"] == 8);
  CHECK(j["result"]["rows"][0]["b"] == 6);
  CHECK(j["result"]["rows"][0]["kind"] == "NonReducedComponent");
  CHECK(j["checks"]["catalogue_match"] == true);
  CHECK(j["checks"]["missing"] == Json::array());
  CHECK(j["checks"]["extra"] == Json::array());

  Json q2 = parse_report(run_cli("enumerate --model q2 --bmax 5 --stable"));
  CHECK(q2["result"]["region"] == "nonvanishing");
  CHECK(q2["result"]["count"] == 8);
  REQUIRE(q2["result"]["rows"].size() == 8);
  CHECK(q2["result"]["rows"][0]["a"] == 6);
  CHECK(q2["result"]["rows"][0]["b"] == 3);
  CHECK(q2["result"]["rows"][0]["h1_I4"] == 11);
  CHECK(q2["result"]["rows"][0]["kind"] == "ExpectedNonReduced");

  // empty band renders as a bare CSV header
  RunResult csv =
      run_cli("enumerate --model q1 --bmax 0 --stable --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "a,b,d,g,h1_I4,kind,dim_w,tangent_dim,criteria\n");

  // region/model mismatch is a usage-level input error
  RunResult mix = run_cli("enumerate --model q1 --region nonvanishing "
                          "--bmax 5");
  CHECK(mix.exit_code == 2);
  CHECK(mix.out.find("error [invalid_input]") != std::string::npos);
}

TEST_CASE("cli: enumerate is deterministic under parallel scan") {
  std::string cmd = "enumerate --model q1 --bmax 40 --stable";
  RunResult one = run_cli(cmd);
  // same invocation with the scan spread over four worker threads
  RunResult four = [&] {
    const char* bin = std::getenv("CURVELATTICE_BIN");
    std::string full = std::string("CURVELATTICE_THREADS=4 \"") + bin +
                       "\" " + cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
  }();
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("cli: maxgenus") {
  Json j = parse_report(run_cli("maxgenus 26 5 --stable"));
  CHECK(j["result"]["G"] == 80);
  CHECK(j["result"]["r"] == 4);

  // exact arithmetic beyond 64 bits: d = 10^21, s = 5
  Json big = parse_report(
      run_cli("maxgenus 1000000000000000000000 5 --stable"));
  std::string expected =
      "1" + std::string(20, '0') + "5" + std::string(19, '0') + "1";
  CHECK(big["result"]["G"] == Json(expected));
  CHECK(big["result"]["r"] == 0);

  // the formula's stated range is enforced
  RunResult bad = run_cli("maxgenus 20 5");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("error [out_of_range]") != std::string::npos);
}

TEST_CASE("cli: cohomology with peeling trace") {
  Json j = parse_report(
      run_cli("cohomology --model q1 --class 15,10 --twist 4 --stable"));
  CHECK(j["result"]["divisor_class"] == Json::array({11, 6}));
  CHECK(j["result"]["h1"] == 4);
  CHECK(j["result"]["h1_ideal_twist"] == 4);
  CHECK(j["result"]["terminal"] == "nef-positive");
  CHECK(j["result"]["terminal_class"] == Json::array({9, 6}));
  REQUIRE(j["result"]["peels"].size() == 2);
  CHECK(j["result"]["peels"][0]["curve"] == Json::array({1, 0}));
  CHECK(j["result"]["peels"][0]["t"] == 4);
  CHECK(j["result"]["peels"][1]["t"] == 2);

  Json pencil = parse_report(
      run_cli("cohomology --model q1 --class 0,5 --stable"));
  CHECK(pencil["result"]["h0"] == 6);
  CHECK(pencil["result"]["h1"] == 4);
  CHECK(pencil["result"]["h2"] == 0);
  CHECK(pencil["result"]["terminal"] == "pencil-multiple");

  Json rigid = parse_report(
      run_cli("cohomology --model q2 --class 1,0 --stable"));
  CHECK(rigid["result"]["h0"] == 1);
  CHECK(rigid["result"]["h1"] == 0);
  CHECK(rigid["result"]["h2"] == 0);
  CHECK(rigid["result"]["terminal"] == "rigid-curve");
}

TEST_CASE("cli: verify suites") {
  Json j = parse_report(run_cli("verify rr --stable"));
  CHECK(j["result"]["suite"] == "rr");
  CHECK(j["result"]["pass"] == true);
  CHECK(j["checks"]["failures"] == 0);

  Json all = parse_report(run_cli("verify all --stable"));
  CHECK(all["result"]["pass"] == true);
  CHECK(all["checks"]["checks_run"].get<long>() >= 20);

  RunResult unknown = run_cli("verify bogus");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("cli: stable output is byte-identical across runs") {
  for (std::string cmd :
       {std::string("classify quartic --model q1 --class 14,10 --stable"),
        std::string("enumerate --model q2 --bmax 5 --stable"),
        std::string("verify crossover --stable")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cli: --out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() /
              "curvelattice_cli_out.json";
  std::filesystem::remove(path);
  RunResult rr = run_cli("classify quartic --model q1 --class 8,6 --stable "
                         "--out " + path.string());
  CHECK(rr.exit_code == 0);
  CHECK(rr.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  Json j = Json::parse(f);
  CHECK(j["result"]["kind"] == "NonReducedComponent");
}

TEST_CASE("cli: usage errors and version") {
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("classify").exit_code == 1);  // requires a subcommand
  CHECK(run_cli("classify quartic --model q1").exit_code == 1);

  RunResult version = run_cli("--version");
  CHECK(version.exit_code == 0);
  CHECK(version.out.find("curvelattice") != std::string::npos);

  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}
