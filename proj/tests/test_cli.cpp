// End-to-end tests of the command-line binary: golden-pinned outputs,
// exit-code contract (0 success, 1 check failure, 2 usage error), JSON
// mirroring, and DOT emission.  The binary path and the golden
// directory come in as compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the binary with the given arguments, capturing the requested
// streams; `merge_stderr` folds diagnostics into the captured text.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(SPINORBIT_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE_MESSAGE(pipe != nullptr, "cannot start " << cmd);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0)
    res.output.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) {
  return read_file(std::string(SPINORBIT_GOLDEN_DIR) + "/" + name);
}

std::string temp_path(const std::string& name) {
  const char* base = std::getenv("TMPDIR");
  return std::string(base ? base : "/tmp") + "/" + name;
}

const char* kExample =
    "\"()x1+(1,3,4,5)x1+(1,2,3,4)x2+(1,5)x3+(2,3,4,5)x3+(2,3)x4+(4,5)x4"
    "+(1,2,4,5)x4\"";

}  // namespace

TEST_CASE("dump-grading matches the pinned dump") {
  RunResult r = run_cli("dump-grading");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("grading.txt"));
}

TEST_CASE("table1 matches the pinned table") {
  RunResult r = run_cli("table1");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("table1.txt"));
}

TEST_CASE("mixed-table 4 verifies and matches the pinned report") {
  RunResult r = run_cli("mixed-table 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output == golden("mixed_table_4.txt"));
  CHECK(r.output.find("misprinted, certified u1") != std::string::npos);
  CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("dynkin-scheme emits the pinned scheme and DOT file") {
  RunResult plain = run_cli(std::string("dynkin-scheme --element ") + kExample);
  CHECK(plain.exit_code == 0);
  CHECK(plain.output == golden("scheme_example.txt"));

  std::string dot = temp_path("spinorbit_test_scheme.dot");
  std::remove(dot.c_str());
  RunResult with_dot = run_cli(std::string("dynkin-scheme --element ") +
                               kExample + " --dot " + dot);
  CHECK(with_dot.exit_code == 0);
  CHECK(read_file(dot) == golden("scheme_example.dot"));
  std::remove(dot.c_str());
}

TEST_CASE("jordan splits a mixed element") {
  RunResult r = run_cli(
      "jordan --element "
      "\"-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4+(1,4)x1\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "semisimple part = -(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4\n"
        "nilpotent part = (1,4)x1\n");
}

TEST_CASE("characteristic, absolute and relative") {
  RunResult abs = run_cli("characteristic --element \"(3,5)x1+(1,3)x4\"");
  CHECK(abs.exit_code == 0);
  CHECK(abs.output == "characteristic (0,0,1,0,0,0,1,0)\n");

  RunResult rel =
      run_cli("characteristic --element \"(1,4)x1\" --relative-to p1");
  CHECK(rel.exit_code == 0);
  CHECK(rel.output == "relative characteristic slots (0,1,1,0,-3/2)\n");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("", true).exit_code == 2);                 // no subcommand
  CHECK(run_cli("--bogus", true).exit_code == 2);          // unknown flag
  CHECK(run_cli("table1 --bogus", true).exit_code == 2);   // unknown flag
  CHECK(run_cli("mixed-table 11", true).exit_code == 2);   // out of range
  CHECK(run_cli("mixed-table", true).exit_code == 2);      // missing index
  CHECK(run_cli("jordan", true).exit_code == 2);           // missing element
  RunResult bad = run_cli("jordan --element garbage", true);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("does not parse") != std::string::npos);
}

TEST_CASE("validation errors exit with status 2") {
  RunResult zero = run_cli("dynkin-scheme --element \"()x1-()x1\"", true);
  CHECK(zero.exit_code == 2);

  // the characteristic needs a nilpotent element
  RunResult semi = run_cli(
      "characteristic --element "
      "\"-(3,5)x1+(1,2,4,5)x2-(2,4)x3-(1,3)x4\"",
      true);
  CHECK(semi.exit_code == 2);
  CHECK(semi.output.find("nilpotent") != std::string::npos);

  // the relative frame rejects elements outside the anchor centralizer
  RunResult rel = run_cli(
      "characteristic --element \"(3,5)x1+(1,3)x4\" --relative-to p1", true);
  CHECK(rel.exit_code == 2);
  CHECK(rel.output.find("commute") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  RunResult h = run_cli("--help");
  CHECK(h.output.find("verify-all") != std::string::npos);
  CHECK(h.output.find("dynkin-scheme") != std::string::npos);
}

TEST_CASE("json mirror of a verification report") {
  std::string path = temp_path("spinorbit_test_mt2.json");
  std::remove(path.c_str());
  RunResult r = run_cli("mixed-table 2 --json " + path);
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(read_file(path));
  CHECK(j["ok"] == true);
  CHECK(j["checks_failed"] == 0);
  CHECK(j["checks_run"].get<int>() > 0);
  CHECK(j["title"].get<std::string>().find("stratum 2") != std::string::npos);
  bool has_check = false;
  for (const auto& e : j["entries"])
    if (e["kind"] == "check") has_check = true;
  CHECK(has_check);
  std::remove(path.c_str());
}
