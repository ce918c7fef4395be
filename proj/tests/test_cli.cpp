// Drives the installed CLI binary end to end via popen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout (stderr merged when requested)
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string command = std::string(QTQFT_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) {
    result.output.append(buffer, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verlinde number on Gr(1,2)") {
  const RunResult result = run_cli("--r 1 --s 1 verlinde 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "4\n");
}

TEST_CASE("quantum product rendering") {
  const RunResult result = run_cli("--r 2 --s 2 product 1,0 1,0");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "s[1,1] + s[2,0]\n");

  const RunResult quantum = run_cli("--r 1 --s 1 product 1 1");
  CHECK(quantum.exit_code == 0);
  CHECK(quantum.output == "q*s[0]\n");

  const RunResult at_one = run_cli("--r 1 --s 1 --q-at-one product 1 1");
  CHECK(at_one.exit_code == 0);
  CHECK(at_one.output == "s[0]\n");
}

TEST_CASE("gw and pair") {
  const RunResult gw = run_cli("--r 2 --s 2 gw 0 0 1,0 1,0 1,0 1,0");
  CHECK(gw.exit_code == 0);
  CHECK(gw.output == "2\n");

  const RunResult pair = run_cli("--r 2 --s 2 pair 2,1 1,0");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output == "1\n");
}

TEST_CASE("holla and closed") {
  const RunResult holla = run_cli("--r 2 --s 2 holla 2 1");
  CHECK(holla.exit_code == 0);
  CHECK(holla.output == "24\n");

  const RunResult closed = run_cli("--r 1 --s 1 closed 2 1");
  CHECK(closed.exit_code == 0);
  CHECK(closed.output.find("4") == 0);
}

TEST_CASE("json output is deterministic and cache-independent") {
  const fs::path dir = fs::temp_directory_path() /
                       ("qtqft-cli-test-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string base =
      "--r 2 --s 2 --json --cache-dir " + dir.string() + " product 2,1 1,0";
  const RunResult first = run_cli(base);
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("\"command\":\"product\"") != std::string::npos);

  // Warm cache run.
  const RunResult second = run_cli(base);
  CHECK(second.output == first.output);

  // Deleting the cache and rerunning yields identical output.
  fs::remove_all(dir);
  const RunResult third = run_cli(base);
  CHECK(third.output == first.output);
  fs::remove_all(dir);
}

TEST_CASE("spectrum listing") {
  const RunResult result = run_cli("--r 2 --s 2 spectrum");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("I={1,2}") != std::string::npos);
  CHECK(result.output.find("a=8") != std::string::npos);
}

TEST_CASE("tensor rendering") {
  const RunResult result = run_cli("--r 1 --s 1 tensor 0 0 1 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("s[0] -> s[0] : 1") != std::string::npos);
  CHECK(result.output.find("s[1] -> s[1] : 1") != std::string::npos);
}

TEST_CASE("error paths exit with code 1 and distinct messages") {
  const RunResult unknown = run_cli("--r 2 --s 2 frobnicate", true);
  CHECK(unknown.exit_code == 1);

  const RunResult bad_partition = run_cli("--r 2 --s 2 product 3,0 1,0", true);
  CHECK(bad_partition.exit_code == 1);
  CHECK(bad_partition.output.find("partition") != std::string::npos);

  const RunResult bad_syntax = run_cli("--r 2 --s 2 product x,y 1,0", true);
  CHECK(bad_syntax.exit_code == 1);
  CHECK(bad_syntax.output.find("syntax") != std::string::npos);

  const RunResult cap = run_cli("--r 2 --s 2 --max-entries 10 tensor 0 0 2 2", true);
  CHECK(cap.exit_code == 1);
  CHECK(cap.output.find("cap") != std::string::npos);

  const RunResult gamma = run_cli("--r 2 --s 2 holla 2 7", true);
  CHECK(gamma.exit_code == 1);
  CHECK(gamma.output.find("gamma") != std::string::npos);

  const RunResult missing_ctx = run_cli("verlinde 2", true);
  CHECK(missing_ctx.exit_code == 1);
}

TEST_CASE("self-check suite passes") {
  const RunResult result = run_cli("--r 2 --s 2 check --suite fast");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("[FAIL]") == std::string::npos);
  CHECK(result.output.find("checks passed") != std::string::npos);
}
