#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <cstdlib>
#include <string>

#include "divsum/emit.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the built binary with the given arguments, capturing stdout.
RunResult run_cli_env(const std::string& env, const std::string& args) {
  const char* bin = std::getenv("DIVSUM_BIN");
  REQUIRE(bin != nullptr);
  const std::string command =
      (env.empty() ? "" : env + " ") + bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t read = 0;
  while ((read = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), read);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

RunResult run_cli(const std::string& args) { return run_cli_env("", args); }

}  // namespace

TEST_CASE("csv quoting and double formatting") {
  CHECK(divsum::csv_field("plain") == "plain");
  CHECK(divsum::csv_field("a,b") == "\"a,b\"");
  CHECK(divsum::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(divsum::csv_field("line\nbreak") == "\"line\nbreak\"");
  CHECK(divsum::format_double(0.25) == "0.25");
  CHECK(divsum::format_double(1.0) == "1");
  // Shortest round-trip form is deterministic.
  CHECK(divsum::format_double(0.1 + 0.2) == divsum::format_double(0.30000000000000004));
}

TEST_CASE("kernel backend selection does not change results") {
  const RunResult scalar = run_cli_env("DIVSUM_KERNELS=scalar",
                                       "density --bound 100000 --step 10000");
  const RunResult avx2 = run_cli_env("DIVSUM_KERNELS=avx2",
                                     "density --bound 100000 --step 10000");
  REQUIRE(scalar.exit_code == 0);
  REQUIRE(scalar.output == avx2.output);
}

TEST_CASE("sigma and sigma-k print bare decimals") {
  CHECK(run_cli("sigma 6").output == "12\n");
  CHECK(run_cli("sigma-k 12 5").output == "257908\n");
  CHECK(run_cli("sigma 13188979363639752997731839211623940096").output ==
        "65944896818198764988659196058119700480\n");
}

TEST_CASE("orbit table ends at sigma^32(2)") {
  const RunResult result = run_cli("orbit 2 --max-k 32");
  CHECK(result.exit_code == 0);
  CHECK(result.output.starts_with("k,value,value_mod_start\n"));
  CHECK(result.output.find("32,564210119465811,1\n") != std::string::npos);
}

TEST_CASE("period reports the m = 6 cycle") {
  const RunResult result = run_cli("period 6 --max-k 100 --format json");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"period\": 2") != std::string::npos);
  CHECK(result.output.find("\"L\": \"2\"") != std::string::npos);
  CHECK(result.output.find("\"period_divides_L\": \"yes\"") !=
        std::string::npos);
}

TEST_CASE("ctr emits one row per m in the range") {
  const RunResult result = run_cli("ctr --range 2..50 --max-k 50");
  // m = 29 needs more than 50 iterations, so the run reports undetermined.
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("2,2,found\n") != std::string::npos);
  CHECK(result.output.find("3,4,found\n") != std::string::npos);
  CHECK(result.output.find("6,1,found\n") != std::string::npos);
  CHECK(result.output.find("29,,reached_max_k\n") != std::string::npos);
  std::size_t rows = 0;
  for (char c : result.output) rows += (c == '\n');
  CHECK(rows == 50);  // header + 49 values
}

TEST_CASE("ctr exit code 2 when a cap stops the search") {
  const RunResult result = run_cli("ctr 5 --max-k 1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("5,,reached_max_k\n") != std::string::npos);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli("frobnicate 6").exit_code == 64);
  CHECK(run_cli("sigma twelve").exit_code == 64);
  CHECK(run_cli("classify").exit_code == 64);
  CHECK(run_cli("sigma").exit_code == 64);
}

TEST_CASE("domain errors exit 1") {
  CHECK(run_cli("sigma 0").exit_code == 1);
  CHECK(run_cli("robin 2").exit_code == 1);
  CHECK(run_cli("gcd-chain 1").exit_code == 1);
}

TEST_CASE("env var overrides flags") {
  const RunResult result = run_cli_env("DIVSUM_MAX_K=3", "orbit 2");
  CHECK(result.output ==
        "k,value,value_mod_start\n0,2,0\n1,3,1\n2,4,0\n3,7,1\n");
}

TEST_CASE("batch output is byte-identical across worker counts") {
  for (const std::string cmd :
       {std::string("density --bound 200000 --step 5000"),
        std::string("multiperfect --bound 200000"),
        std::string("robin --range 3..200000"),
        std::string("classify --range 1..5000 --format json")}) {
    const RunResult one = run_cli(cmd + " --workers 1");
    const RunResult eight = run_cli(cmd + " --workers 8");
    REQUIRE(one.exit_code == eight.exit_code);
    REQUIRE(one.output == eight.output);
    REQUIRE(!one.output.empty());
  }
}

TEST_CASE("factor cache file round-trips through a run") {
  const std::string path = "/tmp/divsum_cli_cache.txt";
  std::remove(path.c_str());
  const RunResult first = run_cli("orbit 2 --max-k 20 --cache " + path);
  CHECK(first.exit_code == 0);
  const RunResult second = run_cli("orbit 2 --max-k 20 --cache " + path);
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);
  std::remove(path.c_str());
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "/tmp/divsum_cli_out.csv";
  std::remove(path.c_str());
  const RunResult direct = run_cli("density --bound 1000 --step 100");
  const RunResult redirected =
      run_cli("density --bound 1000 --step 100 --out " + path);
  CHECK(redirected.output.empty());
  std::ifstream file(path, std::ios::binary);
  REQUIRE(file.good());
  std::string contents((std::istreambuf_iterator<char>(file)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == direct.output);
  std::remove(path.c_str());
}
