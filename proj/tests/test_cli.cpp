// End-to-end checks of the installed command line interface: exit codes,
// output determinism, file emission. Each case launches the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MALFATTI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("malfatti_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("exit code contract") {
  CHECK(run_cli("compute --sides 3 4 5 --variants 1").exit_code == 0);
  CHECK(run_cli("verify --sides 3 4 5 --variants 1").exit_code == 0);
  CHECK(run_cli("compute --sides 1 1 2").exit_code == 2);          // degenerate triangle
  CHECK(run_cli("compute --sides 3 4").exit_code == 2);            // wrong arity
  CHECK(run_cli("compute").exit_code == 2);                        // no triangle given
  CHECK(run_cli("compute --sides 3 4 5 --angles 40 60").exit_code == 2);
  CHECK(run_cli("compute --sides 3 4 5 --variants 0").exit_code == 2);
  CHECK(run_cli("compute --sides 3 4 5 --variants 33").exit_code == 2);
  CHECK(run_cli("compute --sides 3 4 5 --variants frog").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);                     // unknown subcommand
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("verify exit code reflects failures") {
  CHECK(run_cli("verify --sides 3 4 5").exit_code == 0);
  // the printed table's b6/c7 rows fail the oracle
  CHECK(run_cli("verify --sides 3 4 5 --paper-verbatim").exit_code == 1);
  CHECK(run_cli("verify --sides 3 4 5 --paper-verbatim --variants 1..8").exit_code == 0);
  CHECK(run_cli("verify --sides 3 4 5 --paper-verbatim --variants 22").exit_code == 1);
}

TEST_CASE("compute output is byte-identical across runs and sorted by index") {
  const CliResult a = run_cli("compute --sides 3 4 5");
  const CliResult b = run_cli("compute --sides 3 4 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const json doc = json::parse(a.output);
  REQUIRE(doc["triplets"].size() == 32);
  for (int i = 0; i < 32; ++i) {
    CHECK(doc["triplets"][i]["index"] == i + 1);
  }
}

TEST_CASE("variant selection forms") {
  CHECK(json::parse(run_cli("compute --sides 3 4 5 --variants 1").output)["triplets"].size() == 1);
  CHECK(json::parse(run_cli("compute --sides 3 4 5 --variants 1,5,9").output)["triplets"].size() == 3);
  CHECK(json::parse(run_cli("compute --sides 3 4 5 --variants 1..8").output)["triplets"].size() == 8);
  CHECK(json::parse(run_cli("compute --sides 3 4 5 --variants 17-20").output)["triplets"].size() == 4);
  CHECK(json::parse(run_cli("compute --sides 3 4 5 --variants all").output)["triplets"].size() == 32);
  // duplicates collapse and output stays index sorted
  const json doc = json::parse(run_cli("compute --sides 3 4 5 --variants 9,1,9").output);
  REQUIRE(doc["triplets"].size() == 2);
  CHECK(doc["triplets"][0]["label"] == "i1");
  CHECK(doc["triplets"][1]["label"] == "a1");
}

TEST_CASE("angle input matches the equivalent sides") {
  const CliResult r = run_cli("compute --angles 45 54 --variants 1");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.output);
  CHECK(doc["triangle"]["c"] == 1.0);
  CHECK(doc["triangle"]["A_deg"].get<double>() == doctest::Approx(45.0).epsilon(1e-12));
  CHECK(doc["triangle"]["B_deg"].get<double>() == doctest::Approx(54.0).epsilon(1e-12));
  CHECK(run_cli("compute --angles 90 90").exit_code == 2);
  CHECK(run_cli("compute --angles 45 54 --scale -1").exit_code == 2);
}

TEST_CASE("render writes one SVG per variant") {
  TempDir dir;
  const CliResult r =
      run_cli("render --sides 3 4 5 --variants 1,13 --out " + dir.path.string());
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir.path / "i1.svg"));
  CHECK(fs::exists(dir.path / "a5.svg"));
  std::ifstream in(dir.path / "i1.svg");
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line == "<?xml version=\"1.0\" encoding=\"UTF-8\"?>");

  // repeated render produces identical bytes
  TempDir dir2;
  run_cli("render --sides 3 4 5 --variants 1 --out " + dir2.path.string());
  std::ifstream a(dir.path / "i1.svg"), b(dir2.path / "i1.svg");
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);
}

TEST_CASE("tolerance flag reaches the verifier") {
  // an absurdly loose tolerance turns the verbatim b6 failure into a match
  CHECK(run_cli("verify --sides 3 4 5 --paper-verbatim --variants 22 --tolerance 0.9").exit_code ==
        0);
}
