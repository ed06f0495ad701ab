// End-to-end checks of the zeta_audit binary. The executable path is baked
// in at configure time via ZETALAB_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <zetalab/report.hpp>

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ZETALAB_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

size_t count_lines(const std::string& s) {
  size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("verify-identity: sweep shape and determinism") {
  const auto r =
      run_cli("verify-identity t1 --n 3..3 --k 1..2 --samples 2 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 5);  // header + 1 n x 2 k x 2 samples
  CHECK(r.output.rfind("n,k,a_re", 0) == 0);

  const auto again =
      run_cli("verify-identity t1 --n 3..3 --k 1..2 --samples 2 --seed 5");
  CHECK(again.output == r.output);
}

TEST_CASE("verify-identity: fixed-point run reproduces the hand residual") {
  const auto r = run_cli("verify-identity t2 --n 3..3 --k 2..2 --a 1 --d 1");
  CHECK(r.exit_code == 0);
  // lhs = -3, rhs = -5, residual 2 for the unit real progression.
  CHECK(r.output.find(",-3,0,-5,0,2,") != std::string::npos);
}

TEST_CASE("verify-identity: rejects out-of-range n and malformed ranges") {
  CHECK(run_cli("verify-identity t1 --n 2..3").exit_code == 2);
  CHECK(run_cli("verify-identity t1 --n 21..22").exit_code == 2);
  CHECK(run_cli("verify-identity t1 --n 6..3").exit_code == 2);
  CHECK(run_cli("verify-identity t3").exit_code == 2);  // bad positional
}

TEST_CASE("claimed-zeta: one-point JSON verdict") {
  const auto r = run_cli("claimed-zeta --Z 3 --n 3 --k 2 --m 3");
  CHECK(r.exit_code == 0);
  const auto doc = json::parse(r.output);
  CHECK(doc["claim_id"] == "T10_ZETA");
  CHECK(doc["claimed_re"].get<double>() ==
        doctest::Approx(118.68421052631578).epsilon(1e-13));
  CHECK(doc["classification"] == "REFUTED");
  CHECK(doc["inputs"]["mode"] == "GAMMA_EQUALS_Z");
}

TEST_CASE("claimed-zeta: domain misses degrade, option misses reject") {
  const auto below = run_cli("claimed-zeta --Z 0.5 --k 2 --m 3");
  CHECK(below.exit_code == 0);
  CHECK(json::parse(below.output)["classification"] == "DEGENERATE");

  // Z = 1 evaluates to the fixed point but the reference pole is hit.
  const auto pole = run_cli("claimed-zeta --Z 1 --k 2 --m 3");
  CHECK(pole.exit_code == 0);
  CHECK(json::parse(pole.output)["classification"] == "DEGENERATE");

  CHECK(run_cli("claimed-zeta --Z 3 --k 2").exit_code == 2);  // missing --m
  CHECK(run_cli("claimed-zeta --Z 3 --k 2 --m 2").exit_code == 2);
  CHECK(run_cli("claimed-zeta --Z 3 --k 2 --m 3 --mode bad").exit_code == 2);
}

TEST_CASE("zero-audit: full t sweep with the expected verdict mix") {
  const auto r = run_cli("zero-audit --t -4..4 --k 2 --m 3 --source t14");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 10);  // header + 9 candidates
  CHECK(r.output.find("REFUTED") != std::string::npos);
  CHECK(r.output.find("DEGENERATE") != std::string::npos);
  CHECK(r.output.find("CONFIRMED") == std::string::npos);

  const auto both = run_cli("zero-audit --t 1..1 --k 2 --m 3 --source c2");
  CHECK(both.exit_code == 0);
  CHECK(count_lines(both.output) == 3);  // header + arccos + arcsin
}

TEST_CASE("zero-audit: bad inputs exit 2") {
  CHECK(run_cli("zero-audit --t 4..-4 --k 2 --m 3").exit_code == 2);
  CHECK(run_cli("zero-audit --t 0..1 --k 2 --m 2").exit_code == 2);
  CHECK(run_cli("zero-audit --t 0..1 --k 2 --m 3 --source bogus").exit_code ==
        2);
  CHECK(run_cli("zero-audit --k 2 --m 3").exit_code == 2);  // missing --t
}

TEST_CASE("full-report: config-driven run writes the artifact set") {
  zetalab::report::AuditConfig config;
  config.identity.n_values = {3};
  config.identity.k_values = {1, 2};
  config.identity.samples = 2;
  config.z_grid = {{3, 0}};
  config.n_set = {3};
  config.pairs = {{2, 3}, {2, 5}};
  config.t_min = -1;
  config.t_max = 1;

  const fs::path dir = fs::temp_directory_path() / "zetalab_cli_report";
  fs::remove_all(dir);
  const fs::path cfg = fs::temp_directory_path() / "zetalab_cli_config.json";
  std::ofstream(cfg) << config.to_json().dump(1);

  const auto r = run_cli("full-report --config " + cfg.string() +
                         " --output " + dir.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("audit complete") != std::string::npos);
  for (const char* leaf :
       {"verdicts.json", "verdicts.csv", "verdicts.md", "manifest.json"})
    CHECK(fs::exists(dir / leaf));
}

TEST_CASE("full-report: config failures exit 2") {
  const fs::path bad = fs::temp_directory_path() / "zetalab_cli_bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run_cli("full-report --config " + bad.string()).exit_code == 2);
  CHECK(run_cli("full-report --config /does/not/exist.json").exit_code == 2);
}

TEST_CASE("top-level usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);         // subcommand required
  CHECK(run_cli("frobnicate").exit_code == 2);
}
