// End-to-end checks of the command-line surface: flags, CSV contract,
// determinism, and exit codes. Runs the built binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli_redir(const std::string& args, const std::string& redirect) {
  const std::string cmd = std::string(GUPHO_CLI_PATH) + " " + args + " " + redirect;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run_cli(const std::string& args) { return run_cli_redir(args, "2>/dev/null"); }

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

double field(const std::string& line, int idx) {
  std::istringstream in(line);
  std::string f;
  for (int i = 0; i <= idx; ++i) REQUIRE(std::getline(in, f, ','));
  return std::stod(f);
}

}  // namespace

TEST_CASE("purity subcommand: header, row count, values") {
  const RunResult r =
      run_cli("purity --tmin 1 --tmax 2 --steps 2 --alpha 0 --alpha 0.04");
  CHECK(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 5);  // header + steps * |alphas|
  CHECK(rows[0] == "T,alpha,purity,validity_ratio");
  CHECK(field(rows[1], 2) == doctest::Approx(0.46211715726).epsilon(1e-10));
  CHECK(field(rows[3], 2) == doctest::Approx(0.544151253662).epsilon(1e-10));
}

TEST_CASE("identical invocations produce byte-identical CSV") {
  const std::string args = "entropy --tmin 0.1 --tmax 50 --steps 37 --log";
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("default curve sets match the reference parameter choices") {
  const RunResult purity = run_cli("purity --steps 2");
  CHECK(lines_of(purity.out).size() == 1 + 2 * 3);  // alpha in {0, 0.04, 0.08}
  const RunResult entropy = run_cli("entropy --steps 2");
  CHECK(lines_of(entropy.out).size() == 1 + 2 * 3);  // alpha in {0, 0.01, 0.02}
  const RunResult renyi = run_cli("renyi --steps 2");
  CHECK(lines_of(renyi.out).size() == 1 + 2 * 2 * 3);  // alpha {0, 0.01} x gamma {0.8, 1.8, inf}
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("purity --help").exit_code == 0);
}

TEST_CASE("renyi subcommand accepts inf and rejects order one") {
  const RunResult r = run_cli("renyi --tmin 1 --tmax 2 --steps 2 --alpha 0 --gamma inf");
  CHECK(r.exit_code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].find(",inf,") != std::string::npos);
  CHECK(field(rows[1], 3) == doctest::Approx(0.458675145387).epsilon(1e-10));

  CHECK(run_cli("renyi --gamma 1 --steps 2").exit_code == 2);
}

TEST_CASE("entropy subcommand emits the frozen value at T = 1") {
  const RunResult r = run_cli("entropy --tmin 1 --tmax 2 --steps 2 --alpha 0");
  CHECK(r.exit_code == 0);
  CHECK(field(lines_of(r.out)[1], 2) == doctest::Approx(1.04065185226).epsilon(1e-10));
}

TEST_CASE("unit flags rescale the sweep") {
  const RunResult r =
      run_cli("purity --tmin 2 --tmax 3 --steps 2 --alpha 0 --omega 2 --kb 0.5");
  // x = hbar*omega/(kb*T) = 2/(0.5*2) = 2 at T = 2.
  CHECK(field(lines_of(r.out)[1], 2) == doctest::Approx(std::tanh(1.0)).epsilon(1e-10));
}

TEST_CASE("tstar subcommand reports root, inverse temperature, residual") {
  const RunResult r = run_cli("tstar --alpha 0.01");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("T_star=16.6616618622") != std::string::npos);
  CHECK(r.out.find("beta_star=0.0600180227") != std::string::npos);
  CHECK(r.out.find("residual=") != std::string::npos);

  CHECK(run_cli("tstar --alpha 0").exit_code == 1);
  CHECK(run_cli("tstar").exit_code == 2);  // --alpha is required
}

TEST_CASE("verify subcommand: pass, fail injection, usage") {
  const RunResult quick = run_cli("verify --level quick");
  CHECK(quick.exit_code == 0);
  CHECK(quick.out.find("OK") != std::string::npos);

  const RunResult hurt = run_cli("verify --level quick --debug-perturb-deth");
  CHECK(hurt.exit_code == 1);
  CHECK(hurt.out.find("FAIL") != std::string::npos);

  CHECK(run_cli("verify --level nonsense").exit_code == 2);
}

TEST_CASE("out-of-range first-order corrections are flagged on stderr") {
  // At alpha = 0.08 and T near 100 the purity correction passes half the
  // leading term; the CSV keeps the rows, stderr carries one note per curve.
  const RunResult r = run_cli_redir(
      "purity --tmin 1 --tmax 100 --steps 50 --alpha 0.08", "2>&1 1>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("note:") != std::string::npos);

  const RunResult quiet = run_cli_redir(
      "purity --tmin 1 --tmax 2 --steps 2 --alpha 0", "2>&1 1>/dev/null");
  CHECK(quiet.out.empty());
}

TEST_CASE("malformed invocations exit with the usage code") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("purity --tmin 2 --tmax 1").exit_code == 2);
  CHECK(run_cli("purity --alpha -0.5 --steps 2").exit_code == 2);
}
