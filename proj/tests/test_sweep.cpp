#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gupho/entropy.hpp"
#include "gupho/sweep.hpp"

using namespace gupho;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string field; std::getline(in, field, ',');) out.push_back(field);
  return out;
}

}  // namespace

TEST_CASE("temperature grids hit both endpoints") {
  SweepConfig cfg;
  cfg.t_min = 0.5;
  cfg.t_max = 8.0;
  cfg.steps = 5;
  const auto lin = temperature_grid(cfg);
  CHECK(lin.size() == 5);
  CHECK(lin.front() == 0.5);
  CHECK(lin.back() == 8.0);
  CHECK(lin[2] == doctest::Approx(4.25));

  cfg.spacing = Spacing::log;
  const auto lg = temperature_grid(cfg);
  CHECK(lg.front() == doctest::Approx(0.5));
  CHECK(lg.back() == 8.0);
  CHECK(lg[1] / lg[0] == doctest::Approx(lg[3] / lg[2]).epsilon(1e-12));
}

TEST_CASE("csv float format: 12 significant digits") {
  CHECK(format_csv_value(0.46211715726000976) == "0.46211715726");
  CHECK(format_csv_value(1.0) == "1");
  CHECK(format_csv_value(0.09) == "0.09");
  CHECK(format_csv_value(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("purity sweep: shape and frozen row") {
  SweepConfig cfg;
  cfg.t_min = 1.0;
  cfg.t_max = 2.0;
  cfg.steps = 2;
  cfg.alphas = {0.0, 0.04};

  std::ostringstream out;
  write_purity_csv(cfg, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 1 + 2 * 2);
  CHECK(rows[0] == "T,alpha,purity,validity_ratio");

  const auto r = split(rows[1]);  // T = 1, alpha = 0
  REQUIRE(r.size() == 4);
  CHECK(r[0] == "1");
  CHECK(std::stod(r[2]) == doctest::Approx(0.46211715726000976).epsilon(1e-11));
  CHECK(std::stod(r[3]) == 0.0);

  const auto r2 = split(rows[3]);  // T = 1, alpha = 0.04
  CHECK(std::stod(r2[2]) == doctest::Approx(0.5441512536619256).epsilon(1e-11));
  CHECK(std::stod(r2[3]) > 0.0);
}

TEST_CASE("byte-identical output for identical configs") {
  SweepConfig cfg;
  cfg.steps = 40;
  cfg.alphas = {0.0, 0.04, 0.08};
  std::ostringstream a, b;
  write_purity_csv(cfg, a);
  write_purity_csv(cfg, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\r") == std::string::npos);
}

TEST_CASE("purity sweep curves behave like the reference figures") {
  SweepConfig cfg;
  cfg.t_min = 0.1;
  cfg.t_max = 2000.0;
  cfg.steps = 60;
  cfg.spacing = Spacing::log;
  cfg.alphas = {0.0, 0.04};
  std::ostringstream out;
  write_purity_csv(cfg, out);
  const auto rows = lines_of(out.str());

  // alpha = 0 tends to 0; alpha = 0.04 tends to 9*alpha/4 = 0.09.
  const auto last0 = split(rows[cfg.steps]);
  CHECK(std::stod(last0[2]) < 1e-3);
  const auto last4 = split(rows[2 * cfg.steps]);
  CHECK(std::stod(last4[2]) == doctest::Approx(0.09).epsilon(2e-2));
}

TEST_CASE("entropy sweep: monotone without coupling, peaked with it") {
  SweepConfig cfg;
  cfg.t_min = 0.05;
  cfg.t_max = 100.0;
  cfg.steps = 300;
  cfg.spacing = Spacing::log;
  cfg.alphas = {0.0, 0.01};
  std::ostringstream out;
  write_entropy_csv(cfg, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 1 + 2 * 300);
  CHECK(rows[0] == "T,alpha,s_von,validity_ratio");

  bool monotone = true;
  for (int i = 2; i <= 300; ++i)
    if (std::stod(split(rows[i])[2]) < std::stod(split(rows[i - 1])[2]))
      monotone = false;
  CHECK(monotone);

  int arg = 0;
  double best = -1.0;
  for (int i = 1; i <= 300; ++i) {
    const double s = std::stod(split(rows[300 + i])[2]);
    if (s > best) {
      best = s;
      arg = i;
    }
  }
  CHECK(arg > 1);
  CHECK(arg < 300);

  // A row value matches the library exactly.
  const GupParams p{};
  const auto r = split(rows[1]);
  CHECK(std::stod(r[2]) ==
        doctest::Approx(von_neumann(p, std::stod(r[0])).value).epsilon(1e-11));
}

TEST_CASE("entropy row at T = 1 carries the frozen value") {
  SweepConfig cfg;
  cfg.t_min = 1.0;
  cfg.t_max = 2.0;
  cfg.steps = 2;
  cfg.alphas = {0.0};
  std::ostringstream out;
  write_entropy_csv(cfg, out);
  CHECK(std::stod(split(lines_of(out.str())[1])[2]) ==
        doctest::Approx(1.0406518522564083).epsilon(1e-11));
}

TEST_CASE("renyi sweep: columns, ordering, and the order-2/purity tie") {
  SweepConfig cfg;
  cfg.t_min = 0.2;
  cfg.t_max = 20.0;
  cfg.steps = 25;
  cfg.alphas = {0.0};
  cfg.gammas = {0.8, 1.8, std::numeric_limits<double>::infinity()};
  std::ostringstream out;
  write_renyi_csv(cfg, out);
  const auto rows = lines_of(out.str());
  REQUIRE(rows.size() == 1 + 25 * 3);
  CHECK(rows[0] == "T,alpha,gamma,s_renyi");
  CHECK(split(rows[1 + 2 * 25])[2] == "inf");

  for (int i = 1; i <= 25; ++i) {
    const double s08 = std::stod(split(rows[i])[3]);
    const double s18 = std::stod(split(rows[25 + i])[3]);
    const double sinf = std::stod(split(rows[50 + i])[3]);
    CHECK(s08 >= s18);
    CHECK(s18 >= sinf);
  }

  // S_2 = -ln purity at alpha = 0.
  SweepConfig cfg2 = cfg;
  cfg2.gammas = {2.0};
  std::ostringstream out2, outp;
  write_renyi_csv(cfg2, out2);
  write_purity_csv(cfg2, outp);
  const auto renyi_rows = lines_of(out2.str());
  const auto purity_rows = lines_of(outp.str());
  for (int i = 1; i <= 25; ++i)
    CHECK(std::stod(split(renyi_rows[i])[3]) ==
          doctest::Approx(-std::log(std::stod(split(purity_rows[i])[2])))
              .epsilon(1e-10));
}

TEST_CASE("renyi sweep with coupling reverses the order at high T") {
  SweepConfig cfg;
  cfg.t_min = 5.0;
  cfg.t_max = 500.0;
  cfg.steps = 60;
  cfg.spacing = Spacing::log;
  cfg.alphas = {0.01};
  cfg.gammas = {0.8, 1.8, std::numeric_limits<double>::infinity()};
  std::ostringstream out;
  write_renyi_csv(cfg, out);
  const auto rows = lines_of(out.str());
  bool reversed = false;
  for (int i = 1; i <= 60; ++i) {
    const double s08 = std::stod(split(rows[i])[3]);
    const double s18 = std::stod(split(rows[60 + i])[3]);
    const double sinf = std::stod(split(rows[120 + i])[3]);
    if (s08 < s18 && s18 < sinf) reversed = true;
  }
  CHECK(reversed);
}

TEST_CASE("config validation") {
  SweepConfig cfg;
  cfg.t_min = -1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SweepConfig{};
  cfg.steps = 1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SweepConfig{};
  cfg.alphas = {-0.01};
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = SweepConfig{};
  cfg.gammas = {1.0};
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}
