#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gaussq/cli.hpp"
#include "gaussq/entropy.hpp"
#include "gaussq/triangle.hpp"

using namespace gaussq;
using namespace gaussq::cli;
using doctest::Approx;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gaussq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

constexpr double kG1 = 1.3862943611198906188;

}  // namespace

TEST_CASE("sweep grid") {
  SweepConfig cfg;
  const auto ks = cfg.grid();
  REQUIRE(ks.size() == 300);
  CHECK(ks.front() == 0.01);
  CHECK(ks.back() == 3.0);
  int exact_one = 0;
  for (double k : ks) exact_one += (k == 1.0);
  CHECK(exact_one == 1);
  for (size_t i = 1; i < ks.size(); ++i) CHECK(ks[i] > ks[i - 1]);
}

TEST_CASE("sweep config validation") {
  SweepConfig cfg;
  cfg.steps = 1;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = SweepConfig{};
  cfg.k_min = 2.0;
  cfg.k_max = 1.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = SweepConfig{};
  cfg.k_min = 0.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = SweepConfig{};
  cfg.n = -1.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  cfg = SweepConfig{};
  cfg.hbar = 0.0;
  CHECK_THROWS_AS(cfg.validate(), UsageError);
  CHECK_NOTHROW(SweepConfig{}.validate());
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(kG1) == "1.38629436112");
  CHECK(format_number(-2.5e-7) == "-2.5e-07");
}

TEST_CASE("sweep command") {
  const auto r = run_cli({"sweep", "--N", "1", "--k-min", "0.01", "--k-max", "3", "--steps", "300"});
  REQUIRE(r.code == kExitOk);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header == kSweepHeader);
  REQUIRE(rows.size() == 300);
  bool saw_one = false;
  for (const auto& row : rows) {
    REQUIRE(row.size() == 8);
    const double hi = row[1], ho = row[2], he = row[3];
    const double i = row[4], l = row[5], nn = row[6], c = row[7];
    // Identities hold to the printed precision.
    CHECK(std::abs(i - (hi + ho - he)) <= 1e-10);
    CHECK(std::abs(l - (hi + he - ho)) <= 1e-10);
    CHECK(std::abs(nn - (ho + he - hi)) <= 1e-10);
    CHECK(std::abs(c - (ho - he)) <= 1e-10);
    if (row[0] == 1.0) {
      saw_one = true;
      CHECK(he == 0.0);
      CHECK(c == hi);
    }
  }
  CHECK(saw_one);
}

TEST_CASE("sweep is deterministic") {
  const std::vector<std::string> args{"sweep", "--N", "1", "--k-min", "0.01", "--k-max",
                                      "3", "--steps", "300"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("sweep rows near the zero crossing and for the vacuum") {
  const auto r = run_cli({"sweep", "--N", "1", "--k-min", "0.7071068", "--k-max", "0.8", "--steps",
                          "2"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out, nullptr);
  CHECK(std::abs(rows[0][7]) <= 1e-6);

  const auto v = run_cli({"sweep", "--N", "0", "--k-min", "0.1", "--k-max", "0.9", "--steps", "9"});
  REQUIRE(v.code == 0);
  for (const auto& row : parse_csv(v.out, nullptr))
    for (size_t j = 1; j < row.size(); ++j) CHECK(row[j] == 0.0);
}

TEST_CASE("bits flag converts every column") {
  const auto nats = parse_csv(run_cli({"sweep", "--steps", "5"}).out, nullptr);
  const auto bits = parse_csv(run_cli({"sweep", "--steps", "5", "--bits"}).out, nullptr);
  REQUIRE(nats.size() == bits.size());
  for (size_t i = 0; i < nats.size(); ++i) {
    CHECK(bits[i][0] == nats[i][0]);
    for (size_t j = 1; j < 8; ++j)
      CHECK(bits[i][j] == Approx(nats[i][j] / std::log(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("sweep usage errors") {
  CHECK(run_cli({"sweep", "--steps", "1"}).code == kExitUsage);
  CHECK(run_cli({"sweep", "--k-min", "2", "--k-max", "1"}).code == kExitUsage);
  CHECK(run_cli({"sweep", "--N", "abc"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"bogus"}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("triangle command") {
  SUBCASE("k=1") {
    const auto r = run_cli({"triangle", "--N", "1", "--k", "1"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["quantities"]["mutual"].get<double>() == Approx(2.0 * kG1).epsilon(1e-12));
    CHECK(doc["quantities"]["loss"].get<double>() == 0.0);
    CHECK(doc["quantities"]["noise"].get<double>() == 0.0);
    CHECK(doc["quantities"]["coherent"].get<double>() == Approx(kG1).epsilon(1e-12));
  }
  SUBCASE("small k") {
    const auto doc = nlohmann::json::parse(run_cli({"triangle", "--N", "1", "--k", "0.001"}).out);
    CHECK(std::abs(doc["quantities"]["loss"].get<double>() - 2.0 * kG1) <= 1e-2);
    CHECK(doc["quantities"]["mutual"].get<double>() <= 1e-2);
  }
  SUBCASE("vacuum") {
    const auto doc = nlohmann::json::parse(run_cli({"triangle", "--N", "0", "--k", "0.5"}).out);
    for (const char* key : {"in", "out", "exch"}) CHECK(doc["entropies"][key].get<double>() == 0.0);
    for (const char* key : {"mutual", "loss", "noise", "coherent"})
      CHECK(doc["quantities"][key].get<double>() == 0.0);
  }
  SUBCASE("errors") {
    CHECK(run_cli({"triangle", "--N", "1"}).code == kExitUsage);
    CHECK(run_cli({"triangle", "--N", "1", "--k", "-1"}).code == kExitFailure);
    CHECK(run_cli({"triangle", "--N", "-1", "--k", "0.5"}).code == kExitUsage);
  }
}

TEST_CASE("verify command") {
  SUBCASE("within tolerance") {
    const auto r = run_cli({"verify", "--N", "1", "--k", "0.5", "--dim", "60"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find(",ok") != std::string::npos);
    const auto report = run_verify(1.0, {0.5}, 60);
    REQUIRE(report.rows.size() == 1);
    CHECK(std::abs(report.rows[0].out_oracle - report.rows[0].out_closed) <= 2e-3);
    CHECK(std::abs(report.rows[0].exch_oracle - report.rows[0].exch_closed) <= 2e-3);
  }
  SUBCASE("truncation is reported as a failed row") {
    const auto r = run_cli({"verify", "--N", "1", "--k", "0.5", "--dim", "8"});
    CHECK(r.code == kExitFailure);
    CHECK(r.out.find("truncation-error") != std::string::npos);
  }
  SUBCASE("vacuum agrees exactly") {
    const auto report = run_verify(0.0, {0.5}, 20);
    REQUIRE(report.all_ok());
    CHECK(report.rows[0].out_oracle == 0.0);
    CHECK(report.rows[0].exch_oracle == 0.0);
    CHECK(report.rows[0].out_closed == 0.0);
  }
  SUBCASE("k list") {
    const auto report = run_verify(0.5, {0.3, 0.7}, 40);
    CHECK(report.rows.size() == 2);
    CHECK(report.all_ok());
    CHECK(run_cli({"verify", "--k", "1.5"}).code == kExitUsage);
  }
}

TEST_CASE("entropy command") {
  const std::string path = "gaussq_test_state.json";
  {
    std::ofstream f(path);
    f << R"({"s": 1, "hbar": 1, "m": [0, 0], "alpha": [[1.5, 0], [0, 1.5]]})";
  }
  const auto r = run_cli({"entropy", "--state", path});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["entropy"].get<double>() == Approx(kG1).epsilon(1e-12));
  CHECK(doc["pure"].get<bool>() == false);
  CHECK(doc["symplectic_spectrum"][0].get<double>() == Approx(1.5));
  {
    std::ofstream f(path);
    f << R"({"s": 1, "alpha": [[0.1, 0], [0, 0.1]]})";
  }
  CHECK(run_cli({"entropy", "--state", path}).code == kExitFailure);
  std::remove(path.c_str());
  CHECK(run_cli({"entropy", "--state", "does/not/exist.json"}).code == kExitUsage);
}

TEST_CASE("--out writes a file") {
  const std::string path = "gaussq_test_sweep.csv";
  const auto r = run_cli({"sweep", "--steps", "3", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == run_cli({"sweep", "--steps", "3"}).out);
  std::remove(path.c_str());
}
