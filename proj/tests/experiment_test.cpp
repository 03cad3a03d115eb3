#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "srfr/experiment.hpp"
#include "srfr/rng.hpp"

using namespace srfr;

namespace {

ExperimentConfig small_uniqueness() {
  ExperimentConfig cfg;
  cfg.regime = "uniqueness";
  cfg.p = 101;
  cfg.n = 2;
  cfg.f = {2, 2};
  cfg.N = {1, 2};
  cfg.D = 2;
  cfg.trials = 20;
  cfg.seed = 9;
  return cfg;
}

std::size_t count_lines(const std::string& s) {
  std::size_t k = 0;
  for (char c : s)
    if (c == '\n') ++k;
  return k;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_uniqueness();
  CHECK_NOTHROW(validate_config(cfg));

  SUBCASE("unknown regime") {
    cfg.regime = "bogus";
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  }
  SUBCASE("composite modulus") {
    cfg.p = 10;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  }
  SUBCASE("existence count is enforced") {
    cfg.D = 3;  // sum f = 4, sum N + D - 1 = 5
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  }
  SUBCASE("component count mismatch") {
    cfg.f = {2};
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  }
  SUBCASE("code regime bounds") {
    cfg.regime = "fge";
    cfg.f = {5};
    cfg.N = {2};
    cfg.D = 2;
    cfg.eps = 1;
    CHECK_NOTHROW(validate_config(cfg));
    cfg.eps = 6;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.eps = 1;
    cfg.p = 3;  // fewer field elements than points
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
  }
  SUBCASE("profile regime needs a shift per row") {
    cfg.regime = "generic-degrees";
    cfg.f = {2, 2};
    cfg.shift = {0};
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.shift = {0, 1, -1};
    CHECK_NOTHROW(validate_config(cfg));
  }
  SUBCASE("rank bound regime") {
    cfg.regime = "rank-bound";
    cfg.f = {2};
    cfg.N = {3};
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg.N = {2};
    CHECK_NOTHROW(validate_config(cfg));
  }
}

TEST_CASE("minimal rank ceiling") {
  CHECK(rank_bound_k(5, 3, 4) == 2);
  CHECK(rank_bound_k(4, 3, 2) == 1);
  CHECK(rank_bound_k(5, 2, 8) == 3);
  CHECK(rank_bound_k(7, 3, 1) == 1);
  CHECK(rank_bound_k(3, 3, 1) == 1);
  CHECK(rank_bound_k(3, 3, 2) >= (1LL << 61));
}

TEST_CASE("runs are reproducible") {
  ExperimentConfig cfg = small_uniqueness();
  ExperimentReport r1 = run_experiment(cfg);
  ExperimentReport r2 = run_experiment(cfg);
  CHECK(report_csv(r1) == report_csv(r2));
  CHECK(report_json(r1) == report_json(r2));

  SUBCASE("thread count does not change the records") {
    cfg.threads = 4;
    ExperimentReport r4 = run_experiment(cfg);
    CHECK(report_csv(r4) == report_csv(r1));
  }

  SUBCASE("single trials replay from the config") {
    for (std::size_t id : {std::size_t{0}, std::size_t{7}, std::size_t{19}}) {
      TrialRecord rec = run_single_trial(cfg, id);
      CHECK(rec.trial_id == r1.records[id].trial_id);
      CHECK(rec.digest == r1.records[id].digest);
      CHECK(rec.digest == trial_stream_seed(cfg.seed, id));
      CHECK(rec.s == r1.records[id].s);
      CHECK(rec.kdim == r1.records[id].kdim);
      CHECK(rec.delta == r1.records[id].delta);
      CHECK(rec.success == r1.records[id].success);
    }
  }
}

TEST_CASE("report formats") {
  ExperimentConfig cfg = small_uniqueness();
  cfg.trials = 10;
  ExperimentReport report = run_experiment(cfg);

  std::string csv = report_csv(report);
  CHECK(count_lines(csv) == 11);
  CHECK(csv.rfind("trial_id,p,n,f,N,D,eps,s,kdim,delta,success,micros\n", 0) == 0);

  std::size_t success_cells = 0;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto pos = line.rfind(",1,0");
    if (pos != std::string::npos && pos + 4 == line.size()) ++success_cells;
  }
  CHECK(success_cells == report.successes);

  auto j = nlohmann::json::parse(report_json(report));
  CHECK(j["regime"] == "uniqueness");
  CHECK(j["p"] == 101);
  CHECK(j["trials"] == 10);
  CHECK(j["successes"].get<std::size_t>() == report.successes);
  CHECK(j["fraction"].get<double>() == doctest::Approx(report.fraction));
  REQUIRE(j["records"].size() == 10);
  char digest[2 + 16 + 1];
  std::snprintf(digest, sizeof digest, "0x%016llx",
                static_cast<unsigned long long>(report.records[3].digest));
  CHECK(j["records"][3]["digest"] == std::string(digest));
  CHECK(j["records"][3]["trial_id"] == 3);

  SUBCASE("zero trials") {
    cfg.trials = 0;
    ExperimentReport empty = run_experiment(cfg);
    CHECK(empty.successes == 0);
    CHECK(count_lines(report_csv(empty)) == 1);
  }
}

TEST_CASE("report files") {
  namespace fs = std::filesystem;
  ExperimentConfig cfg = small_uniqueness();
  cfg.trials = 5;
  fs::path dir = fs::temp_directory_path();
  cfg.csv_path = (dir / "srfr_experiment_test.csv").string();
  cfg.json_path = (dir / "srfr_experiment_test.json").string();
  ExperimentReport report = run_experiment(cfg);
  emit_report(report);
  CHECK(slurp(cfg.csv_path) == report_csv(report));
  CHECK(slurp(cfg.json_path) == report_json(report));
  fs::remove(cfg.csv_path);
  fs::remove(cfg.json_path);
}

TEST_CASE("uniqueness holds at large characteristic") {
  ExperimentConfig cfg;
  cfg.regime = "uniqueness";
  cfg.p = 10007;
  cfg.n = 2;
  cfg.f = {3, 3};
  cfg.N = {2, 2};
  cfg.D = 3;
  cfg.trials = 100;
  cfg.seed = 1;
  ExperimentReport report = run_experiment(cfg);
  CHECK(report.fraction >= 0.95);

  // Small fields only get observed, not asserted.
  cfg.p = 11;
  cfg.trials = 50;
  ExperimentReport small = run_experiment(cfg);
  CHECK(small.records.size() == 50);
  CHECK(small.fraction >= 0.0);
  CHECK(small.fraction <= 1.0);
}

TEST_CASE("noiseless reconstruction always succeeds") {
  ExperimentConfig cfg;
  cfg.regime = "fg";
  cfg.p = 101;
  cfg.n = 2;
  cfg.f = {2, 3};
  cfg.N = {2, 3};
  cfg.D = 1;
  cfg.trials = 40;
  cfg.seed = 4;
  ExperimentReport report = run_experiment(cfg);
  CHECK(report.fraction == 1.0);
}

TEST_CASE("decoding regime at the exact radius") {
  ExperimentConfig cfg;
  cfg.regime = "fge";
  cfg.p = 10007;
  cfg.n = 2;
  cfg.f = {5};
  cfg.N = {2};
  cfg.D = 2;
  cfg.eps = 1;
  cfg.trials = 40;
  cfg.seed = 12;
  ExperimentReport report = run_experiment(cfg);
  CHECK(report.fraction == 1.0);
  for (const auto& rec : report.records) CHECK(rec.s >= 1);
}

TEST_CASE("profile prediction regime") {
  ExperimentConfig cfg;
  cfg.regime = "generic-degrees";
  cfg.p = 10007;
  cfg.n = 2;
  cfg.f = {2, 2};
  cfg.shift = {0, 1, -1};
  cfg.trials = 50;
  cfg.seed = 3;
  ExperimentReport report = run_experiment(cfg);
  CHECK(report.fraction >= 0.9);
  for (const auto& rec : report.records) CHECK(rec.delta.size() == 3);

  cfg.p = 2;
  cfg.trials = 20;
  ExperimentReport obs = run_experiment(cfg);
  CHECK(obs.records.size() == 20);
  CHECK(obs.fraction >= 0.0);
}

TEST_CASE("rank stays within the ceiling") {
  ExperimentConfig cfg;
  cfg.regime = "rank-bound";
  cfg.p = 101;
  cfg.n = 2;
  cfg.f = {5};
  cfg.N = {3};
  cfg.D = 4;
  cfg.trials = 50;
  cfg.seed = 8;
  ExperimentReport report = run_experiment(cfg);
  CHECK(report.fraction == 1.0);
}
