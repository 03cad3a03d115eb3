#ifndef SRFR_EXPERIMENT_HPP
#define SRFR_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srfr/codes.hpp"
#include "srfr/degrees.hpp"

namespace srfr {

// Seeded Monte Carlo run. Regimes:
//   uniqueness      random moduli and u; success = solution module has rank 1
//   fg              random reduced (v, d), u built from them; success = rank 1
//                   and (v, d) lies in the solution span
//   fge             evaluation code with eps random column errors; success =
//                   exact decode (f and N carry one entry: point count, bound)
//   generic-degrees random matrix against power moduli; success = pivot
//                   degrees match the predicted generic profile
//   rank-bound      equal moduli/equal bound; success = rank within the
//                   minimal-k ceiling bound
struct ExperimentConfig {
  std::string regime = "uniqueness";
  std::uint64_t p = 10007;
  std::size_t n = 2;
  std::vector<int> f;
  std::vector<int> N;
  int D = 1;
  int eps = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  Shift shift;  // generic-degrees only; length = row count m
  std::string csv_path;
  std::string json_path;
  // Off by default so reports are byte-identical across runs; switching it on
  // emits measured wall time and waives that guarantee.
  bool timing = false;
  unsigned threads = 1;
};

struct TrialRecord {
  std::size_t trial_id = 0;
  // Substream seed; re-materializes the trial via run_single_trial.
  std::uint64_t digest = 0;
  int s = 0;
  long long kdim = 0;
  std::vector<int> delta;
  bool success = false;
  long long micros = 0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;
  std::size_t successes = 0;
  double fraction = 0.0;
};

void validate_config(const ExperimentConfig& cfg);

// One trial, fully determined by (config, trial_id).
TrialRecord run_single_trial(const ExperimentConfig& cfg, std::size_t trial_id);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

// CSV columns: trial_id,p,n,f,N,D,eps,s,kdim,delta,success,micros.
// Vector cells are semicolon-joined.
std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);

// Writes the configured csv/json paths (skipping empty ones).
void emit_report(const ExperimentReport& report);

// Smallest positive k with k*(f - N) >= D - 1; huge (bound vacuous) when
// f = N and D > 1.
long long rank_bound_k(int f, int N, int D);

}  // namespace srfr

#endif
