#include "srfr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

#include <json.hpp>

#include "srfr/io.hpp"
#include "srfr/rng.hpp"

namespace srfr {

namespace {

constexpr int kSampleTries = 256;

ModuliSet random_moduli(SplitMix64& rng, const PrimeField& F, const std::vector<int>& f) {
  std::vector<Polynomial> a;
  a.reserve(f.size());
  for (int d : f) a.push_back(random_monic(rng, F, d));
  return ModuliSet(F, std::move(a));
}

// Reduced (v, d): d nonzero, coprime to every modulus, gcd(d, v_1..v_n) = 1.
struct SampledFraction {
  std::vector<Polynomial> v;
  Polynomial d;
};

SampledFraction sample_reduced_fraction(SplitMix64& rng, const PrimeField& F,
                                        const ModuliSet& mods, const std::vector<int>& N, int D) {
  for (int t = 0; t < kSampleTries; ++t) {
    Polynomial d = random_poly_below(rng, F, D);
    if (d.is_zero()) continue;
    bool coprime = true;
    for (std::size_t i = 0; i < mods.count() && coprime; ++i)
      coprime = poly_gcd(d, mods.modulus(i)).degree() == 0;
    if (!coprime) continue;
    std::vector<Polynomial> v(mods.count());
    Polynomial g = d;
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = random_poly_below(rng, F, N[i]);
      g = poly_gcd(g, v[i]);
    }
    if (g.degree() != 0) continue;
    return {std::move(v), std::move(d)};
  }
  throw std::runtime_error("sample_reduced_fraction: no reduced sample found");
}

TrialRecord trial_uniqueness(const ExperimentConfig& cfg, TrialRecord rec, SplitMix64& rng) {
  PrimeField F(cfg.p);
  ModuliSet mods = random_moduli(rng, F, cfg.f);
  std::vector<Polynomial> u(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) u[i] = random_poly_below(rng, F, cfg.f[i]);
  SRFRInstance inst(std::move(mods), std::move(u), cfg.N, cfg.D);
  SolutionSpace sp = srfr_solve(inst);
  rec.s = sp.rank_s;
  rec.kdim = sp.kdim;
  rec.delta = sp.basis.pivot_degrees;
  rec.success = sp.rank_s == 1;
  return rec;
}

TrialRecord trial_fg(const ExperimentConfig& cfg, TrialRecord rec, SplitMix64& rng) {
  PrimeField F(cfg.p);
  ModuliSet mods = random_moduli(rng, F, cfg.f);
  SampledFraction fr = sample_reduced_fraction(rng, F, mods, cfg.N, cfg.D);
  std::vector<Polynomial> u(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    auto dinv = inverse_mod(fr.d, mods.modulus(i));
    if (!dinv) throw std::logic_error("trial_fg: denominator not invertible");
    u[i] = (fr.v[i] * *dinv) % mods.modulus(i);
  }
  SRFRInstance inst(std::move(mods), std::move(u), cfg.N, cfg.D);
  SolutionSpace sp = srfr_solve(inst);
  PolyVector cand(cfg.n + 1);
  for (std::size_t i = 0; i < cfg.n; ++i) cand[i] = fr.v[i];
  cand[cfg.n] = fr.d;
  bool span_ok = verify_solution(inst, cand) && in_solution_span(inst, sp, cand);
  rec.s = sp.rank_s;
  rec.kdim = sp.kdim;
  rec.delta = sp.basis.pivot_degrees;
  rec.success = sp.rank_s == 1 && span_ok;
  return rec;
}

TrialRecord trial_fge(const ExperimentConfig& cfg, TrialRecord rec, SplitMix64& rng) {
  PrimeField F(cfg.p);
  const std::size_t f = static_cast<std::size_t>(cfg.f[0]);
  const int N = cfg.N[0];
  EvalParams params{F, random_distinct_points(rng, F, f), cfg.n, N, cfg.D, cfg.eps};

  std::vector<Polynomial> v;
  Polynomial d;
  for (int t = 0;; ++t) {
    if (t >= kSampleTries) throw std::runtime_error("trial_fge: no usable (v, d) sample found");
    d = random_poly_below(rng, F, cfg.D);
    if (d.is_zero()) continue;
    bool ok = true;
    for (const auto& a : params.alphas) ok = ok && !d.evaluate(a).is_zero();
    if (!ok) continue;
    v.assign(cfg.n, Polynomial());
    Polynomial g = d;
    for (std::size_t i = 0; i < cfg.n; ++i) {
      v[i] = random_poly_below(rng, F, N);
      g = poly_gcd(g, v[i]);
    }
    if (g.degree() == 0) break;
  }

  ReceivedWord word = encode(params, v, d);
  if (cfg.eps > 0) {
    ErrorPattern e;
    std::vector<bool> used(f, false);
    for (int k = 0; k < cfg.eps; ++k) {
      std::size_t j;
      do {
        j = static_cast<std::size_t>(rng.below(f));
      } while (used[j]);
      used[j] = true;
    }
    for (std::size_t j = 0; j < f; ++j) {
      if (!used[j]) continue;
      std::vector<FieldElement> col(cfg.n);
      bool nonzero = false;
      while (!nonzero) {
        for (auto& c : col) {
          c = random_element(rng, F);
          nonzero = nonzero || !c.is_zero();
        }
      }
      e.support.push_back(j);
      e.columns.push_back(std::move(col));
    }
    word = inject_errors(std::move(word), e);
  }

  DecodeResult res = srfrwe_solve(word, params);
  FieldElement lead_inv = d.leading().inverse();
  Polynomial d_monic = lead_inv * d;
  bool exact = res.success && res.d == d_monic;
  for (std::size_t i = 0; i < cfg.n && exact; ++i) exact = res.v[i] == lead_inv * v[i];
  rec.s = res.rank_s;
  rec.kdim = res.kdim;
  rec.success = exact;
  return rec;
}

TrialRecord trial_generic_degrees(const ExperimentConfig& cfg, TrialRecord rec, SplitMix64& rng) {
  PrimeField F(cfg.p);
  const std::size_t m = cfg.shift.size();
  std::vector<Polynomial> powers(cfg.n);
  for (std::size_t c = 0; c < cfg.n; ++c) powers[c] = Polynomial::x_power(F, cfg.f[c]);
  ModuliSet mods(F, std::move(powers));
  PolyMatrix M(m, cfg.n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < cfg.n; ++c) M.at(r, c) = random_poly_below(rng, F, cfg.f[c]);
  RelationBasis basis = relation_basis(M, mods, cfg.shift);
  PredictedProfile pred = generic_pivot_degrees(cfg.f, cfg.shift, mods.total_degree());
  rec.delta = basis.pivot_degrees;
  rec.kdim = solution_dim(basis, 0);
  for (int rho : basis.row_degrees)
    if (rho < 0) ++rec.s;
  rec.success = basis.pivot_degrees == pred.pivot_degrees;
  return rec;
}

TrialRecord trial_rank_bound(const ExperimentConfig& cfg, TrialRecord rec, SplitMix64& rng) {
  PrimeField F(cfg.p);
  Polynomial a = random_monic(rng, F, cfg.f[0]);
  std::vector<Polynomial> moduli(cfg.n, a);
  std::vector<Polynomial> u(cfg.n);
  for (auto& ui : u) ui = random_poly_below(rng, F, cfg.f[0]);
  SRFRInstance inst(ModuliSet(F, std::move(moduli)), std::move(u),
                    std::vector<int>(cfg.n, cfg.N[0]), cfg.D);
  SolutionSpace sp = srfr_solve(inst);
  rec.s = sp.rank_s;
  rec.kdim = sp.kdim;
  rec.delta = sp.basis.pivot_degrees;
  rec.success = sp.rank_s <= rank_bound_k(cfg.f[0], cfg.N[0], cfg.D);
  return rec;
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(std::string("experiment config: ") + msg);
}

}  // namespace

long long rank_bound_k(int f, int N, int D) {
  if (D <= 1) return 1;
  if (f <= N) return std::numeric_limits<long long>::max() / 2;
  return (static_cast<long long>(D) - 2) / (f - N) + 1;  // ceil((D-1)/(f-N))
}

void validate_config(const ExperimentConfig& cfg) {
  require(is_prime_u64(cfg.p), "p must be prime");
  require(cfg.n >= 1, "n must be positive");
  require(cfg.D >= 1, "D must be positive");
  require(cfg.eps >= 0, "eps must be nonnegative");
  const std::string& r = cfg.regime;
  if (r == "uniqueness" || r == "fg") {
    require(cfg.f.size() == cfg.n && cfg.N.size() == cfg.n, "f and N need one entry per component");
    long long sf = 0, sN = 0;
    for (std::size_t i = 0; i < cfg.n; ++i) {
      require(cfg.f[i] >= 1, "moduli degrees must be positive");
      require(cfg.N[i] >= 1, "N entries must be positive");
      sf += cfg.f[i];
      sN += cfg.N[i];
    }
    require(sf == sN + cfg.D - 1, "existence count needs sum f = sum N + D - 1");
  } else if (r == "fge") {
    require(cfg.f.size() == 1 && cfg.N.size() == 1, "fge takes scalar f (points) and N");
    require(cfg.f[0] >= 1 && cfg.N[0] >= 1, "point count and N must be positive");
    require(static_cast<std::uint64_t>(cfg.f[0]) <= cfg.p, "more points than field elements");
    require(cfg.eps <= cfg.f[0], "more errors than points");
  } else if (r == "generic-degrees") {
    require(cfg.f.size() == cfg.n, "f needs one entry per modulus");
    for (int d : cfg.f) require(d >= 0, "degrees must be nonnegative");
    require(cfg.shift.size() >= cfg.n, "shift length (rows) must be >= n");
  } else if (r == "rank-bound") {
    require(cfg.f.size() == 1 && cfg.N.size() == 1, "rank-bound takes scalar f and N");
    require(cfg.f[0] >= cfg.N[0] && cfg.N[0] >= 1, "need f >= N >= 1");
  } else {
    require(false, "unknown regime");
  }
}

TrialRecord run_single_trial(const ExperimentConfig& cfg, std::size_t trial_id) {
  TrialRecord rec;
  rec.trial_id = trial_id;
  rec.digest = trial_stream_seed(cfg.seed, trial_id);
  SplitMix64 rng(rec.digest);
  auto start = std::chrono::steady_clock::now();
  if (cfg.regime == "uniqueness")
    rec = trial_uniqueness(cfg, std::move(rec), rng);
  else if (cfg.regime == "fg")
    rec = trial_fg(cfg, std::move(rec), rng);
  else if (cfg.regime == "fge")
    rec = trial_fge(cfg, std::move(rec), rng);
  else if (cfg.regime == "generic-degrees")
    rec = trial_generic_degrees(cfg, std::move(rec), rng);
  else if (cfg.regime == "rank-bound")
    rec = trial_rank_bound(cfg, std::move(rec), rng);
  else
    throw std::invalid_argument("run_single_trial: unknown regime");
  if (cfg.timing) {
    auto stop = std::chrono::steady_clock::now();
    rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  }
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  ExperimentReport report;
  report.config = cfg;
  report.records.resize(cfg.trials);

  unsigned workers = std::max(1u, cfg.threads);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(cfg.trials, 1)));
  if (workers <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) report.records[t] = run_single_trial(cfg, t);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t t = cursor.fetch_add(1);
          if (t >= cfg.trials) return;
          report.records[t] = run_single_trial(cfg, t);
        }
      });
    for (auto& th : pool) th.join();
  }

  for (const auto& r : report.records) report.successes += r.success ? 1 : 0;
  report.fraction = cfg.trials ? static_cast<double>(report.successes) / static_cast<double>(cfg.trials) : 0.0;
  return report;
}

std::string report_csv(const ExperimentReport& report) {
  const ExperimentConfig& c = report.config;
  std::string out = "trial_id,p,n,f,N,D,eps,s,kdim,delta,success,micros\n";
  const std::string fixed = std::to_string(c.p) + "," + std::to_string(c.n) + "," +
                            join_ints(c.f) + "," + join_ints(c.N) + "," + std::to_string(c.D) +
                            "," + std::to_string(c.eps);
  for (const auto& r : report.records) {
    out += std::to_string(r.trial_id) + "," + fixed + "," + std::to_string(r.s) + "," +
           std::to_string(r.kdim) + "," + join_ints(r.delta) + "," + (r.success ? "1" : "0") +
           "," + std::to_string(r.micros) + "\n";
  }
  return out;
}

std::string report_json(const ExperimentReport& report) {
  nlohmann::json j;
  const ExperimentConfig& c = report.config;
  j["regime"] = c.regime;
  j["p"] = c.p;
  j["n"] = c.n;
  j["f"] = c.f;
  j["N"] = c.N;
  j["D"] = c.D;
  j["eps"] = c.eps;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  if (!c.shift.empty()) j["shift"] = c.shift;
  j["successes"] = report.successes;
  j["fraction"] = report.fraction;
  auto& recs = j["records"] = nlohmann::json::array();
  for (const auto& r : report.records) {
    char digest[19];
    std::snprintf(digest, sizeof digest, "0x%016llx", static_cast<unsigned long long>(r.digest));
    recs.push_back({{"trial_id", r.trial_id},
                    {"digest", digest},
                    {"s", r.s},
                    {"kdim", r.kdim},
                    {"delta", r.delta},
                    {"success", r.success},
                    {"micros", r.micros}});
  }
  return j.dump(2) + "\n";
}

void emit_report(const ExperimentReport& report) {
  if (!report.config.csv_path.empty()) {
    std::ofstream out(report.config.csv_path);
    if (!out) throw std::runtime_error("emit_report: cannot write " + report.config.csv_path);
    out << report_csv(report);
  }
  if (!report.config.json_path.empty()) {
    std::ofstream out(report.config.json_path);
    if (!out) throw std::runtime_error("emit_report: cannot write " + report.config.json_path);
    out << report_json(report);
  }
}

}  // namespace srfr
