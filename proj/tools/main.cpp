#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srfr/codes.hpp"
#include "srfr/degrees.hpp"
#include "srfr/experiment.hpp"
#include "srfr/io.hpp"
#include "srfr/rng.hpp"
#include "srfr/srfr.hpp"

namespace {

using namespace srfr;

void print_vector(const PolyVector& p, const char* indent = "  ") {
  for (std::size_t j = 0; j < p.size(); ++j)
    std::cout << indent << "[" << j << "] " << p[j] << "\n";
}

struct SolveOpts {
  std::string path;
  bool full = false;
  bool euclid = false;
};

int cmd_solve(const SolveOpts& o) {
  SRFRInstance inst = load_instance(o.path);
  if (o.euclid) {
    auto results = vrfr(inst.mods, inst.u, inst.N, inst.D);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::cout << "component " << i << ": v = " << r.v << ", d = " << r.d
                << (r.reduced ? "  (reduced)" : r.degree_ok ? "  (degree ok)" : "  (no solution in bounds)")
                << "\n";
    }
    return 0;
  }
  SolutionSpace sp = srfr_solve(inst);
  std::cout << "rank s        " << sp.rank_s << "\n"
            << "solution dim  " << sp.kdim << "\n"
            << "pivot degrees " << join_ints(sp.basis.pivot_degrees) << "\n"
            << "row degrees   " << join_ints(sp.basis.row_degrees) << "\n"
            << "unique        " << (sp.unique ? "yes" : "no") << "\n";
  if (sp.minimal) {
    std::cout << "minimal solution (v_1..v_n, d):\n";
    print_vector(*sp.minimal);
  } else {
    std::cout << "no solution of negative shifted degree\n";
  }
  if (o.full) {
    for (std::size_t i = 0; i < sp.basis.rows.rows(); ++i) {
      std::cout << "basis row " << i << " (rdeg " << sp.basis.row_degrees[i] << "):\n";
      print_vector(sp.basis.rows.row(i));
    }
  }
  return 0;
}

struct PredictOpts {
  std::vector<int> f;
  std::vector<int> shift;
  long long rank = -1;
  bool trace = false;
};

int cmd_predict(const PredictOpts& o) {
  long long full = std::accumulate(o.f.begin(), o.f.end(), 0LL);
  long long r = o.rank < 0 ? full : o.rank;
  std::vector<GreedyStep> steps;
  PredictedProfile prof = generic_pivot_degrees(o.f, o.shift, r, o.trace ? &steps : nullptr);
  std::cout << "rank          " << prof.rank << "\n"
            << "pivot degrees " << join_ints(prof.pivot_degrees) << "\n"
            << "row degrees   " << join_ints(prof.row_degrees) << "\n";
  if (r == full) {
    if (prof.nice_form_applies) {
      NiceForm nf = nice_form(o.f, o.shift);
      std::cout << "balanced form " << join_ints(nf.row_degrees) << " (q = " << nf.quotient
                << ", u = " << nf.remainder << ")\n";
    } else if (prof.failed_hypothesis != 0) {
      std::cout << "balanced form does not apply (hypothesis " << prof.failed_hypothesis
                << " fails)\n";
    }
  }
  if (o.trace) {
    for (const auto& st : steps) {
      const char* tag = st.decision == GreedyDecision::Accepted    ? "accept"
                        : st.decision == GreedyDecision::Rejected ? "reject"
                                                                  : "skip (closed)";
      std::cout << "  " << st.mon << "  " << tag << "\n";
    }
  }
  return 0;
}

struct WitnessOpts {
  std::uint64_t p = 10007;
  std::vector<int> f;
  std::vector<int> d;
  std::vector<int> N;
  int D = 0;
};

int cmd_witness(const WitnessOpts& o) {
  PrimeField F(o.p);
  if (!o.d.empty()) {
    KrylovWitness w = witness_matrix(F, o.f, o.d);
    std::cout << "realized family cutoffs " << join_ints(w.realized_family.cutoffs()) << "\n";
    for (std::size_t i = 0; i < w.M.rows(); ++i) {
      std::cout << "row " << i << ":\n";
      print_vector(w.M.row(i));
    }
    for (const auto& b : w.trace)
      std::cout << "row " << b.row << " borrows " << b.count << " column(s) of block " << b.block
                << " from x^" << b.start_power << " (unit shifted by x^" << b.shifted_power
                << ")\n";
    return 0;
  }
  std::vector<Polynomial> mods;
  mods.reserve(o.f.size());
  for (int fi : o.f) mods.push_back(Polynomial::x_power(F, fi));
  SrfrWitnessResult res = srfr_witness(ModuliSet(F, std::move(mods)), o.N, o.D);
  std::cout << "realized family cutoffs " << join_ints(res.witness.realized_family.cutoffs())
            << "\n";
  for (std::size_t i = 0; i < res.u.size(); ++i)
    std::cout << "u_" << i << " = " << res.u[i] << "\n";
  return 0;
}

struct DecodeOpts {
  std::string code = "srfrwe";
  std::uint64_t p = 10007;
  std::size_t n = 1;
  std::size_t points = 0;
  int N = 2;
  int D = 1;
  int eps = 1;
  int errors = -1;
  std::uint64_t seed = 1;
};

int cmd_decode(const DecodeOpts& o) {
  DecodeOpts c = o;
  if (c.code == "rs") c.n = 1, c.D = 1;
  if (c.code == "irs") c.D = 1;
  if (c.points == 0) {
    // unique-decoding radius by default
    c.points = static_cast<std::size_t>(c.N + c.D - 1 + 2 * c.eps);
  }
  int injected = c.errors < 0 ? c.eps : c.errors;
  PrimeField F(c.p);
  SplitMix64 rng(c.seed);
  EvalParams params{F, random_distinct_points(rng, F, c.points), c.n, c.N, c.D, c.eps};

  std::vector<Polynomial> v;
  Polynomial d;
  for (int tries = 0;; ++tries) {
    if (tries > 256) throw std::runtime_error("decode: could not sample a reduced instance");
    d = random_poly_below(rng, F, c.D);
    if (d.is_zero()) continue;
    bool ok = true;
    for (const auto& a : params.alphas) ok = ok && !d.evaluate(a).is_zero();
    if (!ok) continue;
    v.assign(c.n, Polynomial());
    Polynomial g = d;
    for (auto& vi : v) {
      vi = random_poly_below(rng, F, c.N);
      g = poly_gcd(g, vi);
    }
    if (g.degree() == 0) break;
  }

  ReceivedWord word = encode(params, v, d);
  ErrorPattern e;
  if (injected > 0) {
    std::vector<bool> used(c.points, false);
    for (int k = 0; k < injected; ++k) {
      std::size_t j;
      do {
        j = static_cast<std::size_t>(rng.below(c.points));
      } while (used[j]);
      used[j] = true;
    }
    for (std::size_t j = 0; j < c.points; ++j) {
      if (!used[j]) continue;
      std::vector<FieldElement> col(c.n);
      bool nonzero = false;
      while (!nonzero)
        for (auto& cc : col) {
          cc = random_element(rng, F);
          nonzero = nonzero || !cc.is_zero();
        }
      e.support.push_back(j);
      e.columns.push_back(std::move(col));
    }
    word = inject_errors(std::move(word), e);
  }

  DecodeResult res = srfrwe_solve(word, params);
  FieldElement li = d.leading().inverse();
  bool exact = res.success && res.d == li * d;
  for (std::size_t i = 0; i < c.n && exact; ++i) exact = res.v[i] == li * v[i];

  std::cout << "code " << c.code << ", " << c.points << " points, " << injected
            << " error column(s)\n"
            << "decode success " << (res.success ? "yes" : "no") << ", ambiguous "
            << (res.ambiguous ? "yes" : "no") << "\n"
            << "rank s " << res.rank_s << ", solution dim " << res.kdim << ", agreements "
            << res.agreements << ", removed factor degree " << res.lambda_degree << "\n"
            << "recovered the sent message: " << (exact ? "yes" : "no") << "\n";
  if (res.success) {
    std::cout << "d = " << res.d << "\n";
    for (std::size_t i = 0; i < res.v.size(); ++i) std::cout << "v_" << i << " = " << res.v[i] << "\n";
  }
  return 0;
}

struct PlsweOpts {
  std::uint64_t p = 10007;
  std::size_t n = 2;
  int degA = 1;
  int degb = -1;
  std::size_t points = 0;
  int eps = 1;
  std::uint64_t seed = 1;
};

int cmd_plswe(const PlsweOpts& o) {
  PrimeField F(o.p);
  SplitMix64 rng(o.seed);
  int degb = o.degb < 0 ? o.degA : o.degb;
  int N = static_cast<int>(o.n) * o.degA + 1;
  int D = N;
  std::size_t points =
      o.points == 0 ? static_cast<std::size_t>(N + D - 1 + 2 * o.eps) : o.points;

  PolyMatrix A(o.n, o.n);
  for (int tries = 0;; ++tries) {
    if (tries > 256) throw std::runtime_error("plswe: could not sample an invertible system");
    for (std::size_t i = 0; i < o.n; ++i)
      for (std::size_t j = 0; j < o.n; ++j) A.at(i, j) = random_poly_below(rng, F, o.degA + 1);
    if (!poly_det(A).is_zero()) break;
  }
  std::vector<Polynomial> b(o.n);
  for (auto& bi : b) bi = random_poly_below(rng, F, degb + 1);

  ErrorPattern faults;
  if (o.eps > 0) {
    std::vector<bool> used(points, false);
    for (int k = 0; k < o.eps; ++k) {
      std::size_t j;
      do {
        j = static_cast<std::size_t>(rng.below(points));
      } while (used[j]);
      used[j] = true;
    }
    for (std::size_t j = 0; j < points; ++j) {
      if (!used[j]) continue;
      std::vector<FieldElement> col(o.n);
      bool nonzero = false;
      while (!nonzero)
        for (auto& cc : col) {
          cc = random_element(rng, F);
          nonzero = nonzero || !cc.is_zero();
        }
      faults.support.push_back(j);
      faults.columns.push_back(std::move(col));
    }
  }

  EvalParams params{F, random_distinct_points(rng, F, points), o.n, N, D, o.eps};
  BlackBoxPLS box{std::move(A), std::move(b), std::move(faults)};
  PlsweResult res = plswe_pipeline(box, params);

  std::cout << points << " query points, " << res.skipped.size() << " singular point(s) skipped, "
            << o.eps << " faulty answer(s)\n"
            << "decode success " << (res.decode.success ? "yes" : "no") << ", matches the exact solution: "
            << (res.matches_truth ? "yes" : "no") << "\n"
            << "denominator d = " << res.truth.d << "\n";
  for (std::size_t i = 0; i < res.truth.v.size(); ++i)
    std::cout << "y_" << i << " = (" << res.truth.v[i] << ") / d\n";
  return 0;
}

struct ExperimentOpts {
  ExperimentConfig cfg;
  double require = -1.0;
};

int cmd_experiment(const ExperimentOpts& o) {
  ExperimentReport report = run_experiment(o.cfg);
  emit_report(report);
  std::cout << "regime " << o.cfg.regime << ": " << report.successes << "/" << o.cfg.trials
            << " trials succeeded (fraction " << report.fraction << ")\n";
  if (o.require >= 0.0 && report.fraction < o.require) {
    std::cerr << "fraction " << report.fraction << " below required " << o.require << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous rational function reconstruction over prime fields"};
  app.require_subcommand(1);

  SolveOpts so;
  auto* solve = app.add_subcommand("solve", "Solve a reconstruction instance from a file");
  solve->add_option("instance", so.path, "instance file (see README for the format)")->required();
  solve->add_flag("--full", so.full, "print the whole relation basis");
  solve->add_flag("--euclid", so.euclid, "componentwise Euclidean reconstruction instead");

  PredictOpts po;
  auto* predict = app.add_subcommand("predict", "Predict generic pivot and row degrees");
  predict->add_option("--f", po.f, "quotient invariant degrees")->required()->delimiter(',');
  predict->add_option("--shift", po.shift, "row shift")->required()->delimiter(',');
  predict->add_option("--rank", po.rank, "target rank (default: full rank sum f)");
  predict->add_flag("--trace", po.trace, "print every accept/reject decision");

  WitnessOpts wo;
  auto* witness = app.add_subcommand("witness", "Construct a matrix realizing the generic profile");
  witness->add_option("--p", wo.p, "field characteristic");
  witness->add_option("--f", wo.f, "quotient invariant degrees")->required()->delimiter(',');
  witness->add_option("--d", wo.d, "target pivot degrees")->delimiter(',');
  witness->add_option("--N", wo.N, "numerator bounds (reconstruction shape)")->delimiter(',');
  witness->add_option("--D", wo.D, "denominator bound (reconstruction shape)");

  DecodeOpts dco;
  auto* decode = app.add_subcommand("decode", "Encode, corrupt and decode a random codeword");
  decode->add_option("--code", dco.code, "rs | irs | srfrwe")
      ->check(CLI::IsMember({"rs", "irs", "srfrwe"}));
  decode->add_option("--p", dco.p, "field characteristic");
  decode->add_option("--n", dco.n, "number of interleaved rows");
  decode->add_option("--points", dco.points, "codeword length (default: unique-decoding radius)");
  decode->add_option("--N", dco.N, "numerator degree bound");
  decode->add_option("--D", dco.D, "denominator degree bound");
  decode->add_option("--eps", dco.eps, "error tolerance used by the decoder");
  decode->add_option("--errors", dco.errors, "corrupted columns to inject (default: eps)");
  decode->add_option("--seed", dco.seed, "PRNG seed");

  PlsweOpts plo;
  auto* plswe = app.add_subcommand("plswe", "Solve a random polynomial linear system from faulty evaluations");
  plswe->add_option("--p", plo.p, "field characteristic");
  plswe->add_option("--n", plo.n, "system dimension");
  plswe->add_option("--degA", plo.degA, "max degree of matrix entries");
  plswe->add_option("--degb", plo.degb, "max degree of right-hand side (default: degA)");
  plswe->add_option("--points", plo.points, "query points (default: unique-decoding radius)");
  plswe->add_option("--eps", plo.eps, "faulty evaluation points");
  plswe->add_option("--seed", plo.seed, "PRNG seed");

  ExperimentOpts eo;
  auto* exp = app.add_subcommand("experiment", "Run a seeded Monte Carlo experiment");
  exp->add_option("--regime", eo.cfg.regime, "uniqueness | fg | fge | generic-degrees | rank-bound")
      ->check(CLI::IsMember({"uniqueness", "fg", "fge", "generic-degrees", "rank-bound"}));
  exp->add_option("--p", eo.cfg.p, "field characteristic");
  exp->add_option("--n", eo.cfg.n, "number of components");
  exp->add_option("--f", eo.cfg.f, "moduli degrees (or point count for fge)")->delimiter(',');
  exp->add_option("--N", eo.cfg.N, "numerator bounds")->delimiter(',');
  exp->add_option("--D", eo.cfg.D, "denominator bound");
  exp->add_option("--eps", eo.cfg.eps, "error count (fge)");
  exp->add_option("--trials", eo.cfg.trials, "number of trials");
  exp->add_option("--seed", eo.cfg.seed, "PRNG seed");
  exp->add_option("--shift", eo.cfg.shift, "row shift (generic-degrees)")->delimiter(',');
  exp->add_option("--csv", eo.cfg.csv_path, "write per-trial CSV here");
  exp->add_option("--json", eo.cfg.json_path, "write the JSON report here");
  exp->add_option("--require", eo.require, "exit 2 when the success fraction falls below this");
  exp->add_flag("--timing", eo.cfg.timing, "record per-trial wall time (breaks byte-identical output)");
  exp->add_option("--threads", eo.cfg.threads, "worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(so);
    if (predict->parsed()) return cmd_predict(po);
    if (witness->parsed()) {
      if (wo.d.empty() == (wo.N.empty() || wo.D <= 0))
        throw std::invalid_argument("witness: give either --d, or --N together with --D");
      return cmd_witness(wo);
    }
    if (decode->parsed()) return cmd_decode(dco);
    if (plswe->parsed()) return cmd_plswe(plo);
    if (exp->parsed()) return cmd_experiment(eo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
