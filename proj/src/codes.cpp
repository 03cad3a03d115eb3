#include "srfr/codes.hpp"

#include <algorithm>

namespace srfr {

ReceivedWord encode(const EvalParams& p, const std::vector<Polynomial>& v, const Polynomial& d) {
  if (v.size() != p.n) throw std::invalid_argument("encode: component count mismatch");
  const std::size_t f = p.alphas.size();
  ReceivedWord w;
  w.alphas = p.alphas;
  w.omega = ScalarMatrix(p.n, f);
  for (std::size_t j = 0; j < f; ++j) {
    FieldElement dv = d.evaluate(p.alphas[j]);
    if (dv.is_zero()) throw std::domain_error("encode: denominator vanishes at a point");
    FieldElement inv = dv.inverse();
    for (std::size_t i = 0; i < p.n; ++i) w.omega.at(i, j) = v[i].evaluate(p.alphas[j]) * inv;
  }
  return w;
}

ReceivedWord inject_errors(ReceivedWord word, const ErrorPattern& e) {
  if (e.support.size() != e.columns.size())
    throw std::invalid_argument("inject_errors: support/column count mismatch");
  const std::size_t f = word.alphas.size();
  for (std::size_t k = 0; k < e.support.size(); ++k) {
    if (k > 0 && e.support[k] <= e.support[k - 1])
      throw std::invalid_argument("inject_errors: support not strictly increasing");
    std::size_t j = e.support[k];
    if (j >= f) throw std::invalid_argument("inject_errors: support out of range");
    if (e.columns[k].size() != word.omega.rows())
      throw std::invalid_argument("inject_errors: column height mismatch");
    bool nonzero = false;
    for (const auto& c : e.columns[k]) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw std::invalid_argument("inject_errors: zero error column");
    for (std::size_t i = 0; i < word.omega.rows(); ++i) word.omega.at(i, j) += e.columns[k][i];
  }
  return word;
}

DecodeResult srfrwe_solve(const ReceivedWord& word, const EvalParams& p) {
  const std::size_t n = word.omega.rows();
  const std::size_t f = word.alphas.size();
  if (n != p.n || word.omega.cols() != f)
    throw std::invalid_argument("srfrwe_solve: word shape mismatch");
  if (p.eps < 0 || p.N < 1 || p.D < 1) throw std::invalid_argument("srfrwe_solve: bad bounds");

  DecodeResult res;
  Polynomial a = vanishing_poly(p.F, word.alphas);
  std::vector<Polynomial> moduli(n, a);
  ModuliSet mods(p.F, std::move(moduli));
  std::vector<Polynomial> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = word.omega.row(i);
    u[i] = interpolate(p.F, word.alphas, row);
  }
  SRFRInstance inst(std::move(mods), std::move(u),
                    std::vector<int>(n, p.N + p.eps), p.D + p.eps);
  SolutionSpace space = srfr_solve(inst);
  res.rank_s = space.rank_s;
  res.kdim = space.kdim;
  res.ambiguous = space.kdim > 1;
  if (!space.minimal) return res;

  const PolyVector& gen = *space.minimal;
  Polynomial psi = gen[n];
  if (psi.is_zero()) return res;
  Polynomial g = psi;
  for (std::size_t i = 0; i < n; ++i) g = poly_gcd(g, gen[i]);
  res.locator = g;
  res.lambda_degree = g.degree();
  Polynomial d = gen[n] / g;
  std::vector<Polynomial> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = gen[i] / g;
  FieldElement lead_inv = d.leading().inverse();
  d = lead_inv * d;
  for (auto& vi : v) vi = lead_inv * vi;

  for (std::size_t j = 0; j < f; ++j) {
    FieldElement dv = d.evaluate(word.alphas[j]);
    if (dv.is_zero()) continue;
    bool agree = true;
    for (std::size_t i = 0; i < n && agree; ++i)
      agree = v[i].evaluate(word.alphas[j]) == word.omega.at(i, j) * dv;
    if (agree) ++res.agreements;
  }

  bool bounds = d.degree() < p.D;
  for (std::size_t i = 0; i < n; ++i) bounds = bounds && v[i].degree() < p.N;
  res.v = std::move(v);
  res.d = std::move(d);
  res.success = bounds && res.agreements + static_cast<std::size_t>(p.eps) >= f;
  return res;
}

std::optional<std::vector<FieldElement>> query_pls(const BlackBoxPLS& box,
                                                   const FieldElement& alpha) {
  const std::size_t n = box.A.rows();
  ScalarMatrix Aa(n, n);
  std::vector<FieldElement> ba(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) Aa.at(i, j) = box.A.at(i, j).evaluate(alpha);
    ba[i] = box.b[i].evaluate(alpha);
  }
  LinearSolveResult sol = solve_linear(Aa, ba);
  if (!sol.solved) return std::nullopt;
  return sol.x;
}

Polynomial poly_det(const PolyMatrix& A) {
  const std::size_t n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("poly_det: not square");
  if (n == 1) return A.at(0, 0);
  Polynomial det;
  for (std::size_t i = 0; i < n; ++i) {
    if (A.at(i, 0).is_zero()) continue;
    PolyMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = A.at(r, c);
      ++mr;
    }
    Polynomial term = A.at(i, 0) * poly_det(minor);
    if (i % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

RationalSolution cramer_solve(const PolyMatrix& A, const std::vector<Polynomial>& b) {
  const std::size_t n = A.rows();
  if (A.cols() != n || b.size() != n) throw std::invalid_argument("cramer_solve: shape mismatch");
  Polynomial det = poly_det(A);
  if (det.is_zero()) throw std::domain_error("cramer_solve: singular system");
  std::vector<Polynomial> nums(n);
  for (std::size_t i = 0; i < n; ++i) {
    PolyMatrix Ai = A;
    for (std::size_t r = 0; r < n; ++r) Ai.at(r, i) = b[r];
    nums[i] = poly_det(Ai);
  }
  Polynomial g = det;
  for (const auto& num : nums) g = poly_gcd(g, num);
  RationalSolution sol;
  sol.d = det / g;
  sol.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.v[i] = nums[i] / g;
  FieldElement lead_inv = sol.d.leading().inverse();
  sol.d = lead_inv * sol.d;
  for (auto& vi : sol.v) vi = lead_inv * vi;
  return sol;
}

PlsweResult plswe_pipeline(const BlackBoxPLS& box, const EvalParams& p) {
  const std::size_t n = box.A.rows();
  if (p.n != n) throw std::invalid_argument("plswe_pipeline: component count mismatch");
  PlsweResult out;

  std::vector<FieldElement> kept;
  std::vector<std::vector<FieldElement>> cols;
  std::vector<std::size_t> kept_index(p.alphas.size(), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < p.alphas.size(); ++j) {
    auto y = query_pls(box, p.alphas[j]);
    if (!y) {
      out.skipped.push_back(j);
      continue;
    }
    kept_index[j] = kept.size();
    kept.push_back(p.alphas[j]);
    cols.push_back(std::move(*y));
  }

  ReceivedWord word;
  word.alphas = kept;
  word.omega = ScalarMatrix(n, kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) word.omega.at(i, j) = cols[j][i];

  // Faults refer to original point positions; drop the ones at skipped points.
  ErrorPattern remapped;
  for (std::size_t k = 0; k < box.faults.support.size(); ++k) {
    std::size_t j = box.faults.support[k];
    if (j >= kept_index.size() || kept_index[j] == static_cast<std::size_t>(-1)) continue;
    remapped.support.push_back(kept_index[j]);
    remapped.columns.push_back(box.faults.columns[k]);
  }
  word = inject_errors(std::move(word), remapped);

  EvalParams pk = p;
  pk.alphas = kept;
  out.decode = srfrwe_solve(word, pk);
  out.truth = cramer_solve(box.A, box.b);
  out.matches_truth = out.decode.success && out.decode.d == out.truth.d &&
                      out.decode.v == out.truth.v;
  return out;
}

}  // namespace srfr
