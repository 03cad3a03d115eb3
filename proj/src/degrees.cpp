#include "srfr/degrees.hpp"

#include <algorithm>
#include <numeric>

namespace srfr {

namespace {

std::vector<int> padded_to(std::vector<int> v, std::size_t m, const char* what) {
  if (v.size() > m) throw std::invalid_argument(std::string(what) + ": more entries than components");
  v.resize(m, 0);
  return v;
}

bool non_increasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

// {mu * M : mu in F_d} independent in the quotient?
bool family_independent(const PolyMatrix& M, const ModuliSet& mods, const MonomialFamily& fam) {
  const PrimeField& F = mods.field();
  RowBasis elim(static_cast<std::size_t>(mods.total_degree()));
  for (std::size_t j = 0; j < fam.components(); ++j) {
    for (int e = 0; e < fam.cutoffs()[j]; ++e) {
      PolyVector p(M.rows());
      p[j] = Polynomial::x_power(F, e);
      if (!elim.insert(residue_of(p, M, mods).flatten(mods)).independent) return false;
    }
  }
  return true;
}

}  // namespace

bool feasible(std::vector<int> d, std::vector<int> f) {
  std::size_t m = std::max(d.size(), f.size());
  d.resize(m, 0);
  f.resize(m, 0);
  for (int v : d)
    if (v < 0) throw std::invalid_argument("feasible: negative degree");
  std::sort(d.rbegin(), d.rend());
  std::sort(f.rbegin(), f.rend());
  long long sd = 0, sf = 0;
  for (std::size_t l = 0; l < m; ++l) {
    sd += d[l];
    sf += f[l];
    if (sd > sf) return false;
  }
  return true;
}

PredictedProfile generic_pivot_degrees(const std::vector<int>& f, const Shift& s, long long r,
                                       std::vector<GreedyStep>* trace) {
  const std::size_t m = s.size();
  if (m == 0) throw std::invalid_argument("generic_pivot_degrees: empty shift");
  std::vector<int> fp = padded_to(f, m, "generic_pivot_degrees");
  long long sigma = std::accumulate(fp.begin(), fp.end(), 0LL);
  if (r < 0 || r > sigma)
    throw std::invalid_argument("generic_pivot_degrees: rank out of range");

  PredictedProfile out;
  out.rank = r;
  std::vector<int> d(m, 0);
  std::vector<bool> closed(m, false);
  std::size_t open = m;
  long long count = 0;

  MonomialStream stream(s);
  // Key levels traversed are bounded by the degree/shift ranges; the guard
  // only trips on an implementation fault.
  int smax = *std::max_element(s.begin(), s.end());
  int smin = *std::min_element(s.begin(), s.end());
  int fmax = *std::max_element(fp.begin(), fp.end());
  long long guard = static_cast<long long>(m) * (fmax + (smax - smin) + 3) + r + 8;
  while (count < r) {
    if (open == 0) throw std::logic_error("generic_pivot_degrees: all components closed early");
    if (--guard < 0) throw std::logic_error("generic_pivot_degrees: walk failed to terminate");
    Monomial mon = stream.next();
    const std::size_t j = mon.index;
    if (closed[j]) {
      if (trace) trace->push_back({mon, GreedyDecision::SkippedClosed});
      continue;
    }
    ++d[j];
    if (feasible(d, fp)) {
      ++count;
      if (trace) trace->push_back({mon, GreedyDecision::Accepted});
    } else {
      --d[j];
      closed[j] = true;
      --open;
      if (trace) trace->push_back({mon, GreedyDecision::Rejected});
    }
  }

  out.pivot_degrees = d;
  out.row_degrees.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.row_degrees[i] = d[i] + s[i];

  if (r == sigma && non_increasing(fp)) {
    NiceForm nf = nice_form(fp, s);
    out.nice_form_applies = nf.applies;
    out.failed_hypothesis = nf.failed_hypothesis;
    if (nf.applies && nf.row_degrees != out.row_degrees)
      throw std::logic_error("generic_pivot_degrees: closed form disagrees with greedy walk");
  }
  return out;
}

NiceForm nice_form(const std::vector<int>& f, const Shift& s) {
  const std::size_t m = s.size();
  if (m == 0) throw std::invalid_argument("nice_form: empty shift");
  std::vector<int> fp = padded_to(f, m, "nice_form");
  if (!non_increasing(fp)) throw std::invalid_argument("nice_form: f must be non-increasing");

  long long total = 0;
  for (std::size_t i = 0; i < m; ++i) total += fp[i] + s[i];
  long long q = total >= 0 ? total / static_cast<long long>(m)
                           : -((-total + static_cast<long long>(m) - 1) / static_cast<long long>(m));
  long long u = total - q * static_cast<long long>(m);

  NiceForm nf;
  nf.quotient = q;
  nf.remainder = u;
  nf.row_degrees.resize(m);
  for (std::size_t i = 0; i < m; ++i)
    nf.row_degrees[i] = static_cast<int>(q) + (static_cast<long long>(i) < u ? 1 : 0);

  int smax = *std::max_element(s.begin(), s.end());
  if (q < smax) {
    nf.failed_hypothesis = 1;
    return nf;
  }
  long long lhs = 0, rhs = 0;
  for (std::size_t l = 0; l + 1 < m; ++l) {
    lhs += nf.row_degrees[l];
    rhs += fp[l] + s[l];
    if (lhs > rhs) {
      nf.failed_hypothesis = 2;
      return nf;
    }
  }
  nf.applies = true;
  return nf;
}

KrylovWitness witness_matrix(const PrimeField& F, const std::vector<int>& f,
                             const std::vector<int>& d) {
  const std::size_t n = f.size();
  const std::size_t m = d.size();
  if (n == 0 || m == 0) throw std::invalid_argument("witness_matrix: empty input");
  for (int v : f)
    if (v < 0) throw std::invalid_argument("witness_matrix: negative degree");
  if (!non_increasing(f) || !non_increasing(d))
    throw std::invalid_argument("witness_matrix: f and d must be non-increasing");
  if (!feasible(d, f)) throw std::invalid_argument("witness_matrix: infeasible d");

  KrylovWitness w;
  w.M = PolyMatrix(m, n);
  std::vector<int> used(n, 0);
  for (std::size_t j = 0; j < m; ++j) {
    int own = 0;
    if (j < n) {
      own = std::min(f[j], d[j]);
      used[j] += own;
      w.M.at(j, j) = Polynomial::constant(F.one());
    }
    int need = d[j] - own;
    int pos = own;
    for (std::size_t c = 0; c < n && need > 0; ++c) {
      int avail = f[c] - used[c];
      if (avail <= 0) continue;
      int take = std::min(avail, need);
      int start = used[c];
      int shifted = start - pos;
      if (shifted < 0) throw std::logic_error("witness_matrix: negative borrowed power");
      w.M.at(j, c) += Polynomial::x_power(F, shifted);
      w.trace.push_back({j, c, start, take, shifted});
      used[c] += take;
      need -= take;
      pos += take;
    }
    if (need > 0) throw std::logic_error("witness_matrix: ran out of columns");
  }

  w.realized_family = MonomialFamily(d);
  std::vector<Polynomial> powers(n);
  for (std::size_t c = 0; c < n; ++c) powers[c] = Polynomial::x_power(F, f[c]);
  ModuliSet mods(F, std::move(powers));
  if (!family_independent(w.M, mods, w.realized_family))
    throw std::logic_error("witness_matrix: constructed family is dependent");
  return w;
}

SrfrWitnessResult srfr_witness(const ModuliSet& mods, const std::vector<int>& N, int D) {
  const std::size_t n = mods.count();
  const PrimeField& F = mods.field();
  if (N.size() != n) throw std::invalid_argument("srfr_witness: bound count mismatch");
  if (D < 1) throw std::invalid_argument("srfr_witness: D must be positive");
  long long sumF = mods.total_degree(), sumN = 0;
  int fmin = mods.degree(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (N[i] < 1 || N[i] > mods.degree(i))
      throw std::invalid_argument("srfr_witness: need 1 <= N_i <= f_i");
    sumN += N[i];
    fmin = std::min(fmin, mods.degree(i));
  }
  if (D - 1 > fmin) throw std::invalid_argument("srfr_witness: need D - 1 <= min f_i");
  if (sumF != sumN + D - 1)
    throw std::invalid_argument("srfr_witness: need sum f = sum N + D - 1");

  SrfrWitnessResult res;
  res.witness.M = PolyMatrix(n + 1, n);
  for (std::size_t j = 0; j < n; ++j) res.witness.M.at(j, j) = Polynomial::constant(F.one());
  int offset = 0;
  for (std::size_t l = 0; l < n; ++l) {
    int take = mods.degree(l) - N[l];
    if (take == 0) continue;
    int shifted = N[l] - offset;
    if (shifted < 0) throw std::logic_error("srfr_witness: negative borrowed power");
    res.witness.M.at(n, l) = Polynomial::x_power(F, shifted);
    res.witness.trace.push_back({n, l, N[l], take, shifted});
    offset += take;
  }
  if (offset != D - 1) throw std::logic_error("srfr_witness: borrowed column count mismatch");

  std::vector<int> d(N.begin(), N.end());
  d.push_back(D - 1);
  res.witness.realized_family = MonomialFamily(d);
  if (!family_independent(res.witness.M, mods, res.witness.realized_family))
    throw std::logic_error("srfr_witness: constructed family is dependent");

  res.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.u[i] = -res.witness.M.at(n, i);
  return res;
}

}  // namespace srfr
