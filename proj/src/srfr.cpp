#include "srfr/srfr.hpp"

namespace srfr {

SRFRInstance::SRFRInstance(ModuliSet mods_, std::vector<Polynomial> u_, std::vector<int> N_,
                           int D_)
    : mods(std::move(mods_)), u(std::move(u_)), N(std::move(N_)), D(D_) {
  const std::size_t n = mods.count();
  if (u.size() != n || N.size() != n)
    throw std::invalid_argument("SRFRInstance: component count mismatch");
  if (D < 1) throw std::invalid_argument("SRFRInstance: D must be positive");
  for (std::size_t i = 0; i < n; ++i) {
    if (N[i] < 1) throw std::invalid_argument("SRFRInstance: N_i must be positive");
    if (u[i].degree() >= mods.degree(i))
      throw std::invalid_argument("SRFRInstance: u_i not reduced against its modulus");
  }
}

Shift SRFRInstance::shift() const {
  Shift s(N.size() + 1);
  for (std::size_t i = 0; i < N.size(); ++i) s[i] = -N[i];
  s.back() = -D;
  return s;
}

RFRResult rfr(const Polynomial& a, const Polynomial& u, int N, int D) {
  if (N < 1 || D < 1) throw std::invalid_argument("rfr: bounds must be positive");
  if (a.degree() < 1) throw std::invalid_argument("rfr: modulus must have degree >= 1");
  if (u.degree() >= a.degree()) throw std::invalid_argument("rfr: u not reduced");
  RFRResult res;
  auto rows = extended_euclidean(a, u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].r.degree() < N) {
      res.v = rows[i].r;
      res.d = rows[i].t;
      break;
    }
  }
  res.degree_ok = res.d.degree() < D && !res.d.is_zero();
  res.reduced = res.degree_ok && poly_gcd(res.d, a).degree() == 0;
  return res;
}

std::vector<RFRResult> vrfr(const ModuliSet& mods, const std::vector<Polynomial>& u,
                            const std::vector<int>& N, int D) {
  if (u.size() != mods.count() || N.size() != mods.count())
    throw std::invalid_argument("vrfr: component count mismatch");
  std::vector<RFRResult> out;
  out.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out.push_back(rfr(mods.modulus(i), u[i], N[i], D));
  return out;
}

PolyMatrix build_ru(const PrimeField& F, const std::vector<Polynomial>& u) {
  const std::size_t n = u.size();
  if (n == 0) throw std::invalid_argument("build_ru: empty u");
  PolyMatrix R(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    R.at(i, i) = Polynomial::constant(F.one());
    R.at(n, i) = -u[i];
  }
  return R;
}

SolutionSpace srfr_solve(const SRFRInstance& inst) {
  const PrimeField& F = inst.mods.field();
  PolyMatrix R = build_ru(F, inst.u);
  SolutionSpace sp;
  sp.basis = relation_basis(R, inst.mods, inst.shift());

  int best = 0;
  for (std::size_t i = 0; i < sp.basis.rows.rows(); ++i) {
    int rho = sp.basis.row_degrees[i];
    if (rho >= 0) continue;
    sp.generator_rows.push_back(i);
    if (!verify_solution(inst, sp.basis.rows.row(i)))
      throw std::logic_error("srfr_solve: generator fails verification");
    if (rho < best) {
      best = rho;
      sp.minimal = sp.basis.rows.row(i);
    }
  }
  sp.rank_s = static_cast<int>(sp.generator_rows.size());
  sp.kdim = solution_dim(sp.basis, 0);
  sp.unique = sp.rank_s == 1;
  return sp;
}

bool verify_solution(const SRFRInstance& inst, const PolyVector& cand) {
  const std::size_t n = inst.mods.count();
  if (cand.size() != n + 1) return false;
  const Polynomial& d = cand[n];
  if (d.degree() >= inst.D) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cand[i].degree() >= inst.N[i]) return false;
    if (!((cand[i] - d * inst.u[i]) % inst.mods.modulus(i)).is_zero()) return false;
  }
  return true;
}

namespace {

// Coefficient flattening against the degree bounds (N_1..N_n, D).
std::vector<FieldElement> flatten_bounded(const PolyVector& p, const std::vector<int>& N, int D) {
  std::size_t width = static_cast<std::size_t>(D);
  for (int b : N) width += static_cast<std::size_t>(b);
  std::vector<FieldElement> flat(width);
  std::size_t off = 0;
  for (std::size_t i = 0; i < N.size(); ++i) {
    for (int k = 0; k <= p[i].degree(); ++k) flat[off + k] = p[i].coeff(k);
    off += static_cast<std::size_t>(N[i]);
  }
  const Polynomial& d = p[N.size()];
  for (int k = 0; k <= d.degree(); ++k) flat[off + k] = d.coeff(k);
  return flat;
}

}  // namespace

bool in_solution_span(const SRFRInstance& inst, const SolutionSpace& space,
                      const PolyVector& cand) {
  const std::size_t n = inst.mods.count();
  if (cand.size() != n + 1) return false;
  if (cand[n].degree() >= inst.D) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (cand[i].degree() >= inst.N[i]) return false;

  std::size_t width = static_cast<std::size_t>(inst.D);
  for (int b : inst.N) width += static_cast<std::size_t>(b);
  RowBasis span(width);
  for (std::size_t row : space.generator_rows) {
    int rho = space.basis.row_degrees[row];
    for (int k = 0; k < -rho; ++k) {
      PolyVector shifted(n + 1);
      for (std::size_t c = 0; c <= n; ++c)
        shifted[c] = space.basis.rows.at(row, c).shifted_up(k);
      span.insert(flatten_bounded(shifted, inst.N, inst.D));
    }
  }
  return !span.insert(flatten_bounded(cand, inst.N, inst.D)).independent;
}

}  // namespace srfr
