#include "srfr/relation.hpp"

#include <algorithm>

namespace srfr {

ModuliSet::ModuliSet(const PrimeField& F, std::vector<Polynomial> moduli)
    : F_(F), a_(std::move(moduli)) {
  if (a_.empty()) throw std::invalid_argument("ModuliSet: no moduli");
  f_.reserve(a_.size());
  for (const auto& a : a_) {
    if (a.is_zero()) throw std::invalid_argument("ModuliSet: zero modulus");
    f_.push_back(a.degree());
  }
}

long long ModuliSet::total_degree() const {
  long long t = 0;
  for (int d : f_) t += d;
  return t;
}

std::vector<int> ModuliSet::degrees_sorted_desc() const {
  std::vector<int> v = f_;
  std::sort(v.rbegin(), v.rend());
  return v;
}

bool ModuliSet::is_divisibility_chain() const {
  std::vector<std::size_t> idx(a_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return f_[x] > f_[y]; });
  for (std::size_t k = 0; k + 1 < idx.size(); ++k)
    if (!(a_[idx[k]] % a_[idx[k + 1]]).is_zero()) return false;
  return true;
}

Residue::Residue(std::vector<Polynomial> coords, const ModuliSet& mods)
    : coords_(std::move(coords)) {
  if (coords_.size() != mods.count()) throw std::invalid_argument("Residue: coordinate count");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = coords_[i] % mods.modulus(i);
}

bool Residue::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<FieldElement> Residue::flatten(const ModuliSet& mods) const {
  std::vector<FieldElement> flat(static_cast<std::size_t>(mods.total_degree()));
  std::size_t off = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    for (int i = 0; i <= coords_[j].degree(); ++i) flat[off + i] = coords_[j].coeff(i);
    off += static_cast<std::size_t>(mods.degree(j));
  }
  return flat;
}

Residue residue_of(const PolyVector& p, const PolyMatrix& M, const ModuliSet& mods) {
  if (p.size() != M.rows()) throw std::invalid_argument("residue_of: vector length mismatch");
  if (M.cols() != mods.count()) throw std::invalid_argument("residue_of: moduli count mismatch");
  std::vector<Polynomial> coords(mods.count());
  for (std::size_t c = 0; c < mods.count(); ++c) {
    Polynomial acc;
    for (std::size_t i = 0; i < p.size(); ++i) acc += p[i] * M.at(i, c);
    coords[c] = std::move(acc);
  }
  return Residue(std::move(coords), mods);
}

namespace {

// Coordinates of x^d e_j * M advanced one degree: multiply by x, reduce.
void step_coords(std::vector<Polynomial>& coords, const ModuliSet& mods) {
  for (std::size_t c = 0; c < coords.size(); ++c)
    coords[c] = coords[c].shifted_up(1) % mods.modulus(c);
}

std::vector<FieldElement> flatten_coords(const std::vector<Polynomial>& coords,
                                         const ModuliSet& mods) {
  std::vector<FieldElement> flat(static_cast<std::size_t>(mods.total_degree()));
  std::size_t off = 0;
  for (std::size_t j = 0; j < coords.size(); ++j) {
    for (int i = 0; i <= coords[j].degree(); ++i) flat[off + i] = coords[j].coeff(i);
    off += static_cast<std::size_t>(mods.degree(j));
  }
  return flat;
}

}  // namespace

RelationBasis relation_basis(const PolyMatrix& M, const ModuliSet& mods, const Shift& s) {
  const std::size_t m = M.rows();
  const std::size_t n = mods.count();
  if (m == 0 || n == 0 || M.cols() != n)
    throw std::invalid_argument("relation_basis: shape mismatch");
  if (s.size() != m) throw std::invalid_argument("relation_basis: shift length mismatch");
  const PrimeField& F = mods.field();
  const long long sigma = mods.total_degree();

  // Residue of the current (smallest untested) monomial of each component.
  std::vector<std::vector<Polynomial>> cur(m);
  std::vector<int> cur_deg(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<Polynomial> coords(n);
    for (std::size_t c = 0; c < n; ++c) coords[c] = M.at(j, c) % mods.modulus(c);
    cur[j] = std::move(coords);
  }

  MonomialStream stream(s);
  RowBasis elim(static_cast<std::size_t>(sigma), /*track_expressions=*/true);
  std::vector<Monomial> accepted;
  std::vector<PolyVector> rows(m, PolyVector(m));
  std::vector<int> delta(m, -1);
  std::size_t open = m;

  // Each component closes by pivot degree <= sigma; anything past this bound
  // is an implementation fault, not an input condition.
  long long guard = static_cast<long long>(m) * (sigma + 2);
  while (open > 0) {
    if (--guard < 0) throw std::logic_error("relation_basis: walk failed to terminate");
    Monomial mon = stream.next();
    const std::size_t j = mon.index;
    if (mon.degree != cur_deg[j]) throw std::logic_error("relation_basis: stream out of sync");

    auto res = elim.insert(flatten_coords(cur[j], mods));
    if (res.independent) {
      accepted.push_back(mon);
      step_coords(cur[j], mods);
      ++cur_deg[j];
      continue;
    }

    // Dependency certificate: x^d e_j - sum coeff_k * (accepted monomial k).
    PolyVector p(m);
    p[j] = Polynomial::x_power(F, mon.degree);
    for (const auto& [k, coeff] : res.combination) {
      const Monomial& mk = accepted[k];
      p[mk.index] -= Polynomial::constant(coeff).shifted_up(mk.degree);
    }
    rows[j] = std::move(p);
    delta[j] = mon.degree;
    stream.retire(j);
    --open;
  }

  RelationBasis out;
  out.rows = PolyMatrix(std::move(rows));
  out.pivot_degrees = std::move(delta);
  out.row_degrees.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.row_degrees[j] = out.pivot_degrees[j] + s[j];
  out.shift = s;
  return out;
}

MonomialFamily row_rank_profile(const PolyMatrix& M, const ModuliSet& mods, const Shift& s) {
  return MonomialFamily(relation_basis(M, mods, s).pivot_degrees);
}

BruteForceProfile brute_force_rrp(const PolyMatrix& M, const ModuliSet& mods, const Shift& s,
                                  int cap) {
  const std::size_t m = M.rows();
  const std::size_t n = mods.count();
  if (m == 0 || n == 0 || M.cols() != n)
    throw std::invalid_argument("brute_force_rrp: shape mismatch");
  if (s.size() != m) throw std::invalid_argument("brute_force_rrp: shift length mismatch");
  if (cap < 0) {
    int fmax = *std::max_element(mods.degrees().begin(), mods.degrees().end());
    int smax = 0;
    for (int v : s) smax = std::max(smax, v < 0 ? -v : v);
    cap = fmax + smax + 1;
  }
  const PrimeField& F = mods.field();

  // All monomials of degree < cap, in shifted order.
  std::vector<Monomial> mons;
  MonomialStream stream(s);
  std::size_t live = m;
  while (live > 0) {
    Monomial mon = stream.next();
    if (mon.degree >= cap) {
      stream.retire(mon.index);
      --live;
      continue;
    }
    mons.push_back(mon);
  }

  ScalarMatrix rows_mat(mons.size(), static_cast<std::size_t>(mods.total_degree()));
  for (std::size_t r = 0; r < mons.size(); ++r) {
    PolyVector p(m);
    p[mons[r].index] = Polynomial::x_power(F, mons[r].degree);
    auto flat = residue_of(p, M, mods).flatten(mods);
    for (std::size_t c = 0; c < flat.size(); ++c) rows_mat.at(r, c) = flat[c];
  }

  RowBasis elim(rows_mat.cols());
  std::vector<int> delta(m, -1);
  for (std::size_t r = 0; r < mons.size(); ++r) {
    bool indep = elim.insert(rows_mat.row(r)).independent;
    const std::size_t j = mons[r].index;
    if (indep) {
      if (delta[j] >= 0)
        throw std::logic_error("brute_force_rrp: acceptance after dependency");
      continue;
    }
    if (delta[j] < 0) delta[j] = mons[r].degree;
  }
  for (std::size_t j = 0; j < m; ++j)
    if (delta[j] < 0)
      throw CapExceeded("brute_force_rrp: component " + std::to_string(j) +
                        " still independent below cap " + std::to_string(cap));
  return {MonomialFamily(delta), delta};
}

long long solution_dim(const RelationBasis& basis, int r) {
  long long dim = 0;
  for (int rho : basis.row_degrees)
    if (rho < r) dim += static_cast<long long>(r) - rho;
  return dim;
}

}  // namespace srfr
