#include "srfr/linalg.hpp"

#include <stdexcept>

namespace srfr {

namespace {
constexpr std::size_t npos = static_cast<std::size_t>(-1);
}

ScalarMatrix ScalarMatrix::identity(const PrimeField& F, std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

std::vector<FieldElement> ScalarMatrix::row(std::size_t i) const {
  return std::vector<FieldElement>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("ScalarMatrix: shape mismatch in product");
  ScalarMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

std::vector<FieldElement> ScalarMatrix::apply(const std::vector<FieldElement>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("ScalarMatrix: shape mismatch in apply");
  std::vector<FieldElement> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
  return y;
}

LinearSolveResult solve_linear(const ScalarMatrix& A, const std::vector<FieldElement>& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<FieldElement>> w(m, std::vector<FieldElement>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = A.at(i, j);
    w[i][n] = b[i];
  }

  LinearSolveResult res;
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = npos;
    for (std::size_t i = r; i < m; ++i)
      if (!w[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == npos) continue;
    std::swap(w[r], w[piv]);
    FieldElement inv = w[r][c].inverse();
    for (std::size_t j = c; j <= n; ++j) w[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || w[i][c].is_zero()) continue;
      FieldElement f = w[i][c];
      for (std::size_t j = c; j <= n; ++j) w[i][j] -= f * w[r][j];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  res.rank = r;
  for (std::size_t i = r; i < m; ++i)
    if (!w[i][n].is_zero()) return res;  // inconsistent
  if (r < n) return res;                 // underdetermined
  res.solved = true;
  res.x.assign(n, FieldElement());
  for (std::size_t i = 0; i < r; ++i) res.x[pivot_col_of_row[i]] = w[i][n];
  return res;
}

RankProfile rank_profile(const ScalarMatrix& A) {
  RankProfile out;
  RowBasis basis(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    if (basis.insert(A.row(i)).independent) out.pivot_rows.push_back(i);
  out.rank = out.pivot_rows.size();
  // Column profile via forward elimination over the accepted rows.
  std::vector<std::vector<FieldElement>> w;
  w.reserve(out.rank);
  for (std::size_t i : out.pivot_rows) w.push_back(A.row(i));
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < w.size(); ++c) {
    std::size_t piv = npos;
    for (std::size_t i = r; i < w.size(); ++i)
      if (!w[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == npos) continue;
    std::swap(w[r], w[piv]);
    FieldElement inv = w[r][c].inverse();
    for (std::size_t j = c; j < A.cols(); ++j) w[r][j] *= inv;
    for (std::size_t i = r + 1; i < w.size(); ++i) {
      if (w[i][c].is_zero()) continue;
      FieldElement f = w[i][c];
      for (std::size_t j = c; j < A.cols(); ++j) w[i][j] -= f * w[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank_of(const ScalarMatrix& A) {
  RowBasis basis(A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) basis.insert(A.row(i));
  return basis.rank();
}

std::size_t nullity_of(const ScalarMatrix& A) { return A.cols() - rank_of(A); }

RowBasis::InsertResult RowBasis::insert(std::vector<FieldElement> row) {
  if (row.size() != width_) throw std::invalid_argument("RowBasis: row width mismatch");
  InsertResult res;
  std::vector<FieldElement> combo(stored_.size());
  std::size_t lead = 0;
  while (lead < width_) {
    if (row[lead].is_zero()) {
      ++lead;
      continue;
    }
    std::size_t owner = npos;
    for (std::size_t k = 0; k < stored_.size(); ++k)
      if (stored_[k].lead == lead) {
        owner = k;
        break;
      }
    if (owner == npos) break;  // new pivot column: independent
    FieldElement c = row[lead];
    combo[owner] += c;
    const auto& srow = stored_[owner].row;
    for (std::size_t j = lead; j < width_; ++j) row[j] -= c * srow[j];
  }

  if (lead == width_) {
    // Dependent.
    if (track_) {
      std::vector<FieldElement> acc(stored_.size() + 1);
      for (std::size_t k = 0; k < stored_.size(); ++k) {
        if (combo[k].is_zero()) continue;
        for (const auto& [j, cf] : stored_[k].expr) acc[j] += combo[k] * cf;
      }
      for (std::size_t j = 0; j < acc.size(); ++j)
        if (!acc[j].is_zero()) res.combination.emplace_back(j, acc[j]);
    }
    return res;
  }

  res.independent = true;
  Stored s;
  s.lead = lead;
  FieldElement inv = row[lead].inverse();
  s.row = std::move(row);
  for (auto& e : s.row) e *= inv;
  if (track_) {
    std::vector<FieldElement> acc(stored_.size() + 1);
    acc[stored_.size()] = inv;  // the new row's own ordinal
    for (std::size_t k = 0; k < stored_.size(); ++k) {
      if (combo[k].is_zero()) continue;
      for (const auto& [j, cf] : stored_[k].expr) acc[j] -= inv * combo[k] * cf;
    }
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (!acc[j].is_zero()) s.expr.emplace_back(j, acc[j]);
  }
  stored_.push_back(std::move(s));
  return res;
}

}  // namespace srfr
