#include "srfr/order.hpp"

#include <stdexcept>

namespace srfr {

PolyVector& PolyVector::add_scaled(const PolyVector& other, const Polynomial& c) {
  if (other.size() != size()) throw std::invalid_argument("PolyVector: size mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += c * other.e_[i];
  return *this;
}

PolyVector operator+(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PolyVector: size mismatch");
  PolyVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

PolyVector operator-(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PolyVector: size mismatch");
  PolyVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

PolyVector operator*(const Polynomial& c, const PolyVector& a) {
  PolyVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

PolyMatrix::PolyMatrix(std::vector<PolyVector> rows) : r_(std::move(rows)) {
  if (!r_.empty()) {
    cols_ = r_[0].size();
    for (const auto& row : r_)
      if (row.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged rows");
  }
}

int rdeg(const PolyVector& p, const Shift& s) {
  if (s.size() != p.size()) throw std::invalid_argument("rdeg: shift length mismatch");
  int best = kNegInfDeg;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    int d = p[i].degree() + s[i];
    if (d > best) best = d;
  }
  return best;
}

std::vector<int> rdeg_rows(const PolyMatrix& P, const Shift& s) {
  std::vector<int> out(P.rows());
  for (std::size_t i = 0; i < P.rows(); ++i) out[i] = rdeg(P.row(i), s);
  return out;
}

PivotInfo pivot_of(const PolyVector& p, const Shift& s) {
  if (s.size() != p.size()) throw std::invalid_argument("pivot_of: shift length mismatch");
  if (p.is_zero()) throw std::invalid_argument("pivot_of: zero vector");
  int best = kNegInfDeg;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    int d = p[i].degree() + s[i];
    if (d >= best) {  // rightmost tie-break
      best = d;
      arg = i;
    }
  }
  return {arg, p[arg].degree()};
}

ScalarMatrix leading_matrix(const PolyMatrix& P, const Shift& s, const PrimeField& F) {
  ScalarMatrix L(P.rows(), P.cols());
  for (std::size_t i = 0; i < P.rows(); ++i) {
    int d = rdeg(P.row(i), s);
    if (d == kNegInfDeg) throw std::domain_error("leading_matrix: zero row");
    for (std::size_t j = 0; j < P.cols(); ++j) {
      FieldElement c = P.at(i, j).coeff(d - s[j]);
      L.at(i, j) = c.is_zero() ? F.zero() : c;
    }
  }
  return L;
}

bool is_reduced(const PolyMatrix& P, const Shift& s, const PrimeField& F) {
  return rank_of(leading_matrix(P, s, F)) == P.rows();
}

bool is_weak_popov(const PolyMatrix& P, const Shift& s) {
  std::vector<bool> seen(P.cols(), false);
  for (std::size_t i = 0; i < P.rows(); ++i) {
    std::size_t j = pivot_of(P.row(i), s).index;
    if (seen[j]) return false;
    seen[j] = true;
  }
  return true;
}

bool is_ordered_weak_popov(const PolyMatrix& P, const Shift& s) {
  long long prev = -1;
  for (std::size_t i = 0; i < P.rows(); ++i) {
    std::size_t j = pivot_of(P.row(i), s).index;
    if (static_cast<long long>(j) <= prev) return false;
    prev = static_cast<long long>(j);
  }
  return true;
}

}  // namespace srfr
