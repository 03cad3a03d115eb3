#ifndef SRFR_ORDER_HPP
#define SRFR_ORDER_HPP

#include <compare>
#include <cstddef>
#include <limits>
#include <ostream>
#include <queue>
#include <vector>

#include "srfr/linalg.hpp"
#include "srfr/poly.hpp"

namespace srfr {

// Integer shift vector weighting each vector component. Component indices are
// 0-based throughout.
using Shift = std::vector<int>;

// Row degree of the zero vector; ordered below every finite degree and never
// entered into arithmetic.
constexpr int kNegInfDeg = std::numeric_limits<int>::min();

// x^degree e_index.
struct Monomial {
  int degree = 0;
  std::size_t index = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << "x^" << m.degree << "*e" << m.index;
  }
};

// Shifted term-over-position order: compare (degree + s[index], index)
// lexicographically. Total order on monomials.
inline std::strong_ordering stop_compare(const Monomial& a, const Monomial& b, const Shift& s) {
  int ka = a.degree + s[a.index], kb = b.degree + s[b.index];
  if (ka != kb) return ka <=> kb;
  return a.index <=> b.index;
}

inline bool stop_less(const Monomial& a, const Monomial& b, const Shift& s) {
  return stop_compare(a, b, s) < 0;
}

// Lazy increasing enumeration of all monomials on m components under the
// shifted order. retire(i) stops emitting component i (the enumeration over
// the remaining components is unchanged).
class MonomialStream {
 public:
  explicit MonomialStream(Shift s) : s_(std::move(s)) {
    for (std::size_t i = 0; i < s_.size(); ++i) heap_.push({s_[i], i, 0});
  }

  bool exhausted() const { return heap_.empty(); }

  Monomial next() {
    if (heap_.empty()) throw std::logic_error("MonomialStream: all components retired");
    Node n = heap_.top();
    heap_.pop();
    if (!retired(n.index)) heap_.push({n.key + 1, n.index, n.degree + 1});
    while (!heap_.empty() && retired(heap_.top().index)) heap_.pop();
    return {n.degree, n.index};
  }

  void retire(std::size_t index) {
    if (index >= s_.size()) throw std::invalid_argument("MonomialStream: bad index");
    if (retired_.size() < s_.size()) retired_.resize(s_.size(), false);
    retired_[index] = true;
    // Keep the top live so next() and exhausted() never see stale nodes.
    while (!heap_.empty() && retired(heap_.top().index)) heap_.pop();
  }

 private:
  struct Node {
    int key;
    std::size_t index;
    int degree;
    // min-heap: smallest (key, index) first
    friend bool operator<(const Node& a, const Node& b) {
      if (a.key != b.key) return a.key > b.key;
      return a.index > b.index;
    }
  };
  bool retired(std::size_t i) const { return i < retired_.size() && retired_[i]; }

  Shift s_;
  std::priority_queue<Node> heap_;
  std::vector<bool> retired_;
};

// Degree-prefix monomial family F_d = { x^i e_j : i < d[j] }.
class MonomialFamily {
 public:
  MonomialFamily() = default;
  explicit MonomialFamily(std::vector<int> cutoffs) : d_(std::move(cutoffs)) {
    for (int c : d_)
      if (c < 0) throw std::invalid_argument("MonomialFamily: negative cutoff");
  }

  const std::vector<int>& cutoffs() const { return d_; }
  std::size_t components() const { return d_.size(); }
  bool contains(const Monomial& m) const {
    return m.index < d_.size() && m.degree < d_[m.index];
  }
  long long cardinality() const {
    long long n = 0;
    for (int c : d_) n += c;
    return n;
  }
  friend bool operator==(const MonomialFamily&, const MonomialFamily&) = default;

 private:
  std::vector<int> d_;
};

// Row vector of polynomials.
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(std::size_t n) : e_(n) {}
  PolyVector(std::initializer_list<Polynomial> l) : e_(l) {}

  std::size_t size() const { return e_.size(); }
  Polynomial& operator[](std::size_t i) { return e_[i]; }
  const Polynomial& operator[](std::size_t i) const { return e_[i]; }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  // *this += c * other
  PolyVector& add_scaled(const PolyVector& other, const Polynomial& c);

  friend PolyVector operator+(const PolyVector& a, const PolyVector& b);
  friend PolyVector operator-(const PolyVector& a, const PolyVector& b);
  friend PolyVector operator*(const Polynomial& c, const PolyVector& a);
  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  std::vector<Polynomial> e_;
};

// Matrix with polynomial entries, stored as rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, PolyVector(cols)) {}
  explicit PolyMatrix(std::vector<PolyVector> rows);

  std::size_t rows() const { return r_.size(); }
  std::size_t cols() const { return cols_; }
  PolyVector& row(std::size_t i) { return r_[i]; }
  const PolyVector& row(std::size_t i) const { return r_[i]; }
  Polynomial& at(std::size_t i, std::size_t j) { return r_[i][j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return r_[i][j]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<PolyVector> r_;
};

// Shifted row degree: max over nonzero entries of deg(p_i) + s[i], or the
// -inf sentinel for the zero vector.
int rdeg(const PolyVector& p, const Shift& s);
std::vector<int> rdeg_rows(const PolyMatrix& P, const Shift& s);

struct PivotInfo {
  std::size_t index;
  int degree;
};

// s-pivot of a nonzero vector: the rightmost entry attaining the shifted row
// degree. Coincides with the largest monomial of p under the shifted order.
PivotInfo pivot_of(const PolyVector& p, const Shift& s);

// Entry (i, j) is the coefficient of degree rdeg_s(row i) - s[j] in P[i][j].
// Throws on zero rows.
ScalarMatrix leading_matrix(const PolyMatrix& P, const Shift& s, const PrimeField& F);

// P is s-reduced iff its leading matrix has full row rank.
bool is_reduced(const PolyMatrix& P, const Shift& s, const PrimeField& F);
// Weak Popov: pairwise distinct pivot indices; ordered: strictly increasing.
bool is_weak_popov(const PolyMatrix& P, const Shift& s);
bool is_ordered_weak_popov(const PolyMatrix& P, const Shift& s);

}  // namespace srfr

#endif
