#ifndef SRFR_LINALG_HPP
#define SRFR_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "srfr/field.hpp"

namespace srfr {

// Dense row-major matrix over F_p.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  static ScalarMatrix identity(const PrimeField& F, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElement& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<FieldElement> row(std::size_t i) const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const;

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> a_;
};

struct LinearSolveResult {
  bool solved = false;
  std::vector<FieldElement> x;
  std::size_t rank = 0;
};

// Exact Gaussian elimination for A x = b (square or rectangular). When the
// system is inconsistent or underdetermined, solved = false and rank reports
// rank(A).
LinearSolveResult solve_linear(const ScalarMatrix& A, const std::vector<FieldElement>& b);

struct RankProfile {
  std::size_t rank = 0;
  // Lexicographically-first independent row set, and pivot columns in
  // acceptance order.
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

RankProfile rank_profile(const ScalarMatrix& A);

std::size_t rank_of(const ScalarMatrix& A);
std::size_t nullity_of(const ScalarMatrix& A);

// Incremental row-space eliminator. Rows are inserted one at a time; each is
// reduced against the accepted ones (kept normalized with monic leading
// entries at distinct columns). A row reducing to zero is dependent, and its
// expression over the previously *accepted* original rows can be reported
// when expression tracking is on.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width, bool track_expressions = false)
      : width_(width), track_(track_expressions) {}

  struct InsertResult {
    bool independent = false;
    // For dependent rows (tracking on): inserted = sum coeff_k * accepted_k,
    // keyed by acceptance ordinal.
    std::vector<std::pair<std::size_t, FieldElement>> combination;
  };

  InsertResult insert(std::vector<FieldElement> row);
  std::size_t rank() const { return stored_.size(); }
  std::size_t width() const { return width_; }

 private:
  struct Stored {
    std::vector<FieldElement> row;  // monic at lead
    std::size_t lead;
    // Reduced row as combination of original accepted rows (tracking only).
    std::vector<std::pair<std::size_t, FieldElement>> expr;
  };
  std::size_t width_;
  bool track_;
  std::vector<Stored> stored_;
};

}  // namespace srfr

#endif
