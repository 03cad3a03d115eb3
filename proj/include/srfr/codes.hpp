#ifndef SRFR_CODES_HPP
#define SRFR_CODES_HPP

#include <optional>
#include <vector>

#include "srfr/srfr.hpp"

namespace srfr {

// Evaluation-code parameters: codewords are columns (v_1..v_n)(alpha_j)/d(alpha_j)
// with deg v_i < N, deg d < D; eps bounds the number of corrupted columns.
struct EvalParams {
  PrimeField F;
  std::vector<FieldElement> alphas;  // pairwise distinct evaluation points
  std::size_t n = 1;
  int N = 1;
  int D = 1;
  int eps = 0;
};

// Column errors: support positions (strictly increasing) and the added
// nonzero columns.
struct ErrorPattern {
  std::vector<std::size_t> support;
  std::vector<std::vector<FieldElement>> columns;
};

struct ReceivedWord {
  std::vector<FieldElement> alphas;
  ScalarMatrix omega;  // n x f, column j carries the word at alphas[j]
};

// omega_ij = v_i(alpha_j) / d(alpha_j); throws when d vanishes at a point.
ReceivedWord encode(const EvalParams& p, const std::vector<Polynomial>& v, const Polynomial& d);

ReceivedWord inject_errors(ReceivedWord word, const ErrorPattern& e);

struct DecodeResult {
  bool success = false;
  bool ambiguous = false;  // solution module had kdim > 1
  std::vector<Polynomial> v;
  Polynomial d;                // monic on success
  Polynomial locator;          // removed common factor, monic; roots mark errors
  int lambda_degree = -1;      // its degree
  int rank_s = 0;
  long long kdim = 0;
  std::size_t agreements = 0;  // columns where v/d matches the word
};

// Decode with errors: interpolate the word, solve the reconstruction with
// bounds widened by eps (the error locator multiplies into both sides), strip
// the common factor from the minimal generator, and accept when the original
// bounds hold and at most eps columns disagree.
DecodeResult srfrwe_solve(const ReceivedWord& word, const EvalParams& p);

// Black-box polynomial linear system A(x) y = b(x) queried at points, with
// faulty answers injected at the given columns.
struct BlackBoxPLS {
  PolyMatrix A;               // n x n
  std::vector<Polynomial> b;  // n
  ErrorPattern faults;
};

// Solution of the evaluated system at one point; nullopt when A(alpha) is
// singular.
std::optional<std::vector<FieldElement>> query_pls(const BlackBoxPLS& box,
                                                   const FieldElement& alpha);

// Exact rational solution y = A^{-1} b via cofactor determinants, reduced and
// denominator-monic. Throws when det A = 0.
struct RationalSolution {
  std::vector<Polynomial> v;
  Polynomial d;
};
RationalSolution cramer_solve(const PolyMatrix& A, const std::vector<Polynomial>& b);

Polynomial poly_det(const PolyMatrix& A);

struct PlsweResult {
  DecodeResult decode;
  std::vector<std::size_t> skipped;  // points with singular A(alpha), dropped
  RationalSolution truth;
  bool matches_truth = false;
};

// Full pipeline: query the box at every point (skipping and reporting
// singular ones), inject the box faults, decode, compare against the
// symbolic solution.
PlsweResult plswe_pipeline(const BlackBoxPLS& box, const EvalParams& p);

}  // namespace srfr

#endif
