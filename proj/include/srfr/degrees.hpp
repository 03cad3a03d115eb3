#ifndef SRFR_DEGREES_HPP
#define SRFR_DEGREES_HPP

#include <vector>

#include "srfr/relation.hpp"

namespace srfr {

// Whether a degree-prefix family F_d can be independent in a quotient of
// invariant degrees f: sorted-descending prefix sums of d must be dominated
// by those of f. Both vectors are compared as multisets; shorter one is
// zero-padded.
bool feasible(std::vector<int> d, std::vector<int> f);

struct PredictedProfile {
  std::vector<int> pivot_degrees;  // delta_r, one per component
  std::vector<int> row_degrees;    // delta_r + s
  long long rank = 0;
  // Filled at full rank r = sum f: whether the balanced closed form applies,
  // and which hypothesis broke when it does not (0 none, 1 or 2).
  bool nice_form_applies = false;
  int failed_hypothesis = 0;
};

enum class GreedyDecision { Accepted, Rejected, SkippedClosed };

struct GreedyStep {
  Monomial mon;
  GreedyDecision decision;
};

// Generic pivot degrees for rank r: walk the shifted monomial stream and
// accept each monomial unless acceptance breaks feasibility; a rejected
// component stays closed (domination is monotone in the other components).
// The accepted set is the lexicographically smallest feasible family of
// cardinality r, i.e. the profile reached by a generic matrix. f is padded
// with zeros to the shift length. Optional trace records every decision.
PredictedProfile generic_pivot_degrees(const std::vector<int>& f, const Shift& s, long long r,
                                       std::vector<GreedyStep>* trace = nullptr);

struct NiceForm {
  // u copies of q+1 followed by m-u copies of q, where
  // sum(f_i + s_i) = q*m + u, 0 <= u < m.
  std::vector<int> row_degrees;
  long long quotient = 0;
  long long remainder = 0;
  bool applies = false;      // hypothesis 1: q >= max s; hypothesis 2: prefix sums
  int failed_hypothesis = 0;
};

// Balanced closed form of the full-rank generic row degrees. Valid under the
// two hypotheses when f is non-increasing; generic_pivot_degrees cross-checks
// the equality whenever applies is true.
NiceForm nice_form(const std::vector<int>& f, const Shift& s);

struct BorrowRecord {
  std::size_t row;          // row doing the borrowing
  std::size_t block;        // component block borrowed from
  int start_power;          // first borrowed power of x in that block
  int count;                // columns taken
  int shifted_power;        // power attached to the block's unit in the row
};

struct KrylovWitness {
  PolyMatrix M;
  MonomialFamily realized_family;  // F_d
  std::vector<BorrowRecord> trace;
};

// Constructs an m x n matrix M whose monomial family F_d is independent in
// the quotient with invariant degrees f (verified against the canonical
// power moduli x^f_i). Requires f and d non-increasing and d feasible for f.
// Each row is the component unit plus shifted units of the blocks it borrows
// unused Krylov columns from, left to right.
KrylovWitness witness_matrix(const PrimeField& F, const std::vector<int>& f,
                             const std::vector<int>& d);

struct SrfrWitnessResult {
  KrylovWitness witness;      // M = [Id_n ; -u], (n+1) x n
  std::vector<Polynomial> u;  // right-hand sides realizing the generic profile
};

// Specialization to fraction-reconstruction shape: realizes the family
// F_(N_1..N_n, D-1) for the given moduli, producing u whose solution module
// has the generic (unique-solution) row degrees. Requires N_i <= f_i,
// D - 1 <= min f_i and sum f = sum N + D - 1. Independence is verified
// against the actual moduli.
SrfrWitnessResult srfr_witness(const ModuliSet& mods, const std::vector<int>& N, int D);

}  // namespace srfr

#endif
