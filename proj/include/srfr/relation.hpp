#ifndef SRFR_RELATION_HPP
#define SRFR_RELATION_HPP

#include <stdexcept>
#include <vector>

#include "srfr/order.hpp"

namespace srfr {

// Diagonal moduli a_0..a_{n-1} (nonzero, not necessarily monic or coprime)
// defining the quotient K = K[x]^n / <a_i e_i>, of K-dimension
// sum deg a_i. Degree-prediction statements additionally assume the degrees
// read as invariant degrees (divisibility chain); elimination itself does not.
class ModuliSet {
 public:
  ModuliSet(const PrimeField& F, std::vector<Polynomial> moduli);

  const PrimeField& field() const { return F_; }
  std::size_t count() const { return a_.size(); }
  const Polynomial& modulus(std::size_t i) const { return a_[i]; }
  int degree(std::size_t i) const { return f_[i]; }
  const std::vector<int>& degrees() const { return f_; }
  long long total_degree() const;
  // Non-increasing view of the degrees; user order untouched.
  std::vector<int> degrees_sorted_desc() const;
  // True when the moduli can be arranged so each divides the previous.
  bool is_divisibility_chain() const;

 private:
  PrimeField F_;
  std::vector<Polynomial> a_;
  std::vector<int> f_;
};

// Element of the quotient: one coordinate per modulus, deg coord_i < f_i.
class Residue {
 public:
  Residue() = default;
  // Reduces each coordinate against its modulus.
  Residue(std::vector<Polynomial> coords, const ModuliSet& mods);

  std::size_t size() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;
  // Coefficient vector over the monomial basis {x^i e_j : i < f_j}, component
  // blocks concatenated in order; length = total degree.
  std::vector<FieldElement> flatten(const ModuliSet& mods) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  std::vector<Polynomial> coords_;
};

// Image of the row vector p under p -> p*M, reduced in the quotient.
Residue residue_of(const PolyVector& p, const PolyMatrix& M, const ModuliSet& mods);

// Basis of the relation module { p in K[x]^m : p*M = 0 in K }, in shifted
// ordered weak Popov form: row i has pivot index i, pivot degree
// pivot_degrees[i], monic pivot entry, and row_degrees = pivot_degrees + s.
struct RelationBasis {
  PolyMatrix rows;
  std::vector<int> pivot_degrees;
  std::vector<int> row_degrees;
  Shift shift;
};

// Incremental elimination along the shifted monomial stream. A monomial whose
// residue depends on the accepted ones closes its component: the dependency
// certificate is exactly the new basis row, and all larger monomials of that
// component are skipped (their dependency follows by multiplying the
// certificate by x).
RelationBasis relation_basis(const PolyMatrix& M, const ModuliSet& mods, const Shift& s);

// Accepted monomials of the elimination: lexicographically smallest
// independent family, always of degree-prefix shape F_delta.
MonomialFamily row_rank_profile(const PolyMatrix& M, const ModuliSet& mods, const Shift& s);

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BruteForceProfile {
  MonomialFamily family;
  std::vector<int> pivot_degrees;
};

// Independent oracle for the row rank profile: materializes residues of all
// monomials of degree < cap as a dense matrix and takes the lexicographically
// first independent rows. cap < 0 selects max f + max |s| + 1. Throws
// CapExceeded when some component never goes dependent below the cap.
BruteForceProfile brute_force_rrp(const PolyMatrix& M, const ModuliSet& mods, const Shift& s,
                                  int cap = -1);

// K-dimension of the relation-module slice of row degree < r:
// sum over rows of max(0, r - row_degree).
long long solution_dim(const RelationBasis& basis, int r);

}  // namespace srfr

#endif
