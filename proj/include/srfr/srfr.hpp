#ifndef SRFR_SRFR_HPP
#define SRFR_SRFR_HPP

#include <optional>
#include <vector>

#include "srfr/relation.hpp"

namespace srfr {

// Recover (v_1..v_n, d) with deg v_i < N_i, deg d < D and v_i = d*u_i mod a_i.
// Solution vectors are ordered (v_1..v_n, d); the denominator is the last
// component.
struct SRFRInstance {
  SRFRInstance(ModuliSet mods_, std::vector<Polynomial> u_, std::vector<int> N_, int D_);

  ModuliSet mods;
  std::vector<Polynomial> u;  // deg u_i < f_i
  std::vector<int> N;         // N_i >= 1
  int D;                      // >= 1

  Shift shift() const;  // (-N_1 .. -N_n, -D)
};

// Single fraction v = d*u mod a via the Euclidean remainder walk: the first
// remainder of degree < N gives (v, d) = (r_i, t_i). With deg a = N + D - 1
// the degree bounds always hold; degree_ok reports them in general, and
// reduced additionally requires gcd(d, a) constant, so v/d solves the strong
// (pointwise) reconstruction.
struct RFRResult {
  Polynomial v, d;
  bool degree_ok = false;
  bool reduced = false;
};

RFRResult rfr(const Polynomial& a, const Polynomial& u, int N, int D);

// Componentwise rfr against each modulus (no shared-denominator coupling).
std::vector<RFRResult> vrfr(const ModuliSet& mods, const std::vector<Polynomial>& u,
                            const std::vector<int>& N, int D);

// (n+1) x n matrix [Id_n ; -u]: the relations p with p*R_u = 0 in the
// quotient are exactly the vectors (v_1..v_n, d) with v_i = d*u_i mod a_i.
PolyMatrix build_ru(const PrimeField& F, const std::vector<Polynomial>& u);

struct SolutionSpace {
  RelationBasis basis;                       // n+1 rows, ordered weak Popov
  std::vector<std::size_t> generator_rows;   // rows with negative row degree
  int rank_s = 0;                            // count of generators
  long long kdim = 0;                        // K-dimension of the solution set
  bool unique = false;                       // rank_s == 1
  std::optional<PolyVector> minimal;         // generator of least row degree
};

// Basis of the shifted relation module of R_u; the solutions are its elements
// of negative shifted row degree. Every generator is re-verified against the
// congruences and degree bounds.
SolutionSpace srfr_solve(const SRFRInstance& inst);

// Congruence and degree-bound check for a candidate (v_1..v_n, d).
bool verify_solution(const SRFRInstance& inst, const PolyVector& cand);

// Whether cand lies in the K-span of { x^k * g : g generator, k < -rdeg(g) },
// i.e. is a solution reachable from the basis. Requires cand to satisfy the
// degree bounds.
bool in_solution_span(const SRFRInstance& inst, const SolutionSpace& space, const PolyVector& cand);

}  // namespace srfr

#endif
