#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

#include <vector>

#include "srfr/srfr.hpp"

namespace fixtures {

// Shared-denominator instance over F_11 with two independent solutions even
// though the moduli degrees meet the existence count: a = (x-2)(x-4)(x-8)
// for both components, u_i = v_i / d mod a with v = (2x+6, 8x+2),
// d = 2x^2+2x+2, bounds N = (2,2), D = 3.
struct Counterexample {
  srfr::PrimeField F{11};
  srfr::Polynomial a;
  std::vector<srfr::Polynomial> v;
  srfr::Polynomial d;
  std::vector<srfr::Polynomial> u;
  std::vector<int> N{2, 2};
  int D = 3;
  // The two known (v_1, v_2, d) solutions.
  srfr::PolyVector sol1, sol2;

  srfr::SRFRInstance instance() const {
    return srfr::SRFRInstance(srfr::ModuliSet(F, {a, a}), u, N, D);
  }
};

inline Counterexample counterexample() {
  Counterexample c;
  const srfr::PrimeField& F = c.F;
  c.a = srfr::Polynomial::of(F, {2, 1, 8, 1});
  c.v = {srfr::Polynomial::of(F, {6, 2}), srfr::Polynomial::of(F, {2, 8})};
  c.d = srfr::Polynomial::of(F, {2, 2, 2});
  srfr::Polynomial dinv = *srfr::inverse_mod(c.d, c.a);
  c.u = {(c.v[0] * dinv) % c.a, (c.v[1] * dinv) % c.a};
  c.sol1 = {srfr::Polynomial(), srfr::Polynomial(), srfr::Polynomial::of(F, {10, 9, 4})};
  c.sol2 = {srfr::Polynomial::of(F, {5, 9}), srfr::Polynomial::of(F, {9, 3}),
            srfr::Polynomial::of(F, {3, 8})};
  return c;
}

}  // namespace fixtures

#endif
