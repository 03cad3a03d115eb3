#ifndef SRFR_POLY_HPP
#define SRFR_POLY_HPP

#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "srfr/field.hpp"

namespace srfr {

// Dense univariate polynomial over F_p, coefficients lowest-first, trailing
// zeros stripped. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(FieldElement c) { return Polynomial({c}); }
  // c0 + c1 x + c2 x^2 + ... reduced into F.
  static Polynomial of(const PrimeField& F, std::initializer_list<long long> coeffs);
  static Polynomial x_power(const PrimeField& F, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FieldElement coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : FieldElement();
  }
  FieldElement leading() const {
    if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero");
    return c_.back();
  }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  bool is_monic() const { return !c_.empty() && c_.back().value() == 1; }
  Polynomial monic() const;

  FieldElement evaluate(const FieldElement& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  // Multiplication by x^k.
  Polynomial shifted_up(int k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<FieldElement> c_;
};

// Exact division with remainder: a = q*b + r, deg r < deg b. Throws on b = 0.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
inline Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).second; }
inline Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }

// Monic gcd; gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// One row of the extended Euclidean scheme: s*a + t*b = r.
struct EeaRow {
  Polynomial r, s, t;
};

// Full remainder sequence of (a, b), starting with the seed rows
// (a, 1, 0) and (b, 0, 1); remainder degrees are strictly decreasing from
// row 1 on. The last row has r = 0, the one before holds the gcd (not
// normalized monic here).
std::vector<EeaRow> extended_euclidean(const Polynomial& a, const Polynomial& b);

// Inverse of a mod m when gcd(a, m) = 1, otherwise nullopt.
std::optional<Polynomial> inverse_mod(const Polynomial& a, const Polynomial& m);

// prod (x - alpha_i); empty set gives 1.
Polynomial vanishing_poly(const PrimeField& F, std::span<const FieldElement> alphas);

// Lagrange interpolation through distinct points; degree < #points.
Polynomial interpolate(const PrimeField& F, std::span<const FieldElement> alphas,
                       std::span<const FieldElement> values);

}  // namespace srfr

#endif
