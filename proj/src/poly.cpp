#include "srfr/poly.hpp"

#include <stdexcept>

namespace srfr {

Polynomial Polynomial::of(const PrimeField& F, std::initializer_list<long long> coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(F.element(v));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::x_power(const PrimeField& F, int degree) {
  if (degree < 0) throw std::invalid_argument("Polynomial: negative x power");
  std::vector<FieldElement> c(degree + 1, F.zero());
  c.back() = F.one();
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("Polynomial: cannot normalize zero monic");
  return leading().inverse() * *this;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  FieldElement acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  if (c.is_zero()) return Polynomial();
  std::vector<FieldElement> r(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = c * a.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("Polynomial: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<FieldElement> c(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    FieldElement c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c.value() != 1) os << c.value();
    if (i > 0) {
      if (c.value() != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial: division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  FieldElement lead_inv = b.leading().inverse();
  std::vector<FieldElement> rem(a.coeffs());
  std::vector<FieldElement> quot(a.degree() - b.degree() + 1);
  for (int i = a.degree(); i >= b.degree(); --i) {
    FieldElement c = rem[i];
    if (c.is_zero()) continue;
    FieldElement q = c * lead_inv;
    quot[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= q * b.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

std::vector<EeaRow> extended_euclidean(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("extended_euclidean: both inputs zero");
  // Seed a one; the constant needs a field to live in.
  const PrimeField F((a.is_zero() ? b : a).leading().modulus());
  std::vector<EeaRow> rows;
  rows.push_back({a, Polynomial::constant(F.one()), Polynomial()});
  rows.push_back({b, Polynomial(), Polynomial::constant(F.one())});
  while (!rows.back().r.is_zero()) {
    const EeaRow& prev = rows[rows.size() - 2];
    const EeaRow& last = rows.back();
    auto [q, r] = divrem(prev.r, last.r);
    rows.push_back({r, prev.s - q * last.s, prev.t - q * last.t});
  }
  return rows;
}

std::optional<Polynomial> inverse_mod(const Polynomial& a, const Polynomial& m) {
  if (m.degree() < 1) throw std::invalid_argument("inverse_mod: modulus must have degree >= 1");
  Polynomial ar = a % m;
  if (ar.is_zero()) return std::nullopt;
  auto rows = extended_euclidean(m, ar);
  const EeaRow& g = rows[rows.size() - 2];
  if (g.r.degree() != 0) return std::nullopt;
  return (g.r.leading().inverse() * g.t) % m;
}

Polynomial vanishing_poly(const PrimeField& F, std::span<const FieldElement> alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j)
      if (alphas[i] == alphas[j]) throw std::invalid_argument("vanishing_poly: repeated point");
  Polynomial acc = Polynomial::constant(F.one());
  for (const FieldElement& a : alphas) acc *= Polynomial({-a, F.one()});
  return acc;
}

Polynomial interpolate(const PrimeField& F, std::span<const FieldElement> alphas,
                       std::span<const FieldElement> values) {
  if (alphas.size() != values.size())
    throw std::invalid_argument("interpolate: point/value count mismatch");
  Polynomial acc;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    Polynomial num = Polynomial::constant(F.one());
    FieldElement den = F.one();
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      if (j == i) continue;
      num *= Polynomial({-alphas[j], F.one()});
      FieldElement diff = alphas[i] - alphas[j];
      if (diff.is_zero()) throw std::invalid_argument("interpolate: repeated point");
      den *= diff;
    }
    acc += (values[i] / den) * num;
  }
  return acc;
}

}  // namespace srfr
