#include "srfr/field.hpp"

namespace srfr {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
}

FieldElement FieldElement::inverse() const {
  if (v_ == 0) throw std::domain_error("FieldElement: inverse of zero");
  // Extended Euclid on (v, m); m prime guarantees gcd 1.
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m_), nr = static_cast<long long>(v_);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<long long>(m_);
  return raw(static_cast<std::uint64_t>(t), m_);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (m_ == 0) {
    if (e == 0) throw std::domain_error("FieldElement: 0^0 of agnostic zero");
    return FieldElement();
  }
  return raw(powmod(v_, e, m_), m_);
}

}  // namespace srfr
