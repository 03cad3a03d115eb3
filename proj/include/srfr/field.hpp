#ifndef SRFR_FIELD_HPP
#define SRFR_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace srfr {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

class FieldElement;

// Prime field F_p for a word-size prime p. Lightweight value type: copying a
// field is copying its modulus.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  FieldElement zero() const;
  FieldElement one() const;
  // Reduces any signed integer into [0, p).
  FieldElement element(long long v) const;
  FieldElement element_u(std::uint64_t v) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;
};

// A residue together with its modulus. The default-constructed element is a
// field-agnostic zero (modulus 0) so that zero-filled containers combine
// cleanly with elements of any field; every nonzero element carries its
// modulus. Mixing nonzero elements of distinct moduli throws.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::uint64_t v, const PrimeField& f) : v_(v % f.modulus()), m_(f.modulus()) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return m_; }
  bool is_zero() const { return v_ == 0; }

  FieldElement operator-() const {
    return v_ == 0 ? FieldElement() : raw(m_ - v_, m_);
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    std::uint64_t m = joint(a, b);
    if (m == 0) return FieldElement();
    std::uint64_t s = a.v_ + b.v_;
    if (s >= m) s -= m;
    return raw(s, m);
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    std::uint64_t m = joint(a, b);
    if (m == 0) return FieldElement();
    std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + m - b.v_;
    return raw(s, m);
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    std::uint64_t m = joint(a, b);
    if (m == 0) return FieldElement();
    using u128 = unsigned __int128;
    return raw(static_cast<std::uint64_t>(u128(a.v_) * b.v_ % m), m);
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.v_ != b.v_) return false;
    return a.v_ == 0 || a.m_ == b.m_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.v_;
  }

 private:
  static FieldElement raw(std::uint64_t v, std::uint64_t m) {
    FieldElement e;
    e.v_ = v;
    e.m_ = m;
    return e;
  }
  // Common modulus of two operands; 0 means both are agnostic zeros.
  static std::uint64_t joint(const FieldElement& a, const FieldElement& b) {
    if (a.m_ == 0) return b.m_;
    if (b.m_ == 0) return a.m_;
    if (a.m_ != b.m_)
      throw std::invalid_argument("FieldElement: mixed moduli " + std::to_string(a.m_) +
                                  " and " + std::to_string(b.m_));
    return a.m_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t m_ = 0;

  friend class PrimeField;
};

inline FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
inline FieldElement PrimeField::one() const { return FieldElement(1, *this); }
inline FieldElement PrimeField::element_u(std::uint64_t v) const { return FieldElement(v, *this); }
inline FieldElement PrimeField::element(long long v) const {
  long long p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<std::uint64_t>(r), *this);
}

}  // namespace srfr

#endif
