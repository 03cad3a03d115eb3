#ifndef SRFR_RNG_HPP
#define SRFR_RNG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "srfr/poly.hpp"

namespace srfr {

// SplitMix64 (Steele, Lea, Flood 2014): fixed-increment counter with a
// 64-bit finalizer. Chosen for reproducibility: the full stream is defined
// by these constants alone, with no platform or library dependence.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    s_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = s_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64: zero bound");
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t s_;
};

// Seed of the independent substream for one trial. Documented derivation:
// mix the run seed with an odd multiple of the trial id, then take one
// SplitMix64 output. A trial is fully reproducible from this value.
inline std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t trial_id) {
  return SplitMix64(seed ^ (0xD1B54A32D192ED03ULL * (trial_id + 1))).next();
}

inline FieldElement random_element(SplitMix64& rng, const PrimeField& F) {
  return F.element_u(rng.below(F.modulus()));
}

inline FieldElement random_nonzero(SplitMix64& rng, const PrimeField& F) {
  return F.element_u(1 + rng.below(F.modulus() - 1));
}

// Uniform over all polynomials of degree < bound (leading zeros allowed, so
// the actual degree may be smaller).
inline Polynomial random_poly_below(SplitMix64& rng, const PrimeField& F, int bound) {
  if (bound < 0) throw std::invalid_argument("random_poly_below: negative bound");
  std::vector<FieldElement> c(static_cast<std::size_t>(bound));
  for (auto& e : c) e = random_element(rng, F);
  return Polynomial(std::move(c));
}

inline Polynomial random_monic(SplitMix64& rng, const PrimeField& F, int degree) {
  if (degree < 0) throw std::invalid_argument("random_monic: negative degree");
  std::vector<FieldElement> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = random_element(rng, F);
  c.back() = F.one();
  return Polynomial(std::move(c));
}

inline std::vector<FieldElement> random_distinct_points(SplitMix64& rng, const PrimeField& F,
                                                        std::size_t count) {
  if (count > F.modulus())
    throw std::invalid_argument("random_distinct_points: more points than field elements");
  std::vector<FieldElement> pts;
  std::vector<bool> used;  // lazily sized; moduli here are word-size but small in practice
  pts.reserve(count);
  while (pts.size() < count) {
    std::uint64_t v = rng.below(F.modulus());
    if (used.size() <= v) used.resize(v + 1, false);
    if (used[v]) continue;
    used[v] = true;
    pts.push_back(F.element_u(v));
  }
  return pts;
}

}  // namespace srfr

#endif
