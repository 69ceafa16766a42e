#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

inline constexpr std::uint64_t kDefaultSeed = 20190101;

/// Seeded generator of small random elements for sampled checks. All draws
/// are deterministic given the seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  /// Random polynomial in k variables with total degree <= max_degree and
  /// integer coefficients in [-bound, bound]. May be zero.
  MultiPoly polynomial(std::size_t k, unsigned max_degree, int bound = 3);
  /// Same, redrawn until nonzero.
  MultiPoly nonzero_polynomial(std::size_t k, unsigned max_degree, int bound = 3);
  /// Nonzero polynomial that is not a single term.
  MultiPoly non_monomial(std::size_t k, unsigned max_degree, int bound = 3);
  /// Quotient of two random polynomials, never a monomial.
  RatFunc rational_function(std::size_t k, unsigned num_degree, unsigned den_degree, int bound = 3);

  int integer(int lo, int hi);
  bool coin(double p = 0.5);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace derivcalc
