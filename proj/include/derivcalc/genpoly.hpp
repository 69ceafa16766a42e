#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "derivcalc/derivation.hpp"
#include "derivcalc/diffop.hpp"
#include "derivcalc/outcome.hpp"

namespace derivcalc {

/// A map from the multiplicative semigroup K* to K.
class SemigroupMap {
 public:
  using Fn = std::function<RatFunc(const RatFunc&)>;

  SemigroupMap(std::size_t nvars, Fn fn) : nvars_(nvars), fn_(std::move(fn)) {}
  /// x -> E(x) / x.
  static SemigroupMap over_identity(DiffOp e);

  std::size_t nvars() const { return nvars_; }
  RatFunc operator()(const RatFunc& x) const { return fn_(x); }

 private:
  std::size_t nvars_;
  Fn fn_;
};

/// f(g x) - f(x). Throws DomainError when g or x is zero.
RatFunc delta(const RatFunc& g, const SemigroupMap& f, const RatFunc& x);

/// Delta_{g1} ... Delta_{gm} f (x) by inclusion-exclusion over subsets.
RatFunc iterated_delta(std::span<const RatFunc> increments, const SemigroupMap& f, const RatFunc& x);

/// Passes iff every (n+1)-fold difference with increments drawn (with
/// repetition) from `increments` vanishes at every point. Witness order is
/// (point, g1, ..., g_{n+1}).
CheckOutcome gp_degree_check(const SemigroupMap& f, int n, std::span<const RatFunc> increments,
                             std::span<const RatFunc> points);

/// Default sampled increments and points: `count` seeded random nonzero
/// polynomials of degree <= 2.
std::vector<RatFunc> default_gp_samples(std::size_t nvars, std::size_t count, std::uint64_t seed);

/// Polynomial in integer exponent variables i1..ik with coefficients in K.
class ExpPoly {
 public:
  using Terms = std::map<MultiIndex, RatFunc, GrlexDescending>;

  ExpPoly() = default;
  explicit ExpPoly(std::size_t nvars) : nvars_(nvars) {}

  static ExpPoly constant(const RatFunc& c);
  /// The exponent variable i_index.
  static ExpPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  RatFunc coefficient(const MultiIndex& beta) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& beta, const RatFunc& c);
  ExpPoly& operator+=(const ExpPoly& rhs);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly scaled(const RatFunc& c) const;

  /// Exact value at a point of nonnegative integers.
  RatFunc evaluate(std::span<const long> point) const;

  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  /// "c * i1^2*i2 + ..." with coefficients printed as expressions.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Total degree in the exponent variables; -1 for zero.
int expoly_degree(const ExpPoly& p);

/// p with p(i) = E(t^i) / t^i, expanded into the monomial basis of the i's.
ExpPoly exponent_polynomial(const DiffOp& e);

/// Expansion of the falling factorial x(x-1)...(x-j+1) as coefficients of
/// x^0..x^j (signed Stirling numbers of the first kind).
std::vector<BigInt> falling_factorial_coefficients(unsigned j);

/// p(i) * (sum_j i_j a_j): the product of p with the additive map on the
/// monomial semigroup determined by a_j = a(t_j).
ExpPoly times_additive(const ExpPoly& p, std::span<const RatFunc> a);

/// expoly_degree(times_additive(p, a)). Throws PreconditionError when every
/// a_j is zero.
int degree_bump(const ExpPoly& p, std::span<const RatFunc> a);

/// Applies d to each coefficient: the exponent polynomial of d o p on
/// monomials, since the i-monomials are integer constants.
ExpPoly apply_to_coefficients(const Derivation& d, const ExpPoly& p);

}  // namespace derivcalc
