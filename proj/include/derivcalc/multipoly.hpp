#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "derivcalc/bigrational.hpp"
#include "derivcalc/exponents.hpp"

namespace derivcalc {

class MultiPoly;

/// Sum of a_i * b_i accumulated in one pass.
MultiPoly sum_of_products(std::size_t nvars, std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs);

/// Sparse polynomial in Q[t1..tk].
///
/// Terms are kept strictly descending in graded-lex order with no zero
/// coefficients, so two polynomials are equal exactly when their term vectors
/// are equal. The zero polynomial has no terms.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, BigRational>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const BigRational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);
  static MultiPoly monomial(const BigRational& c, Monomial m);
  /// Accepts terms in any order; like monomials are combined and zeros dropped.
  static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero()); }
  bool is_one() const { return is_constant() && !is_zero() && terms_[0].second.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// -1 for the zero polynomial.
  long total_degree() const;
  long degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  /// Leading term in graded-lex order; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.front(); }
  const BigRational& leading_coefficient() const { return terms_.front().second; }
  /// Constant term, zero when absent.
  BigRational constant_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly sum_of_products(std::size_t nvars,
                                   std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs);

  MultiPoly scaled(const BigRational& c) const;
  MultiPoly times_monomial(const BigRational& c, const Monomial& m) const;
  MultiPoly pow(unsigned exponent) const;

  /// Exact quotient when `divisor` divides *this, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  MultiPoly derivative(std::size_t var) const;
  BigRational evaluate(std::span<const BigRational> point) const;
  /// Substitutes t_var := value, keeping the ambient arity.
  MultiPoly substitute(std::size_t var, const BigRational& value) const;

  /// Makes the leading coefficient 1; zero stays zero.
  MultiPoly monic() const;
  /// Integer coefficients with content 1 and positive leading coefficient.
  MultiPoly primitive() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_arity(const MultiPoly& other) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[t1..tk], returned primitive over Z with a
/// positive leading coefficient. gcd(0, b) is primitive(b); gcd(0, 0) is 0.
///
/// Reduces recursively to univariate problems over Q[other vars], strips
/// contents, and runs the subresultant remainder sequence on primitive parts.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// View of a polynomial as a univariate polynomial in t_var whose
/// coefficients are polynomials free of t_var. Index = power of t_var.
std::vector<MultiPoly> univariate_coefficients(const MultiPoly& p, std::size_t var);
MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, std::size_t var, std::size_t nvars);

}  // namespace derivcalc
