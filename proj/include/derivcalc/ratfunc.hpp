#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "derivcalc/multipoly.hpp"

namespace derivcalc {

/// Element of K = Q(t1..tk) in canonical form: gcd(num, den) = 1 and den
/// monic in graded-lex order. Structural equality is field equality.
class RatFunc {
 public:
  RatFunc() = default;
  /// Zero of Q(t1..t_nvars).
  explicit RatFunc(std::size_t nvars) : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}
  explicit RatFunc(MultiPoly poly);

  static RatFunc constant(std::size_t nvars, const BigRational& c);
  static RatFunc variable(std::size_t nvars, std::size_t index);
  static RatFunc one(std::size_t nvars) { return constant(nvars, 1); }

  std::size_t nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  /// Value of a constant element; requires is_constant().
  BigRational constant_value() const;
  /// Terms in numerator plus denominator, a proxy for expression size.
  std::size_t size() const { return num_.term_count() + den_.term_count(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  RatFunc scaled(const BigRational& c) const;
  RatFunc reciprocal() const;
  /// Integer power; negative exponents require a nonzero base.
  RatFunc pow(long exponent) const;
  RatFunc partial(std::size_t var) const;

  /// Throws PoleError when the denominator vanishes at the point.
  BigRational evaluate(std::span<const BigRational> point) const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  /// "num" for polynomials, otherwise "num/den" with parentheses wherever
  /// the expression grammar would otherwise group differently.
  std::string to_string() const;
  std::size_t hash() const { return num_.hash() * 7919 ^ den_.hash(); }

 private:
  friend RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den);
  RatFunc(MultiPoly num, MultiPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

/// Canonical representative of num/den. Throws DivisionByZero for den = 0.
RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den);

/// Decides a/b == c/d by cross-multiplication, without normalizing.
bool cross_equal(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d);

struct RatFuncHash {
  std::size_t operator()(const RatFunc& f) const { return f.hash(); }
};

}  // namespace derivcalc
