#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace derivcalc {

/// A vector of k nonnegative integers. Serves both as the exponent vector of
/// a monomial t1^e1 ... tk^ek and as the multi-index alpha of a partial
/// derivative d^alpha.
class Exponents {
 public:
  using value_type = std::uint32_t;

  Exponents() = default;
  explicit Exponents(std::size_t arity) : e_(arity, 0) {}
  explicit Exponents(std::vector<value_type> e) : e_(std::move(e)) {}
  Exponents(std::initializer_list<value_type> e) : e_(e) {}

  static Exponents unit(std::size_t arity, std::size_t index) {
    Exponents r(arity);
    r.e_[index] = 1;
    return r;
  }

  std::size_t arity() const { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  const std::vector<value_type>& values() const { return e_; }

  std::uint64_t total_degree() const {
    std::uint64_t s = 0;
    for (auto v : e_) s += v;
    return s;
  }
  bool is_zero() const { return total_degree() == 0; }

  /// True when every entry of *this is <= the matching entry of other.
  bool divides(const Exponents& other) const;

  Exponents operator+(const Exponents& rhs) const;
  /// Entrywise difference; requires divides(lhs).
  Exponents operator-(const Exponents& rhs) const;

  friend bool operator==(const Exponents&, const Exponents&) = default;

  std::size_t hash() const;

 private:
  std::vector<value_type> e_;
};

using Monomial = Exponents;
using MultiIndex = Exponents;

/// Graded-lexicographic comparison: total degree first, ties broken
/// lexicographically with t1 > t2 > ... > tk.
std::strong_ordering grlex_compare(const Exponents& a, const Exponents& b);

/// Strict ordering putting the grlex-largest element first. Every ordered
/// container keyed by Exponents in this library uses it.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Renders as "t1^2*t2" using the given variable prefix; "1" for zero.
std::string monomial_to_string(const Exponents& e, const std::string& var = "t");

/// All multi-indices of arity k with total degree <= n, grlex-descending.
std::vector<Exponents> indices_up_to(std::size_t k, unsigned n);

/// The box {0..n}^k in grlex-descending order.
std::vector<Exponents> grid_box(std::size_t k, unsigned n);

}  // namespace derivcalc
