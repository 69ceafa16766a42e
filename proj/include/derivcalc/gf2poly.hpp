#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace derivcalc {

/// Polynomial over GF(2), coefficients lowest degree first, no trailing zeros.
class GF2Poly {
 public:
  GF2Poly() = default;
  explicit GF2Poly(std::vector<std::uint8_t> coeffs);

  static GF2Poly monomial(unsigned degree);
  static GF2Poly one() { return monomial(0); }
  static GF2Poly x() { return monomial(1); }
  /// Bit i of `bits` is the coefficient of x^i.
  static GF2Poly from_bits(std::uint64_t bits);
  /// Every polynomial of degree <= max_degree, including zero.
  static std::vector<GF2Poly> all_up_to(unsigned max_degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint8_t coeff(unsigned i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint8_t>& coeffs() const { return c_; }

  friend GF2Poly operator+(const GF2Poly& a, const GF2Poly& b);
  friend GF2Poly operator-(const GF2Poly& a, const GF2Poly& b) { return a + b; }
  friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b);
  friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

  /// Formal derivative d/dx.
  GF2Poly derivative() const;

  /// "x^3 + x + 1" style; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint8_t> c_;
};

}  // namespace derivcalc
