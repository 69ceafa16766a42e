#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace derivcalc {

using BigInt = mpz_class;

/// An exact rational number, always in lowest terms with positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  /// Throws DivisionByZero when den == 0.
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q);

  /// Parses "n" or "n/d" in base 10.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& rhs) {
    q_ += rhs.q_;
    return *this;
  }
  BigRational& operator-=(const BigRational& rhs) {
    q_ -= rhs.q_;
    return *this;
  }
  BigRational& operator*=(const BigRational& rhs) {
    q_ *= rhs.q_;
    return *this;
  }
  BigRational& operator/=(const BigRational& rhs);
  /// *this += a * b without a temporary BigRational.
  void add_product(const BigRational& a, const BigRational& b);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational reciprocal() const;
  BigRational abs() const;
  BigRational pow(unsigned exponent) const;

  std::string to_string() const { return q_.get_str(); }
  std::size_t hash() const;

 private:
  mpq_class q_;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace derivcalc
