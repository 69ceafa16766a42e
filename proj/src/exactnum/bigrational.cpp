#include "derivcalc/bigrational.hpp"

#include <functional>
#include <string>

#include "derivcalc/errors.hpp"

namespace derivcalc {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(BigInt(s, 10));
    return BigRational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + s + "'");
  }
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  q_ /= rhs.q_;
  return *this;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return BigRational(r);
}

BigRational BigRational::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), q_.get_mpq_t());
  return BigRational(r);
}

BigRational BigRational::pow(unsigned exponent) const {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return BigRational(mpq_class(num, den));
}

std::size_t BigRational::hash() const {
  const std::size_t h1 = mpz_get_ui(q_.get_num_mpz_t()) ^ (sign() < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t h2 = mpz_get_ui(q_.get_den_mpz_t());
  return h1 * 1000003u ^ h2;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void BigRational::add_product(const BigRational& a, const BigRational& b) {
  // Integers stay integers: skip the canonicalizing rational ops.
  if (mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0 && mpz_cmp_ui(mpq_denref(a.q_.get_mpq_t()), 1) == 0 &&
      mpz_cmp_ui(mpq_denref(b.q_.get_mpq_t()), 1) == 0) {
    mpz_addmul(mpq_numref(q_.get_mpq_t()), mpq_numref(a.q_.get_mpq_t()), mpq_numref(b.q_.get_mpq_t()));
    return;
  }
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace derivcalc
