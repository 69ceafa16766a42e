#include "derivcalc/ratfunc.hpp"

#include "derivcalc/errors.hpp"

namespace derivcalc {

namespace {

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error("internal: inexact division while normalizing");
  return *q;
}

// A numerator needs parentheses only when it is a sum; a denominator also
// when it is a product of several variables, since '/' binds left.
bool wrap_numerator(const MultiPoly& p) { return p.term_count() != 1; }

bool wrap_denominator(const MultiPoly& p) {
  if (p.term_count() != 1) return true;
  const auto& [m, c] = p.leading_term();
  std::size_t vars = 0;
  for (std::size_t i = 0; i < m.arity(); ++i) vars += m[i] > 0 ? 1 : 0;
  return vars > 1 || !c.is_one();
}

}  // namespace

RatFunc ratfunc_normalize(const MultiPoly& num, const MultiPoly& den) {
  require_same_arity(num.nvars(), den.nvars());
  if (den.is_zero()) throw DivisionByZero();
  const std::size_t k = num.nvars();
  if (num.is_zero()) return RatFunc(k);
  if (den.is_constant()) {
    return RatFunc(num.scaled(den.leading_coefficient().reciprocal()), MultiPoly::constant(k, 1), 0);
  }
  MultiPoly n = num;
  MultiPoly d = den;
  const MultiPoly g = poly_gcd(num, den);
  if (!g.is_one()) {
    n = exact(num, g);
    d = exact(den, g);
  }
  const BigRational lc = d.leading_coefficient();
  if (!lc.is_one()) {
    const BigRational inv = lc.reciprocal();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return RatFunc(std::move(n), std::move(d), 0);
}

bool cross_equal(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c, const MultiPoly& d) {
  if (b.is_zero() || d.is_zero()) throw DivisionByZero();
  return a * d == b * c;
}

RatFunc::RatFunc(MultiPoly poly) : num_(std::move(poly)), den_(MultiPoly::constant(num_.nvars(), 1)) {}

RatFunc RatFunc::constant(std::size_t nvars, const BigRational& c) {
  return RatFunc(MultiPoly::constant(nvars, c));
}

RatFunc RatFunc::variable(std::size_t nvars, std::size_t index) {
  return RatFunc(MultiPoly::variable(nvars, index));
}

BigRational RatFunc::constant_value() const {
  if (!is_constant()) throw DomainError("not a constant: " + to_string());
  return num_.constant_term();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  require_same_arity(nvars(), rhs.nvars());
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_one()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = ratfunc_normalize(num_ + rhs.num_, den_);
  }
  if (den_.is_one()) return *this = RatFunc(num_ * rhs.den_ + rhs.num_, rhs.den_, 0);
  if (rhs.den_.is_one()) return *this = RatFunc(num_ + rhs.num_ * den_, den_, 0);
  // With b = g b', d = g d': a/b + c/d = (a d' + c b') / (g b' d'), and the
  // numerator is already coprime to b' d', so only g can cancel.
  const MultiPoly g = poly_gcd(den_, rhs.den_);
  const MultiPoly left_cof = exact(rhs.den_, g);
  const MultiPoly right_cof = exact(den_, g);
  MultiPoly n = num_ * left_cof + rhs.num_ * right_cof;
  if (n.is_zero()) return *this = RatFunc(nvars());
  MultiPoly d = right_cof * left_cof;
  if (!g.is_one()) {
    const RatFunc reduced = ratfunc_normalize(n, g);
    n = reduced.num_;
    d *= reduced.den_;
  }
  const BigRational lc = d.leading_coefficient();
  if (!lc.is_one()) {
    const BigRational inv = lc.reciprocal();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  return *this = RatFunc(std::move(n), std::move(d), 0);
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  require_same_arity(nvars(), rhs.nvars());
  if (is_zero() || rhs.is_zero()) return *this = RatFunc(nvars());
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel so the product is already reduced.
  const MultiPoly g1 = poly_gcd(num_, rhs.den_);
  const MultiPoly g2 = poly_gcd(rhs.num_, den_);
  MultiPoly n = exact(num_, g1) * exact(rhs.num_, g2);
  MultiPoly d = exact(den_, g2) * exact(rhs.den_, g1);
  const BigRational lc = d.leading_coefficient();
  if (!lc.is_one()) {
    n = n.scaled(lc.reciprocal());
    d = d.monic();
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) { return *this *= rhs.reciprocal(); }

RatFunc RatFunc::scaled(const BigRational& c) const {
  if (c.is_zero()) return RatFunc(nvars());
  return RatFunc(num_.scaled(c), den_, 0);
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  const BigRational lc = num_.leading_coefficient();
  const BigRational inv = lc.reciprocal();
  return RatFunc(den_.scaled(inv), num_.scaled(inv), 0);
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  // Powers of coprime polynomials stay coprime.
  return RatFunc(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)), 0);
}

RatFunc RatFunc::partial(std::size_t var) const {
  if (den_.is_one()) return RatFunc(num_.derivative(var));
  // (n/d)' = (n' d - n d') / d^2; only gcd(n' d - n d', d) can cancel.
  const MultiPoly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  if (top.is_zero()) return RatFunc(nvars());
  const MultiPoly g = poly_gcd(top, den_);
  const MultiPoly d_red = exact(den_, g);
  MultiPoly n = exact(top, g);
  MultiPoly d = d_red * den_;
  const BigRational lc = d.leading_coefficient();
  if (!lc.is_one()) {
    n = n.scaled(lc.reciprocal());
    d = d.monic();
  }
  // gcd(top/g, den) can still be nontrivial when g was a proper divisor of
  // a repeated factor; normalize handles that case.
  if (!poly_gcd(n, d).is_one()) return ratfunc_normalize(n, d);
  return RatFunc(std::move(n), std::move(d), 0);
}

BigRational RatFunc::evaluate(std::span<const BigRational> point) const {
  const BigRational d = den_.evaluate(point);
  if (d.is_zero()) throw PoleError();
  return num_.evaluate(point) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const std::string n = num_.to_string();
  const std::string d = den_.to_string();
  return (wrap_numerator(num_) ? "(" + n + ")" : n) + "/" + (wrap_denominator(den_) ? "(" + d + ")" : d);
}

}  // namespace derivcalc
