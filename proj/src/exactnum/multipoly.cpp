#include "derivcalc/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <unordered_map>

#include "derivcalc/errors.hpp"

namespace derivcalc {

namespace {

// Merges two descending term vectors into lhs + sign * rhs.
std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& lhs,
                                         const std::vector<MultiPoly::Term>& rhs, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end()) {
      out.push_back(*a++);
      continue;
    }
    if (a == lhs.end()) {
      out.emplace_back(b->first, subtract ? -b->second : b->second);
      ++b;
      continue;
    }
    const auto c = grlex_compare(a->first, b->first);
    if (c == std::strong_ordering::greater) {
      out.push_back(*a++);
    } else if (c == std::strong_ordering::less) {
      out.emplace_back(b->first, subtract ? -b->second : b->second);
      ++b;
    } else {
      BigRational s = subtract ? a->second - b->second : a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

void MultiPoly::check_arity(const MultiPoly& other) const { require_same_arity(nvars_, other.nvars_); }

MultiPoly MultiPoly::constant(std::size_t nvars, const BigRational& c) {
  MultiPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("variable index out of range");
  MultiPoly p(nvars);
  p.terms_.emplace_back(Monomial::unit(nvars, index), BigRational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const BigRational& c, Monomial m) {
  MultiPoly p(m.arity());
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) require_same_arity(nvars, t.first.arity());
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GrlexDescending{}(a.first, b.first); });
  MultiPoly p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

long MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().first.total_degree());
}

long MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, m[var]);
  return d;
}

BigRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_zero()) return terms_.back().second;
  return BigRational(0);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_arity(rhs);
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_arity(rhs);
  if (rhs.is_zero()) return *this;
  terms_ = merge_terms(terms_, rhs.terms_, true);
  return *this;
}

namespace {

// Packs a monomial into one word whose integer order is grlex: the total
// degree sits in the top field, then t1..tk. Adding packed words multiplies
// monomials as long as no field overflows.
struct Packing {
  std::size_t nvars;
  unsigned width;

  static std::optional<Packing> fit(std::size_t nvars, std::uint64_t max_degree) {
    const unsigned width = static_cast<unsigned>(64 / (nvars + 1));
    if (width < 4 || width >= 64 || max_degree >= (std::uint64_t{1} << width)) return std::nullopt;
    return Packing{nvars, width};
  }

  std::uint64_t pack(const Monomial& m) const {
    std::uint64_t key = m.total_degree();
    for (std::size_t i = 0; i < nvars; ++i) key = (key << width) | m[i];
    return key;
  }

  Monomial unpack(std::uint64_t key) const {
    Monomial m(nvars);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    for (std::size_t i = nvars; i-- > 0;) {
      m[i] = static_cast<Monomial::value_type>(key & mask);
      key >>= width;
    }
    return m;
  }
};

// Accumulates coefficients by packed key. Small exponent boxes use a dense
// slot table indexed by the mixed-radix value of the exponents, which is
// additive like the packed key; larger ones fall back to hashing.
class Accumulator {
 public:
  Accumulator(const Packing& packing, std::uint64_t max_degree) : packing_(packing) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < packing.nvars && size <= kDenseLimit; ++i) size *= max_degree + 1;
    if (size <= kDenseLimit) {
      radix_ = max_degree + 1;
      dense_.assign(size, kEmpty);
    }
  }

  struct Key {
    std::uint64_t packed;
    std::uint64_t dense;
  };

  Key key(const Monomial& m) const {
    Key k{packing_.pack(m), 0};
    if (!dense_.empty()) {
      for (std::size_t i = packing_.nvars; i-- > 0;) k.dense = k.dense * radix_ + m[i];
    }
    return k;
  }

  void add(const Key& a, const Key& b, const BigRational& ca, const BigRational& cb) {
    const std::uint64_t packed = a.packed + b.packed;
    std::uint32_t* slot;
    if (!dense_.empty()) {
      slot = &dense_[a.dense + b.dense];
    } else {
      slot = &sparse_.try_emplace(packed, kEmpty).first->second;
    }
    if (*slot == kEmpty) {
      *slot = static_cast<std::uint32_t>(acc_.size());
      acc_.emplace_back(packed, BigRational());
    }
    acc_[*slot].second.add_product(ca, cb);
  }

  std::vector<MultiPoly::Term> take_terms() {
    std::sort(acc_.begin(), acc_.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    std::vector<MultiPoly::Term> out;
    out.reserve(acc_.size());
    for (auto& [key, c] : acc_) {
      if (!c.is_zero()) out.emplace_back(packing_.unpack(key), std::move(c));
    }
    return out;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = 1u << 16;
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  Packing packing_;
  std::uint64_t radix_ = 0;
  std::vector<std::uint32_t> dense_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  std::vector<std::pair<std::uint64_t, BigRational>> acc_;
};

}  // namespace

MultiPoly sum_of_products(std::size_t nvars, std::span<const std::pair<const MultiPoly*, const MultiPoly*>> pairs) {
  MultiPoly r(nvars);
  std::uint64_t max_degree = 0;
  for (const auto& [a, b] : pairs) {
    require_same_arity(nvars, a->nvars());
    require_same_arity(nvars, b->nvars());
    if (a->is_zero() || b->is_zero()) continue;
    max_degree = std::max(max_degree, static_cast<std::uint64_t>(a->total_degree() + b->total_degree()));
  }
  const auto packing = Packing::fit(nvars, max_degree);
  if (!packing) {
    std::vector<MultiPoly::Term> prod;
    for (const auto& [a, b] : pairs) {
      for (const auto& [ma, ca] : a->terms_) {
        for (const auto& [mb, cb] : b->terms_) prod.emplace_back(ma + mb, ca * cb);
      }
    }
    return MultiPoly::from_terms(nvars, std::move(prod));
  }
  Accumulator acc(*packing, max_degree);
  std::vector<Accumulator::Key> kb;
  for (const auto& [a, b] : pairs) {
    kb.clear();
    for (const auto& t : b->terms_) kb.push_back(acc.key(t.first));
    for (const auto& [ma, ca] : a->terms_) {
      const Accumulator::Key ka = acc.key(ma);
      for (std::size_t j = 0; j < kb.size(); ++j) acc.add(ka, kb[j], ca, b->terms_[j].second);
    }
  }
  r.terms_ = acc.take_terms();
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.nvars_);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].second, a.terms_[0].first);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].second, b.terms_[0].first);
  const std::pair<const MultiPoly*, const MultiPoly*> pair{&a, &b};
  return sum_of_products(a.nvars_, std::span(&pair, 1));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly MultiPoly::scaled(const BigRational& c) const {
  if (c.is_zero()) return MultiPoly(nvars_);
  MultiPoly r(*this);
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const BigRational& c, const Monomial& m) const {
  require_same_arity(nvars_, m.arity());
  if (c.is_zero()) return MultiPoly(nvars_);
  MultiPoly r(nvars_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt + m, ct * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& divisor) const {
  check_arity(divisor);
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return MultiPoly(nvars_);
  if (divisor.is_constant()) return scaled(divisor.leading_coefficient().reciprocal());
  const auto& [lead_m, lead_c] = divisor.leading_term();
  std::vector<Term> quotient;
  MultiPoly rem = *this;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading_term();
    if (!lead_m.divides(rm)) return std::nullopt;
    Monomial qm = rm - lead_m;
    BigRational qc = rc / lead_c;
    rem -= divisor.times_monomial(qc, qm);
    quotient.emplace_back(std::move(qm), std::move(qc));
  }
  // Quotient terms are generated in strictly descending order.
  MultiPoly q(nvars_);
  q.terms_ = std::move(quotient);
  return q;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw DimensionError("variable index out of range");
  MultiPoly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.terms_.emplace_back(std::move(dm), c * BigRational(static_cast<long>(m[var])));
  }
  // Lowering one exponent of every surviving term keeps their grlex order.
  return r;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
  require_same_arity(nvars_, point.size());
  BigRational sum;
  for (const auto& [m, c] : terms_) {
    BigRational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] != 0) v *= point[i].pow(m[i]);
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const BigRational& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial nm = m;
    nm[var] = 0;
    out.emplace_back(std::move(nm), c * value.pow(m[var]));
  }
  return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().reciprocal());
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  BigRational factor(den_lcm, num_gcd);
  if (leading_coefficient().sign() < 0) factor = -factor;
  return factor.is_one() ? *this : scaled(factor);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const BigRational mag = negative ? -c : c;
    std::string body;
    if (m.is_zero()) {
      body = mag.to_string();
    } else if (mag.is_one()) {
      body = monomial_to_string(m);
    } else {
      body = mag.to_string() + "*" + monomial_to_string(m);
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::size_t MultiPoly::hash() const {
  std::size_t h = nvars_;
  for (const auto& [m, c] : terms_) h = (h * 31 + m.hash()) * 131 + c.hash();
  return h;
}

std::vector<MultiPoly> univariate_coefficients(const MultiPoly& p, std::size_t var) {
  const long deg = p.degree_in(var);
  if (deg < 0) return {};
  std::vector<std::vector<MultiPoly::Term>> buckets(static_cast<std::size_t>(deg) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    buckets[m[var]].emplace_back(std::move(rest), c);
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(p.nvars(), std::move(b)));
  return out;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, std::size_t var, std::size_t nvars) {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [m, c] : coeffs[d].terms()) {
      Monomial nm = m;
      nm[var] += static_cast<Monomial::value_type>(d);
      terms.emplace_back(std::move(nm), c);
    }
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// gcd

namespace {

using UPoly = std::vector<MultiPoly>;  // coefficients over Q[other vars], low degree first

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

long udeg(const UPoly& u) { return static_cast<long>(u.size()) - 1; }

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const long db = udeg(b);
  const MultiPoly& lcb = b.back();
  long steps = udeg(a) - db + 1;
  while (!a.empty() && udeg(a) >= db) {
    const long shift = udeg(a) - db;
    const MultiPoly lca = a.back();
    for (auto& c : a) c = lcb * c;
    for (long i = 0; i <= db; ++i) a[i + shift] -= lca * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    const MultiPoly scale = lcb.pow(static_cast<unsigned>(steps));
    for (auto& c : a) c = scale * c;
  }
  return a;
}

MultiPoly divide_or_throw(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  assert(q.has_value());
  if (!q) throw Error("internal: inexact division in subresultant sequence");
  return *q;
}

MultiPoly content(const UPoly& u) {
  MultiPoly g(u.front().nvars());
  for (const auto& c : u) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
  Monomial e = mono.leading_term().first;
  for (const auto& [m, c] : other.terms()) {
    for (std::size_t i = 0; i < e.arity(); ++i) e[i] = std::min(e[i], m[i]);
  }
  return MultiPoly::monomial(BigRational(1), std::move(e));
}

// gcd of primitive (in var) polynomials via the subresultant sequence.
MultiPoly subresultant_gcd(UPoly a, UPoly b, std::size_t var, std::size_t nvars) {
  if (udeg(a) < udeg(b)) std::swap(a, b);
  MultiPoly g = MultiPoly::constant(nvars, 1);
  MultiPoly h = MultiPoly::constant(nvars, 1);
  while (true) {
    const long delta = udeg(a) - udeg(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (udeg(r) == 0) return MultiPoly::constant(nvars, 1);
    const MultiPoly divisor = g * h.pow(static_cast<unsigned>(delta));
    for (auto& c : r) c = divide_or_throw(c, divisor);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  const MultiPoly cb = content(b);
  for (auto& c : b) c = divide_or_throw(c, cb);
  return from_univariate(b, var, nvars);
}

using QPoly = std::vector<BigRational>;  // univariate over Q, low degree first

void trim(QPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Degree of gcd(a, b) over Q by Euclid; both nonzero.
long qpoly_gcd_degree(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const BigRational q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
      a.pop_back();
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

QPoly specialize(const UPoly& u, std::span<const BigRational> point) {
  QPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(c.evaluate(point));
  return out;
}

// True when gcd(a, b) provably does not involve var: at a point keeping both
// leading coefficients nonzero, any common factor in var would survive as a
// common factor of the univariate images.
bool coprime_in(const UPoly& ua, const UPoly& ub, std::size_t nvars) {
  for (long attempt = 0; attempt < 3; ++attempt) {
    std::vector<BigRational> point;
    for (std::size_t i = 0; i < nvars; ++i) point.emplace_back(static_cast<long>(2 + 7 * attempt + 3 * i));
    const QPoly qa = specialize(ua, point);
    const QPoly qb = specialize(ub, point);
    if (qa.back().is_zero() || qb.back().is_zero()) continue;
    return qpoly_gcd_degree(qa, qb) == 0;
  }
  return false;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  require_same_arity(a.nvars(), b.nvars());
  const std::size_t k = a.nvars();
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return a.primitive();

  std::size_t var = k;
  for (std::size_t i = 0; i < k && var == k; ++i) {
    if (a.involves(i) || b.involves(i)) var = i;
  }
  assert(var < k);  // both non-monomial, so some variable occurs

  if (!a.involves(var)) return poly_gcd(a, content(univariate_coefficients(b, var)));
  if (!b.involves(var)) return poly_gcd(content(univariate_coefficients(a, var)), b);

  UPoly ua = univariate_coefficients(a.primitive(), var);
  UPoly ub = univariate_coefficients(b.primitive(), var);
  if (coprime_in(ua, ub, k)) return poly_gcd(content(ua), content(ub));
  const MultiPoly ca = content(ua);
  const MultiPoly cb = content(ub);
  for (auto& c : ua) c = divide_or_throw(c, ca);
  for (auto& c : ub) c = divide_or_throw(c, cb);
  const MultiPoly cont_gcd = poly_gcd(ca, cb);
  return (cont_gcd * subresultant_gcd(std::move(ua), std::move(ub), var, k)).primitive();
}

}  // namespace derivcalc
