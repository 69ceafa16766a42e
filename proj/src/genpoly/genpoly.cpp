#include "derivcalc/genpoly.hpp"

#include <unordered_map>

#include "derivcalc/errors.hpp"
#include "derivcalc/sampling.hpp"

namespace derivcalc {

SemigroupMap SemigroupMap::over_identity(DiffOp e) {
  const std::size_t k = e.nvars();
  return SemigroupMap(k, [op = std::move(e)](const RatFunc& x) {
    if (x.is_zero()) throw DomainError("E/j is undefined at 0");
    return apply_diffop(op, x) / x;
  });
}

RatFunc delta(const RatFunc& g, const SemigroupMap& f, const RatFunc& x) {
  if (g.is_zero()) throw DomainError("difference increment must be nonzero");
  if (x.is_zero()) throw DomainError("difference point must be nonzero");
  return f(g * x) - f(x);
}

namespace {

class MemoSemigroupMap {
 public:
  explicit MemoSemigroupMap(const SemigroupMap& f) : f_(f) {}
  const RatFunc& operator()(const RatFunc& x) {
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
    return cache_.emplace(x, f_(x)).first->second;
  }

 private:
  const SemigroupMap& f_;
  std::unordered_map<RatFunc, RatFunc, RatFuncHash> cache_;
};

RatFunc iterated(std::span<const RatFunc> gs, MemoSemigroupMap& f, const RatFunc& x) {
  const std::size_t m = gs.size();
  if (m >= 63) throw PreconditionError("too many difference increments");
  RatFunc sum(x.nvars());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    RatFunc arg = x;
    std::size_t chosen = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (mask >> r & 1u) {
        arg *= gs[r];
        ++chosen;
      }
    }
    const RatFunc& v = f(arg);
    if ((m - chosen) % 2 == 0) {
      sum += v;
    } else {
      sum -= v;
    }
  }
  return sum;
}

void check_nonzero(std::span<const RatFunc> xs, const char* what) {
  for (const auto& x : xs) {
    if (x.is_zero()) throw DomainError(std::string(what) + " must be nonzero");
  }
}

}  // namespace

RatFunc iterated_delta(std::span<const RatFunc> increments, const SemigroupMap& f, const RatFunc& x) {
  check_nonzero(increments, "difference increment");
  if (x.is_zero()) throw DomainError("difference point must be nonzero");
  MemoSemigroupMap memo(f);
  return iterated(increments, memo, x);
}

CheckOutcome gp_degree_check(const SemigroupMap& f, int n, std::span<const RatFunc> increments,
                             std::span<const RatFunc> points) {
  if (n < -1) throw PreconditionError("generalized-polynomial degree bound must be >= -1");
  check_nonzero(increments, "difference increment");
  check_nonzero(points, "difference point");
  const std::size_t order = static_cast<std::size_t>(n + 1);
  if (order > 0 && increments.empty()) throw PreconditionError("no increments supplied");
  MemoSemigroupMap memo(f);

  // Differences commute, so multisets of increments suffice: idx is kept
  // non-decreasing.
  std::vector<std::size_t> idx(order, 0);
  std::vector<RatFunc> gs(order);
  for (;;) {
    for (std::size_t r = 0; r < order; ++r) gs[r] = increments[idx[r]];
    for (const auto& x : points) {
      RatFunc v = iterated(gs, memo, x);
      if (!v.is_zero()) {
        std::vector<RatFunc> witness{x};
        witness.insert(witness.end(), gs.begin(), gs.end());
        return CheckOutcome::fail(std::to_string(order) + "-fold difference is nonzero", std::move(witness),
                                  std::move(v));
      }
    }
    std::size_t pos = order;
    while (pos > 0 && idx[pos - 1] + 1 == increments.size()) --pos;
    if (pos == 0) break;
    const std::size_t next = idx[pos - 1] + 1;
    for (std::size_t r = pos - 1; r < order; ++r) idx[r] = next;
  }
  return CheckOutcome::pass();
}

std::vector<RatFunc> default_gp_samples(std::size_t nvars, std::size_t count, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<RatFunc> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.emplace_back(sampler.nonzero_polynomial(nvars, 2));
  return out;
}

// ---------------------------------------------------------------------------
// ExpPoly

ExpPoly ExpPoly::constant(const RatFunc& c) {
  ExpPoly p(c.nvars());
  p.add_term(MultiIndex(c.nvars()), c);
  return p;
}

ExpPoly ExpPoly::variable(std::size_t nvars, std::size_t index) {
  ExpPoly p(nvars);
  p.add_term(MultiIndex::unit(nvars, index), RatFunc::one(nvars));
  return p;
}

RatFunc ExpPoly::coefficient(const MultiIndex& beta) const {
  auto it = terms_.find(beta);
  return it == terms_.end() ? RatFunc(nvars_) : it->second;
}

void ExpPoly::add_term(const MultiIndex& beta, const RatFunc& c) {
  require_same_arity(nvars_, beta.arity());
  require_same_arity(nvars_, c.nvars());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(beta, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& rhs) {
  require_same_arity(nvars_, rhs.nvars_);
  for (const auto& [beta, c] : rhs.terms_) add_term(beta, c);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  require_same_arity(a.nvars_, b.nvars_);
  ExpPoly out(a.nvars_);
  for (const auto& [ba, ca] : a.terms_) {
    for (const auto& [bb, cb] : b.terms_) out.add_term(ba + bb, ca * cb);
  }
  return out;
}

ExpPoly ExpPoly::scaled(const RatFunc& c) const {
  ExpPoly out(nvars_);
  for (const auto& [beta, a] : terms_) out.add_term(beta, c * a);
  return out;
}

RatFunc ExpPoly::evaluate(std::span<const long> point) const {
  require_same_arity(nvars_, point.size());
  RatFunc sum(nvars_);
  for (const auto& [beta, c] : terms_) {
    BigRational v = 1;
    for (std::size_t i = 0; i < nvars_; ++i) v *= BigRational(point[i]).pow(beta[i]);
    sum += c.scaled(v);
  }
  return sum;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [beta, c] : terms_) {
    std::string coef = c.to_string();
    if (c.den().is_one() && c.num().term_count() > 1) coef = "(" + coef + ")";
    std::string term;
    if (beta.is_zero()) {
      term = coef;
    } else if (c.is_one()) {
      term = monomial_to_string(beta, "i");
    } else if ((-c).is_one()) {
      term = "-" + monomial_to_string(beta, "i");
    } else {
      term = coef + " * " + monomial_to_string(beta, "i");
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

int expoly_degree(const ExpPoly& p) {
  return p.is_zero() ? -1 : static_cast<int>(p.terms().begin()->first.total_degree());
}

std::vector<BigInt> falling_factorial_coefficients(unsigned j) {
  // Multiply out x (x - 1) ... (x - j + 1).
  std::vector<BigInt> c{1};
  for (unsigned r = 0; r < j; ++r) {
    std::vector<BigInt> next(c.size() + 1, 0);
    for (std::size_t e = 0; e < c.size(); ++e) {
      next[e + 1] += c[e];
      next[e] -= c[e] * r;
    }
    c = std::move(next);
  }
  return c;
}

ExpPoly exponent_polynomial(const DiffOp& e) {
  const std::size_t k = e.nvars();
  ExpPoly out(k);
  for (const auto& [alpha, c] : e.coeffs()) {
    // c_alpha * t^(-alpha) * prod_m i_m^[alpha_m]
    MultiPoly t_alpha = MultiPoly::monomial(BigRational(1), alpha);
    const RatFunc coef = c / RatFunc(t_alpha);
    ExpPoly term = ExpPoly::constant(coef);
    for (std::size_t m = 0; m < k; ++m) {
      if (alpha[m] == 0) continue;
      const auto ff = falling_factorial_coefficients(alpha[m]);
      ExpPoly factor(k);
      MultiIndex beta(k);
      for (std::size_t p = 0; p < ff.size(); ++p) {
        beta[m] = static_cast<MultiIndex::value_type>(p);
        factor.add_term(beta, RatFunc::constant(k, BigRational(ff[p])));
      }
      term = term * factor;
    }
    out += term;
  }
  return out;
}

ExpPoly times_additive(const ExpPoly& p, std::span<const RatFunc> a) {
  require_same_arity(p.nvars(), a.size());
  ExpPoly linear(p.nvars());
  for (std::size_t j = 0; j < a.size(); ++j) linear.add_term(MultiIndex::unit(p.nvars(), j), a[j]);
  return p * linear;
}

int degree_bump(const ExpPoly& p, std::span<const RatFunc> a) {
  bool any = false;
  for (const auto& v : a) any = any || !v.is_zero();
  if (!any) throw PreconditionError("degree bump needs a nonzero additive function");
  return expoly_degree(times_additive(p, a));
}

ExpPoly apply_to_coefficients(const Derivation& d, const ExpPoly& p) {
  require_same_arity(d.nvars(), p.nvars());
  ExpPoly out(p.nvars());
  for (const auto& [beta, c] : p.terms()) out.add_term(beta, apply_derivation(d, c));
  return out;
}

}  // namespace derivcalc
