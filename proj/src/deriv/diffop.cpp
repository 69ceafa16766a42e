#include "derivcalc/diffop.hpp"

#include "derivcalc/errors.hpp"

namespace derivcalc {

DiffOp DiffOp::identity(std::size_t nvars, const RatFunc& c) {
  DiffOp e(nvars);
  e.add_term(MultiIndex(nvars), c);
  return e;
}

DiffOp DiffOp::partial(const RatFunc& c, MultiIndex alpha) {
  DiffOp e(alpha.arity());
  e.add_term(alpha, c);
  return e;
}

DiffOp DiffOp::from_derivation(const Derivation& d) {
  DiffOp e(d.nvars());
  for (std::size_t i = 0; i < d.nvars(); ++i) e.add_term(MultiIndex::unit(d.nvars(), i), d.image(i));
  return e;
}

DiffOp DiffOp::from_coeffs(std::size_t nvars, Coeffs coeffs) {
  DiffOp e(nvars);
  for (auto& [alpha, c] : coeffs) e.add_term(alpha, c);
  return e;
}

RatFunc DiffOp::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? RatFunc(nvars_) : it->second;
}

bool DiffOp::annihilates_one() const { return !coeffs_.contains(MultiIndex(nvars_)); }

void DiffOp::add_term(const MultiIndex& alpha, const RatFunc& c) {
  require_same_arity(nvars_, alpha.arity());
  require_same_arity(nvars_, c.nvars());
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

DiffOp& DiffOp::operator+=(const DiffOp& rhs) {
  require_same_arity(nvars_, rhs.nvars_);
  for (const auto& [alpha, c] : rhs.coeffs_) add_term(alpha, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& rhs) {
  require_same_arity(nvars_, rhs.nvars_);
  for (const auto& [alpha, c] : rhs.coeffs_) add_term(alpha, -c);
  return *this;
}

DiffOp DiffOp::operator-() const {
  DiffOp e(*this);
  for (auto& [alpha, c] : e.coeffs_) c = -c;
  return e;
}

DiffOp DiffOp::scaled(const RatFunc& c) const {
  require_same_arity(nvars_, c.nvars());
  DiffOp e(nvars_);
  if (c.is_zero()) return e;
  for (const auto& [alpha, a] : coeffs_) e.coeffs_.emplace(alpha, c * a);
  return e;
}

std::string DiffOp::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : coeffs_) {
    std::string coef = c.to_string();
    if (c.den().is_one() && c.num().term_count() > 1) coef = "(" + coef + ")";
    std::string term;
    if (alpha.is_zero()) {
      term = coef;
    } else {
      std::string d = "d[";
      for (std::size_t i = 0; i < alpha.arity(); ++i) {
        if (i > 0) d += ",";
        d += std::to_string(alpha[i]);
      }
      d += "]";
      if (c.is_one()) {
        term = d;
      } else if ((-c).is_one()) {
        term = "-" + d;
      } else {
        term = coef + " * " + d;
      }
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

int degree(const DiffOp& e) {
  // Grlex-descending: the first key has the largest total degree.
  return e.is_zero() ? -1 : static_cast<int>(e.coeffs().begin()->first.total_degree());
}

DerivativeTable::DerivativeTable(RatFunc f) {
  const std::size_t k = f.nvars();
  table_.emplace(MultiIndex(k), std::move(f));
}

const RatFunc& DerivativeTable::get(const MultiIndex& alpha) {
  if (auto it = table_.find(alpha); it != table_.end()) return it->second;
  std::size_t var = 0;
  while (alpha[var] == 0) ++var;
  const RatFunc lower = get(alpha - MultiIndex::unit(alpha.arity(), var));
  return table_.emplace(alpha, lower.partial(var)).first->second;
}

RatFunc apply_diffop(const DiffOp& e, const RatFunc& f) {
  require_same_arity(e.nvars(), f.nvars());
  RatFunc out(f.nvars());
  if (e.is_zero()) return out;
  DerivativeTable table(f);
  // Polynomial coefficient times polynomial derivative goes into one fused sum.
  std::vector<std::pair<const MultiPoly*, const MultiPoly*>> fused;
  for (const auto& [alpha, c] : e.coeffs()) {
    const RatFunc& df = table.get(alpha);
    if (df.is_zero()) continue;
    if (c.den().is_one() && df.den().is_one()) {
      fused.emplace_back(&c.num(), &df.num());
    } else {
      out += c * df;
    }
  }
  if (!fused.empty()) out += RatFunc(sum_of_products(f.nvars(), fused));
  return out;
}

namespace {

// d_var o E, using d_var o (b .) = (d_var b) . + b . d_var on every term.
DiffOp left_partial(std::size_t var, const DiffOp& e) {
  DiffOp out(e.nvars());
  const MultiIndex step = MultiIndex::unit(e.nvars(), var);
  for (const auto& [beta, b] : e.coeffs()) {
    out.add_term(beta, b.partial(var));
    out.add_term(beta + step, b);
  }
  return out;
}

}  // namespace

DiffOp compose(const DiffOp& e1, const DiffOp& e2) {
  require_same_arity(e1.nvars(), e2.nvars());
  const std::size_t k = e1.nvars();
  DiffOp out(k);
  if (e1.is_zero() || e2.is_zero()) return out;
  // d^alpha o e2, built up one partial at a time.
  std::map<MultiIndex, DiffOp, GrlexDescending> shifted;
  shifted.emplace(MultiIndex(k), e2);
  auto get = [&](auto&& self, const MultiIndex& alpha) -> const DiffOp& {
    if (auto it = shifted.find(alpha); it != shifted.end()) return it->second;
    std::size_t var = 0;
    while (alpha[var] == 0) ++var;
    const DiffOp lower = self(self, alpha - MultiIndex::unit(k, var));
    return shifted.emplace(alpha, left_partial(var, lower)).first->second;
  };
  for (const auto& [alpha, a] : e1.coeffs()) out += get(get, alpha).scaled(a);
  return out;
}

OpWord OpWord::single(const RatFunc& coefficient, std::vector<Derivation> word) {
  OpWord w;
  w.nvars = coefficient.nvars();
  w.terms.push_back({coefficient, std::move(word)});
  return w;
}

std::string OpWord::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    std::string coef = t.coefficient.to_string();
    if (t.coefficient.den().is_one() && t.coefficient.num().term_count() > 1) coef = "(" + coef + ")";
    std::string body;
    for (const auto& d : t.word) {
      if (!body.empty()) body += " o ";
      body += "(" + d.to_string() + ")";
    }
    if (body.empty()) body = "id";
    out += t.coefficient.is_one() ? body : coef + " * " + body;
  }
  return out;
}

DiffOp normalize(const OpWord& w) {
  DiffOp out(w.nvars);
  for (const auto& term : w.terms) {
    require_same_arity(w.nvars, term.coefficient.nvars());
    for (const auto& d : term.word) require_same_arity(w.nvars, d.nvars());
    if (term.coefficient.is_zero()) continue;
    DiffOp acc = DiffOp::identity(w.nvars, RatFunc::one(w.nvars));
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
      acc = compose(DiffOp::from_derivation(*it), acc);
    }
    out += acc.scaled(term.coefficient);
  }
  return out;
}

RatFunc apply_word(const OpWord& w, const RatFunc& f) {
  require_same_arity(w.nvars, f.nvars());
  RatFunc out(w.nvars);
  for (const auto& term : w.terms) {
    RatFunc v = f;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) v = apply_derivation(*it, v);
    out += term.coefficient * v;
  }
  return out;
}

OpWord as_word(const DiffOp& e) {
  OpWord w;
  w.nvars = e.nvars();
  for (const auto& [alpha, c] : e.coeffs()) {
    std::vector<Derivation> word;
    for (std::size_t i = 0; i < alpha.arity(); ++i) {
      for (unsigned r = 0; r < alpha[i]; ++r) word.push_back(Derivation::coordinate(e.nvars(), i));
    }
    w.terms.push_back({c, std::move(word)});
  }
  return w;
}

}  // namespace derivcalc
