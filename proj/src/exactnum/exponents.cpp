#include "derivcalc/exponents.hpp"

#include <algorithm>

#include "derivcalc/errors.hpp"

namespace derivcalc {

bool Exponents::divides(const Exponents& other) const {
  require_same_arity(arity(), other.arity());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Exponents Exponents::operator+(const Exponents& rhs) const {
  require_same_arity(arity(), rhs.arity());
  Exponents r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += rhs.e_[i];
  return r;
}

Exponents Exponents::operator-(const Exponents& rhs) const {
  require_same_arity(arity(), rhs.arity());
  Exponents r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (rhs.e_[i] > e_[i]) throw DomainError("negative exponent in multi-index difference");
    r.e_[i] -= rhs.e_[i];
  }
  return r;
}

std::size_t Exponents::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : e_) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

std::strong_ordering grlex_compare(const Exponents& a, const Exponents& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  const std::size_t n = std::min(a.arity(), b.arity());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.arity() <=> b.arity();
}

std::string monomial_to_string(const Exponents& e, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void fill_box(std::size_t k, unsigned n, std::size_t pos, Exponents& cur,
              std::vector<Exponents>& out, bool simplex, unsigned budget) {
  if (pos == k) {
    out.push_back(cur);
    return;
  }
  const unsigned top = simplex ? budget : n;
  for (unsigned v = 0; v <= top; ++v) {
    cur[pos] = v;
    fill_box(k, n, pos + 1, cur, out, simplex, simplex ? budget - v : budget);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> indices_up_to(std::size_t k, unsigned n) {
  std::vector<Exponents> out;
  Exponents cur(k);
  fill_box(k, n, 0, cur, out, true, n);
  std::sort(out.begin(), out.end(), GrlexDescending{});
  return out;
}

std::vector<Exponents> grid_box(std::size_t k, unsigned n) {
  std::vector<Exponents> out;
  Exponents cur(k);
  fill_box(k, n, 0, cur, out, false, n);
  std::sort(out.begin(), out.end(), GrlexDescending{});
  return out;
}

}  // namespace derivcalc
