#include "derivcalc/gf2poly.hpp"

#include <algorithm>

namespace derivcalc {

GF2Poly::GF2Poly(std::vector<std::uint8_t> coeffs) : c_(std::move(coeffs)) {
  for (auto& v : c_) v &= 1u;
  trim();
}

void GF2Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GF2Poly GF2Poly::monomial(unsigned degree) {
  std::vector<std::uint8_t> c(degree + 1, 0);
  c[degree] = 1;
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::from_bits(std::uint64_t bits) {
  std::vector<std::uint8_t> c;
  for (; bits != 0; bits >>= 1) c.push_back(static_cast<std::uint8_t>(bits & 1u));
  return GF2Poly(std::move(c));
}

std::vector<GF2Poly> GF2Poly::all_up_to(unsigned max_degree) {
  std::vector<GF2Poly> out;
  const std::uint64_t count = std::uint64_t{1} << (max_degree + 1);
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(from_bits(bits));
  return out;
}

GF2Poly operator+(const GF2Poly& a, const GF2Poly& b) {
  std::vector<std::uint8_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) ^ b.coeff(i);
  return GF2Poly(std::move(c));
}

GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint8_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] ^= b.c_[j];
  }
  return GF2Poly(std::move(c));
}

GF2Poly GF2Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<std::uint8_t> c(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = static_cast<std::uint8_t>((i & 1u) & c_[i]);
  return GF2Poly(std::move(c));
}

std::string GF2Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace derivcalc
