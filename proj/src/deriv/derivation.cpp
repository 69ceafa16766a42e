#include "derivcalc/derivation.hpp"

#include <algorithm>

#include "derivcalc/errors.hpp"

namespace derivcalc {

Derivation::Derivation(std::size_t nvars) : images_(nvars, RatFunc(nvars)) {}

Derivation::Derivation(std::vector<RatFunc> images) : images_(std::move(images)) {
  for (const auto& g : images_) require_same_arity(images_.size(), g.nvars());
}

Derivation Derivation::coordinate(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw DimensionError("coordinate derivation index out of range");
  Derivation d(nvars);
  d.images_[index] = RatFunc::one(nvars);
  return d;
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const RatFunc& g) { return g.is_zero(); });
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += "; ";
    out += "t" + std::to_string(i + 1) + " -> " + images_[i].to_string();
  }
  return out;
}

RatFunc apply_derivation(const Derivation& d, const RatFunc& f) {
  require_same_arity(d.nvars(), f.nvars());
  RatFunc out(f.nvars());
  if (f.is_constant()) return out;
  for (std::size_t i = 0; i < d.nvars(); ++i) {
    if (d.image(i).is_zero()) continue;
    out += d.image(i) * f.partial(i);
  }
  return out;
}

}  // namespace derivcalc
