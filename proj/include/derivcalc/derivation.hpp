#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

/// A derivation of K = Q(t1..tk), determined by the images d(t_i). Every
/// derivation of K has this form: d = sum_i d(t_i) * d/dt_i.
class Derivation {
 public:
  Derivation() = default;
  /// Zero derivation.
  explicit Derivation(std::size_t nvars);
  explicit Derivation(std::vector<RatFunc> images);

  /// d/dt_index.
  static Derivation coordinate(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return images_.size(); }
  const std::vector<RatFunc>& images() const { return images_; }
  const RatFunc& image(std::size_t i) const { return images_[i]; }
  bool is_zero() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

  /// "t1 -> g1; t2 -> g2".
  std::string to_string() const;

 private:
  std::vector<RatFunc> images_;
};

/// sum_i d(t_i) * df/dt_i.
RatFunc apply_derivation(const Derivation& d, const RatFunc& f);

}  // namespace derivcalc
