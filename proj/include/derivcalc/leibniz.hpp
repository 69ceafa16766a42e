#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "derivcalc/diffop.hpp"
#include "derivcalc/outcome.hpp"
#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

/// A map K -> K evaluated pointwise: either a DiffOp or any pure host
/// function. Additivity is checked by the procedures that need it.
class PointMap {
 public:
  using Fn = std::function<RatFunc(const RatFunc&)>;

  PointMap(std::size_t nvars, Fn fn) : nvars_(nvars), fn_(std::move(fn)) {}
  static PointMap from_diffop(DiffOp e);

  std::size_t nvars() const { return nvars_; }
  RatFunc operator()(const RatFunc& x) const { return fn_(x); }

 private:
  std::size_t nvars_;
  Fn fn_;
};

/// B(x, y) = D(xy) - D(x) y - D(y) x.
RatFunc defect(const PointMap& d, const RatFunc& x, const RatFunc& y);

/// (((D_{y1})_{y2}) ... )_{ym}(x) with D_y(x) = D(xy) - y D(x) - x D(y).
/// With no ys this is D(x). D is evaluated once per distinct argument.
RatFunc nested_defect(const PointMap& d, const RatFunc& x, std::span<const RatFunc> ys);

/// Checks the finite-data consequences of D having order <= n:
/// additivity on sample pairs, D(1) = 0, and every n-fold nested defect over
/// samples^(n+1) vanishing. Witness order is (x, y1, ..., yn).
///
/// A pass is evidence on the given samples only, never a proof for an
/// arbitrary map.
CheckOutcome order_upper_check(const PointMap& d, int n, std::span<const RatFunc> samples);

struct ExactOrder {
  int order = 0;
  /// Set for the zero operator, whose order is reported as 0.
  bool zero_map = false;
};

/// Exact derivation order of an operator without identity term, which
/// equals its degree. Throws DomainError("not in O_0") otherwise.
ExactOrder order_exact(const DiffOp& e);

struct DefectWitness {
  RatFunc x;
  std::vector<RatFunc> ys;
  RatFunc value;
};

/// Searches seeded random tuples (polynomials of degree <= 3, coefficients
/// in [-3, 3]) for a nonvanishing m-fold nested defect. Deterministic given
/// the seed.
std::optional<DefectWitness> find_defect_witness(const PointMap& d, int m, std::uint64_t seed,
                                                 int max_tries = 50);

}  // namespace derivcalc
