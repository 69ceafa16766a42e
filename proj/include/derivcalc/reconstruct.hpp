#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "derivcalc/diffop.hpp"
#include "derivcalc/errors.hpp"
#include "derivcalc/leibniz.hpp"

namespace derivcalc {

using GridMap = std::map<MultiIndex, RatFunc, GrlexDescending>;

/// Values D(t^i) on the box {0..n}^k of exponent vectors.
struct GridValues {
  std::size_t nvars = 0;
  unsigned n = 0;
  GridMap values;

  /// Throws PreconditionError unless all (n+1)^k nodes are present.
  void require_complete() const;
};

/// Tabulates D(t^i) for every i in {0..n}^k.
GridValues tabulate_grid(const PointMap& d, unsigned n);

/// Newton forward-difference coefficients on {0..n}^k:
/// c_j = (Delta_1^{j1} ... Delta_k^{jk} p)(0) / (j1! ... jk!), so that
/// p(i) = sum_j c_j i1^[j1] ... ik^[jk] on the grid.
GridMap newton_coeffs(std::size_t nvars, unsigned n, const GridMap& p_values);

/// Evaluates sum_j c_j i^[j] at an integer point.
RatFunc falling_factorial_sum(const GridMap& coeffs, std::span<const long> point);

/// Grid data is inconsistent with an operator of degree <= n: the Newton
/// coefficient at `index` (with |index| > n) is nonzero.
class DegreeOverflow : public Error {
 public:
  explicit DegreeOverflow(MultiIndex index);
  const MultiIndex& index() const { return index_; }

 private:
  MultiIndex index_;
};

/// Rebuilds E = sum_j c_j t^j d^j from grid values, where c_j are the
/// Newton coefficients of p(i) = D(t^i) / t^i. E agrees with the data on
/// every grid monomial. It equals D on all of K only when D is additive
/// and D/j is a generalized polynomial of degree <= n; grid data alone
/// cannot certify that.
DiffOp reconstruct_operator(const GridValues& grid);

/// A finite partial map F -> K with pairwise distinct arguments.
class MapTable {
 public:
  explicit MapTable(std::size_t nvars) : nvars_(nvars) {}

  /// Throws DomainError on a repeated argument.
  void add(RatFunc x, RatFunc value);

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::pair<RatFunc, RatFunc>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t nvars_;
  std::vector<std::pair<RatFunc, RatFunc>> entries_;
};

MapTable tabulate(const PointMap& d, std::span<const RatFunc> xs);

struct FitResult {
  /// Set when the system is consistent; free unknowns are zero.
  std::optional<DiffOp> op;
  /// Table row that is inconsistent, when infeasible.
  std::optional<std::size_t> inconsistent_row;
  /// Dimension of the solution space (number of free unknowns).
  std::size_t solution_dim = 0;

  bool feasible() const { return op.has_value(); }
};

/// Solves sum_{|alpha| <= n} c_alpha d^alpha(x_m) = D(x_m) for c_alpha in K
/// by Gaussian elimination over K, dropping alpha = 0 when require_o0.
/// Pivots are chosen as the structurally smallest nonzero entry.
FitResult fit_operator(const MapTable& table, unsigned n, bool require_o0);

/// True when E(x) equals the tabulated value at every entry.
bool fits_table(const DiffOp& e, const MapTable& table);

/// Linear recurrence c_N a_n + ... + c_0 a_{n-N} = 0 with coefficients
/// c_0..c_N (c_N != 0) over K.
struct RecurrenceSpec {
  std::vector<RatFunc> coefficients;
  std::vector<RatFunc> sequence;
};

struct RecurrenceOutcome {
  bool passed = true;
  /// Smallest n >= N at which the relation fails.
  std::optional<std::size_t> first_failure;
};

RecurrenceOutcome check_recurrence(const RecurrenceSpec& spec);

}  // namespace derivcalc
