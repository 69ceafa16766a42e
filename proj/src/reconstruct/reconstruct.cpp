#include "derivcalc/reconstruct.hpp"

#include <algorithm>
#include <string>

#include "derivcalc/genpoly.hpp"

namespace derivcalc {

void GridValues::require_complete() const {
  for (const auto& i : grid_box(nvars, n)) {
    if (!values.contains(i)) {
      throw PreconditionError("incomplete grid: missing value at exponent " + monomial_to_string(i));
    }
  }
}

GridValues tabulate_grid(const PointMap& d, unsigned n) {
  GridValues g{d.nvars(), n, {}};
  for (const auto& i : grid_box(d.nvars(), n)) {
    g.values.emplace(i, d(RatFunc(MultiPoly::monomial(BigRational(1), i))));
  }
  return g;
}

namespace {

// Mixed-radix position of i in a dense (n+1)^k array, first variable slowest.
std::size_t flat_index(const MultiIndex& i, unsigned n) {
  std::size_t pos = 0;
  for (std::size_t m = 0; m < i.arity(); ++m) pos = pos * (n + 1) + i[m];
  return pos;
}

}  // namespace

GridMap newton_coeffs(std::size_t nvars, unsigned n, const GridMap& p_values) {
  const auto nodes = grid_box(nvars, n);
  std::vector<RatFunc> dense(nodes.size(), RatFunc(nvars));
  for (const auto& i : nodes) {
    auto it = p_values.find(i);
    if (it == p_values.end()) {
      throw PreconditionError("incomplete grid: missing value at exponent " + monomial_to_string(i));
    }
    dense[flat_index(i, n)] = it->second;
  }

  // Forward-difference transform along each axis in turn; afterwards entry
  // j holds (Delta^j p)(0).
  std::size_t stride = 1;
  for (std::size_t axis = nvars; axis-- > 0;) {
    const std::size_t block = stride * (n + 1);
    for (std::size_t base = 0; base < dense.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (unsigned r = 1; r <= n; ++r) {
          for (unsigned s = n; s >= r; --s) {
            dense[base + off + s * stride] -= dense[base + off + (s - 1) * stride];
          }
        }
      }
    }
    stride = block;
  }

  GridMap out;
  for (const auto& j : nodes) {
    RatFunc c = dense[flat_index(j, n)];
    if (c.is_zero()) continue;
    BigInt denom = 1;
    for (std::size_t m = 0; m < nvars; ++m) denom *= factorial(j[m]);
    out.emplace(j, c.scaled(BigRational(BigInt(1), denom)));
  }
  return out;
}

RatFunc falling_factorial_sum(const GridMap& coeffs, std::span<const long> point) {
  const std::size_t k = point.size();
  RatFunc sum(k);
  for (const auto& [j, c] : coeffs) {
    BigRational w = 1;
    for (std::size_t m = 0; m < k; ++m) {
      for (unsigned r = 0; r < j[m]; ++r) w *= BigRational(point[m] - static_cast<long>(r));
    }
    sum += c.scaled(w);
  }
  return sum;
}

namespace {
std::string index_tuple(const MultiIndex& index) {
  std::string s = "(";
  for (std::size_t m = 0; m < index.arity(); ++m) s += (m ? "," : "") + std::to_string(index[m]);
  return s + ")";
}
}  // namespace

DegreeOverflow::DegreeOverflow(MultiIndex index)
    : Error("degree overflow: nonzero coefficient at multi-index " + index_tuple(index)),
      index_(std::move(index)) {}

DiffOp reconstruct_operator(const GridValues& grid) {
  grid.require_complete();
  const std::size_t k = grid.nvars;
  GridMap p;
  for (const auto& [i, v] : grid.values) {
    p.emplace(i, v / RatFunc(MultiPoly::monomial(BigRational(1), i)));
  }
  const GridMap c = newton_coeffs(k, grid.n, p);
  DiffOp e(k);
  for (const auto& [j, cj] : c) {
    if (j.total_degree() > grid.n) throw DegreeOverflow(j);
    e.add_term(j, cj * RatFunc(MultiPoly::monomial(BigRational(1), j)));
  }
  return e;
}

void MapTable::add(RatFunc x, RatFunc value) {
  require_same_arity(nvars_, x.nvars());
  require_same_arity(nvars_, value.nvars());
  for (const auto& [e, v] : entries_) {
    if (e == x) throw DomainError("duplicate table argument: " + x.to_string());
  }
  entries_.emplace_back(std::move(x), std::move(value));
}

MapTable tabulate(const PointMap& d, std::span<const RatFunc> xs) {
  MapTable t(d.nvars());
  for (const auto& x : xs) t.add(x, d(x));
  return t;
}

FitResult fit_operator(const MapTable& table, unsigned n, bool require_o0) {
  const std::size_t k = table.nvars();
  std::vector<MultiIndex> unknowns = indices_up_to(k, n);
  if (require_o0) std::erase(unknowns, MultiIndex(k));
  const std::size_t cols = unknowns.size();

  // Augmented rows [d^alpha(x_m) ... | D(x_m)], tagged with the table row.
  std::vector<std::vector<RatFunc>> rows;
  std::vector<std::size_t> origin;
  for (std::size_t m = 0; m < table.size(); ++m) {
    const auto& [x, value] = table.entries()[m];
    DerivativeTable derivs(x);
    std::vector<RatFunc> row;
    row.reserve(cols + 1);
    for (const auto& alpha : unknowns) row.push_back(derivs.get(alpha));
    row.push_back(value);
    rows.push_back(std::move(row));
    origin.push_back(m);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      if (best == rows.size() || rows[r][col].size() < rows[best][col].size()) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    std::swap(origin[rank], origin[best]);

    const RatFunc inv = rows[rank][col].reciprocal();
    for (std::size_t c = col; c <= cols; ++c) {
      if (!rows[rank][c].is_zero()) rows[rank][c] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const RatFunc factor = rows[r][col];
      for (std::size_t c = col; c <= cols; ++c) {
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  FitResult result;
  result.solution_dim = cols - rank;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][cols].is_zero()) {
      result.inconsistent_row = origin[r];
      return result;
    }
  }
  DiffOp e(k);
  for (std::size_t r = 0; r < rank; ++r) e.add_term(unknowns[pivot_cols[r]], rows[r][cols]);
  result.op = std::move(e);
  return result;
}

bool fits_table(const DiffOp& e, const MapTable& table) {
  return std::all_of(table.entries().begin(), table.entries().end(),
                     [&](const auto& entry) { return apply_diffop(e, entry.first) == entry.second; });
}

RecurrenceOutcome check_recurrence(const RecurrenceSpec& spec) {
  const auto& c = spec.coefficients;
  const auto& a = spec.sequence;
  if (c.empty()) throw PreconditionError("recurrence needs at least one coefficient");
  const std::size_t order = c.size() - 1;
  if (c.back().is_zero()) throw PreconditionError("leading recurrence coefficient must be nonzero");
  if (a.size() < order + 1) throw PreconditionError("sequence shorter than recurrence order + 1");
  for (std::size_t n = order; n < a.size(); ++n) {
    RatFunc sum(c.back().nvars());
    for (std::size_t r = 0; r <= order; ++r) sum += c[r] * a[n - order + r];
    if (!sum.is_zero()) return {false, n};
  }
  return {};
}

}  // namespace derivcalc
