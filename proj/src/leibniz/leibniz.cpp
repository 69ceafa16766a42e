#include "derivcalc/leibniz.hpp"

#include <unordered_map>

#include "derivcalc/errors.hpp"
#include "derivcalc/sampling.hpp"

namespace derivcalc {

PointMap PointMap::from_diffop(DiffOp e) {
  const std::size_t k = e.nvars();
  return PointMap(k, [op = std::move(e)](const RatFunc& x) { return apply_diffop(op, x); });
}

RatFunc defect(const PointMap& d, const RatFunc& x, const RatFunc& y) {
  return d(x * y) - d(x) * y - d(y) * x;
}

namespace {

class MemoMap {
 public:
  explicit MemoMap(const PointMap& d) : d_(d) {}
  const RatFunc& operator()(const RatFunc& x) {
    if (auto it = cache_.find(x); it != cache_.end()) return it->second;
    return cache_.emplace(x, d_(x)).first->second;
  }

 private:
  const PointMap& d_;
  std::unordered_map<RatFunc, RatFunc, RatFuncHash> cache_;
};

RatFunc nested(MemoMap& d, const RatFunc& x, std::span<const RatFunc> ys) {
  if (ys.empty()) return d(x);
  const RatFunc& y = ys.back();
  const auto inner = ys.first(ys.size() - 1);
  return nested(d, x * y, inner) - y * nested(d, x, inner) - x * nested(d, y, inner);
}

}  // namespace

RatFunc nested_defect(const PointMap& d, const RatFunc& x, std::span<const RatFunc> ys) {
  MemoMap memo(d);
  return nested(memo, x, ys);
}

CheckOutcome order_upper_check(const PointMap& d, int n, std::span<const RatFunc> samples) {
  if (n < 0) throw PreconditionError("order bound must be nonnegative");
  if (samples.empty()) throw PreconditionError("order check needs at least one sample");
  const std::size_t k = d.nvars();
  MemoMap memo(d);

  for (std::size_t a = 0; a < samples.size(); ++a) {
    for (std::size_t b = a; b < samples.size(); ++b) {
      const RatFunc gap = memo(samples[a] + samples[b]) - memo(samples[a]) - memo(samples[b]);
      if (!gap.is_zero()) return CheckOutcome::fail("not additive", {samples[a], samples[b]}, gap);
    }
  }
  const RatFunc one = RatFunc::one(k);
  if (const RatFunc& at_one = memo(one); !at_one.is_zero()) {
    return CheckOutcome::fail("D(1) != 0", {one}, at_one);
  }

  // Odometer over samples^(n+1): index 0 is x, the rest are y1..yn.
  const std::size_t arity = static_cast<std::size_t>(n) + 1;
  std::vector<std::size_t> idx(arity, 0);
  std::vector<RatFunc> ys(arity - 1);
  for (;;) {
    for (std::size_t r = 1; r < arity; ++r) ys[r - 1] = samples[idx[r]];
    const RatFunc& x = samples[idx[0]];
    RatFunc v = nested(memo, x, ys);
    if (!v.is_zero()) {
      std::vector<RatFunc> witness{x};
      witness.insert(witness.end(), ys.begin(), ys.end());
      return CheckOutcome::fail(std::to_string(n) + "-fold nested defect is nonzero", std::move(witness),
                                std::move(v));
    }
    std::size_t pos = 0;
    while (pos < arity && ++idx[pos] == samples.size()) idx[pos++] = 0;
    if (pos == arity) break;
  }
  return CheckOutcome::pass();
}

ExactOrder order_exact(const DiffOp& e) {
  if (!e.annihilates_one()) throw DomainError("not in O_0: operator has an identity term, so E(1) != 0");
  if (e.is_zero()) return {0, true};
  return {degree(e), false};
}

std::optional<DefectWitness> find_defect_witness(const PointMap& d, int m, std::uint64_t seed, int max_tries) {
  if (m < 0) throw PreconditionError("nesting depth must be nonnegative");
  Sampler sampler(seed);
  const std::size_t k = d.nvars();
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    RatFunc x(sampler.nonzero_polynomial(k, 3));
    std::vector<RatFunc> ys;
    for (int r = 0; r < m; ++r) ys.emplace_back(sampler.nonzero_polynomial(k, 3));
    RatFunc v = nested_defect(d, x, ys);
    if (!v.is_zero()) return DefectWitness{std::move(x), std::move(ys), std::move(v)};
  }
  return std::nullopt;
}

}  // namespace derivcalc
