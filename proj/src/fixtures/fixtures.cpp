#include "derivcalc/fixtures.hpp"

#include "derivcalc/errors.hpp"

namespace derivcalc {

GF2Poly char2_D(const GF2Poly& p) {
  std::vector<std::uint8_t> out;
  for (int i = 2; i <= p.degree(); ++i) {
    // C(i,2) is odd exactly when i mod 4 is 2 or 3.
    const std::uint8_t parity = static_cast<std::uint8_t>(((i * (i - 1)) / 2) & 1);
    if (out.size() < static_cast<std::size_t>(i - 1)) out.resize(i - 1, 0);
    out[i - 2] = parity & p.coeff(i);
  }
  return GF2Poly(std::move(out));
}

GF2Map gf2_derivation(GF2Poly image) {
  return [u = std::move(image)](const GF2Poly& p) { return u * p.derivative(); };
}

GF2Poly gf2_defect(const GF2Map& d, const GF2Poly& x, const GF2Poly& y) {
  return d(x * y) - d(x) * y - d(y) * x;
}

GF2Poly gf2_nested_defect(const GF2Map& d, const GF2Poly& x, const std::vector<GF2Poly>& ys) {
  if (ys.empty()) return d(x);
  const GF2Poly& y = ys.back();
  const std::vector<GF2Poly> inner(ys.begin(), ys.end() - 1);
  return gf2_nested_defect(d, x * y, inner) - y * gf2_nested_defect(d, x, inner) -
         x * gf2_nested_defect(d, y, inner);
}

Char2Report char2_order_check(const GF2Map& d, unsigned max_degree) {
  Char2Report r;
  r.max_degree = max_degree;
  r.d_of_x = d(GF2Poly::x());
  r.d_of_x2 = d(GF2Poly::monomial(2));
  const auto all = GF2Poly::all_up_to(max_degree);

  r.additive = true;
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (d(x + y) != d(x) + d(y)) r.additive = false;
    }
  }
  r.two_fold_vanishes = true;
  for (const auto& x : all) {
    for (const auto& y1 : all) {
      for (const auto& y2 : all) {
        if (!gf2_nested_defect(d, x, {y1, y2}).is_zero()) r.two_fold_vanishes = false;
      }
    }
  }
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (!r.derivation_witness && !gf2_defect(d, x, y).is_zero()) r.derivation_witness.emplace(x, y);
    }
  }
  return r;
}

Char2ComposeReport char2_compose_check(const GF2Poly& d1_x, const GF2Poly& d2_x, unsigned max_k) {
  Char2ComposeReport r;
  r.d1_x = d1_x;
  r.d2_x = d2_x;
  const GF2Map d1 = gf2_derivation(d1_x);
  const GF2Map d2 = gf2_derivation(d2_x);
  const GF2Map both = [&](const GF2Poly& p) { return d1(d2(p)); };
  r.a = d1(d2_x);

  r.identity_holds = true;
  for (unsigned k = 0; k <= max_k; ++k) {
    Char2ComposeRow row;
    row.k = k;
    row.lhs = both(GF2Poly::monomial(k));
    row.rhs = (k % 2 == 1) ? GF2Poly::monomial(k - 1) * r.a : GF2Poly();
    if (row.lhs != row.rhs) r.identity_holds = false;
    r.rows.push_back(std::move(row));
  }
  r.composition_is_derivation = true;
  for (const auto& x : GF2Poly::all_up_to(max_k / 2)) {
    for (const auto& y : GF2Poly::all_up_to(max_k / 2)) {
      if (!gf2_defect(both, x, y).is_zero()) r.composition_is_derivation = false;
    }
  }
  return r;
}

Char2ComposeReport char2_compose_check(const GF2Poly& a, unsigned max_k) {
  return char2_compose_check(a, GF2Poly::x(), max_k);
}

PairPoly PairPoly::monomials(unsigned i, unsigned j) {
  return {MultiPoly::monomial(1, Monomial{i}), MultiPoly::monomial(1, Monomial{j})};
}

PairPoly PairPoly::one() { return monomials(0, 0); }

std::string PairPoly::to_string() const {
  auto x_form = [](const MultiPoly& p) {
    std::string s = p.to_string();
    for (std::size_t pos = s.find("t1"); pos != std::string::npos; pos = s.find("t1", pos)) s.replace(pos, 2, "x");
    return s;
  };
  return "(" + x_form(first) + ", " + x_form(second) + ")";
}

PairPoly product_d1(const PairPoly& v) { return {v.first.derivative(0), MultiPoly(1)}; }

PairPoly product_d2(const PairPoly& v) { return {MultiPoly(1), v.second.derivative(0)}; }

namespace {

bool is_derivation_on(PairPoly (*d)(const PairPoly&), const std::vector<PairPoly>& samples) {
  for (const auto& x : samples) {
    for (const auto& y : samples) {
      if (d(x + y) != d(x) + d(y)) return false;
      if (d(x * y) != d(x) * y + d(y) * x) return false;
    }
  }
  return true;
}

}  // namespace

ProductRingReport product_ring_demo(unsigned max_exponent) {
  ProductRingReport r;
  r.max_exponent = max_exponent;
  std::vector<PairPoly> samples;
  for (unsigned i = 0; i <= max_exponent; ++i) {
    for (unsigned j = 0; j <= max_exponent; ++j) samples.push_back(PairPoly::monomials(i, j));
  }
  // A few non-monomial elements, including zero divisors.
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly one = MultiPoly::constant(1, 1);
  samples.push_back({x + one, MultiPoly(1)});
  samples.push_back({MultiPoly(1), x * x - one.scaled(3)});
  samples.push_back({x.scaled(BigRational(1, 2)), x * x * x + x});

  r.d1_is_derivation = is_derivation_on(product_d1, samples);
  r.d2_is_derivation = is_derivation_on(product_d2, samples);
  r.d1_nonzero = !product_d1({x, MultiPoly(1)}).is_zero();
  r.d2_nonzero = !product_d2({MultiPoly(1), x}).is_zero();
  r.composition_vanishes = true;
  for (unsigned i = 0; i <= max_exponent; ++i) {
    for (unsigned j = 0; j <= max_exponent; ++j) {
      if (!product_d1(product_d2(PairPoly::monomials(i, j))).is_zero()) r.composition_vanishes = false;
    }
  }
  return r;
}

CompositionOrderReport composition_order_demo(const std::vector<Derivation>& derivations, const CompositionOrderOptions& options) {
  if (derivations.empty()) throw PreconditionError("composition demo needs at least one derivation");
  const std::size_t k = derivations.front().nvars();
  for (const auto& d : derivations) {
    require_same_arity(k, d.nvars());
    if (d.is_zero()) throw PreconditionError("composition demo requires nonzero derivations");
  }
  CompositionOrderReport r;
  r.n = static_cast<int>(derivations.size());
  r.composed = normalize(OpWord::single(RatFunc::one(k), derivations));
  r.degree = degree(r.composed);
  r.exponent_poly = exponent_polynomial(r.composed);
  r.exponent_degree = expoly_degree(r.exponent_poly);

  const PointMap d = PointMap::from_diffop(r.composed);
  r.lower_witness = find_defect_witness(d, r.n - 1, options.seed, options.witness_tries);

  Sampler sampler(options.seed ^ 0x5bd1e995u);
  r.top_vanishes = true;
  for (int t = 0; t < options.vanishing_tuples && r.top_vanishes; ++t) {
    const RatFunc x(sampler.nonzero_polynomial(k, options.vanishing_degree));
    std::vector<RatFunc> ys;
    for (int m = 0; m < r.n; ++m) ys.emplace_back(sampler.nonzero_polynomial(k, options.vanishing_degree));
    if (!nested_defect(d, x, ys).is_zero()) r.top_vanishes = false;
  }
  return r;
}

}  // namespace derivcalc
