// Acceptance gate: runs the eight acceptance criteria with exact arithmetic
// and prints one PASS/FAIL line per criterion. A criterion also fails when it
// exceeds its runtime limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "derivcalc/fixtures.hpp"
#include "derivcalc/genpoly.hpp"
#include "derivcalc/leibniz.hpp"
#include "derivcalc/reconstruct.hpp"
#include "derivcalc/sampling.hpp"

namespace dc = derivcalc;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

dc::Derivation random_derivation(dc::Sampler& s, std::size_t k) {
  for (;;) {
    std::vector<dc::RatFunc> images;
    for (std::size_t i = 0; i < k; ++i) images.emplace_back(s.polynomial(k, 2, 3));
    dc::Derivation d(std::move(images));
    if (!d.is_zero()) return d;
  }
}

// Random operator of degree exactly n (n >= 1) with small coefficients;
// the identity term is included only when with_identity is set.
dc::DiffOp random_operator(dc::Sampler& s, std::size_t k, unsigned n, bool with_identity) {
  for (;;) {
    dc::DiffOp e(k);
    for (const auto& alpha : dc::indices_up_to(k, n)) {
      if (alpha.is_zero() && !with_identity) continue;
      if (!s.coin(0.5)) continue;
      e.add_term(alpha, s.coin(0.25) ? s.rational_function(k, 1, 1, 2) : dc::RatFunc(s.polynomial(k, 1, 2)));
    }
    if (dc::degree(e) == static_cast<int>(n)) return e;
  }
}

std::string str(const auto& x) { return x.to_string(); }

// 1. Exact order of compositions of n derivations.
Verdict composition_order_suite() {
  Verdict v;
  for (int n = 1; n <= 4 && v.ok; ++n) {
    dc::Sampler s(dc::kDefaultSeed + static_cast<std::uint64_t>(n));
    for (int c = 0; c < 50 && v.ok; ++c) {
      std::vector<dc::Derivation> ds;
      for (int m = 0; m < n; ++m) ds.push_back(random_derivation(s, 2));
      dc::CompositionOrderOptions opts;
      opts.seed = dc::kDefaultSeed + 1000u * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c);
      const auto r = dc::composition_order_demo(ds, opts);
      const std::string tag = "n=" + std::to_string(n) + " case " + std::to_string(c) + ": ";
      v.require(r.degree == n, tag + "degree " + std::to_string(r.degree));
      v.require(r.exponent_degree == n, tag + "exponent degree " + std::to_string(r.exponent_degree));
      v.require(r.top_vanishes, tag + "n-fold defect did not vanish");
      v.require(r.lower_witness.has_value(), tag + "no (n-1)-fold witness in 50 tuples");
    }
  }
  return v;
}

// 2. Grid reconstruction round trip.
Verdict reconstruction_round_trip() {
  Verdict v;
  dc::Sampler s(dc::kDefaultSeed + 2);
  for (int c = 0; c < 100 && v.ok; ++c) {
    const std::size_t k = 1 + static_cast<std::size_t>(c % 2);
    const unsigned n = 1 + static_cast<unsigned>(c % 3);
    const dc::DiffOp e = random_operator(s, k, n, s.coin());
    const dc::DiffOp back = dc::reconstruct_operator(dc::tabulate_grid(dc::PointMap::from_diffop(e), n));
    v.require(back == e, "case " + std::to_string(c) + ": " + str(e) + " came back as " + str(back));
  }
  return v;
}

// 3. Order, generalized-polynomial degree and finite-set fitting agree.
Verdict equivalence_echo() {
  Verdict v;
  dc::Sampler s(dc::kDefaultSeed + 3);
  for (int c = 0; c < 25 && v.ok; ++c) {
    const std::size_t k = 1 + static_cast<std::size_t>(c % 2);
    const unsigned n = 1 + static_cast<unsigned>(c % 3);
    const dc::DiffOp e = random_operator(s, k, n, false);
    const std::string tag = "case " + std::to_string(c) + " (" + str(e) + "): ";

    // (a) level n passes on 10 sets; some set refutes level n-1.
    const dc::SemigroupMap f = dc::SemigroupMap::over_identity(e);
    bool refuted = false;
    for (int set = 0; set < 10 && v.ok; ++set) {
      const std::uint64_t seed = dc::kDefaultSeed + 100u * static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(set);
      const auto gs = dc::default_gp_samples(k, 2, seed);
      const auto xs = dc::default_gp_samples(k, 1, seed ^ 0xabcdefu);
      v.require(dc::gp_degree_check(f, static_cast<int>(n), gs, xs).passed, tag + "level n check failed");
      if (!refuted) refuted = !dc::gp_degree_check(f, static_cast<int>(n) - 1, gs, xs).passed;
    }
    v.require(refuted, tag + "no refuting witness at level n-1");

    // (b) fit on 10 non-monomial rational functions with zero residual.
    std::vector<dc::RatFunc> xs;
    while (xs.size() < 10) {
      dc::RatFunc x = s.rational_function(k, 1, 1, 2);
      const bool monomial_ratio = x.num().is_monomial() && x.den().is_monomial();
      if (!x.is_zero() && !monomial_ratio && std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(std::move(x));
    }
    const dc::MapTable table = dc::tabulate(dc::PointMap::from_diffop(e), xs);
    const dc::FitResult fit = dc::fit_operator(table, n, true);
    v.require(fit.feasible(), tag + "fit infeasible");
    if (fit.feasible()) v.require(dc::fits_table(*fit.op, table), tag + "fit has nonzero residual");
  }
  return v;
}

// 4. Characteristic-2 collapse.
Verdict char2_fixture() {
  Verdict v;
  v.require(dc::char2_D(dc::GF2Poly::x()).is_zero(), "D(x) != 0");
  v.require(dc::char2_D(dc::GF2Poly::monomial(2)) == dc::GF2Poly::one(), "D(x^2) != 1");
  const dc::Char2Report r = dc::char2_order_check(4);
  v.require(r.additive, "D not additive on degree <= 4");
  v.require(r.two_fold_vanishes, "2-fold defect of D does not vanish");
  v.require(!r.derivation_candidate(), "D looks like a derivation");
  for (const auto& d1x : dc::GF2Poly::all_up_to(2)) {
    for (const auto& d2x : dc::GF2Poly::all_up_to(2)) {
      const auto cr = dc::char2_compose_check(d1x, d2x, 8);
      v.require(cr.identity_holds, "composition identity fails for d1(x) = " + str(d1x) + ", d2(x) = " + str(d2x));
    }
  }
  return v;
}

// 5. Product ring: nonzero derivations with zero composition.
Verdict product_ring_fixture() {
  Verdict v;
  const dc::ProductRingReport r = dc::product_ring_demo(6);
  v.require(r.d1_is_derivation && r.d2_is_derivation, "product rule fails");
  v.require(r.d1_nonzero && r.d2_nonzero, "a derivation is zero");
  v.require(r.composition_vanishes, "d1 o d2 is not zero on (x^i, x^j)");
  return v;
}

// 6. Multiplying by a nonzero additive map raises the degree by one.
Verdict degree_bump_suite() {
  Verdict v;
  dc::Sampler s(dc::kDefaultSeed + 6);
  for (int c = 0; c < 50 && v.ok; ++c) {
    const std::size_t k = 1 + static_cast<std::size_t>(c % 2);
    dc::ExpPoly p(k);
    while (p.is_zero()) {
      for (const auto& beta : dc::indices_up_to(k, 1 + static_cast<unsigned>(c % 3))) {
        if (s.coin(0.5)) p.add_term(beta, s.rational_function(k, 1, 1, 2));
      }
    }
    std::vector<dc::RatFunc> a(k, dc::RatFunc(k));
    while (std::all_of(a.begin(), a.end(), [](const dc::RatFunc& x) { return x.is_zero(); })) {
      for (auto& x : a) x = dc::RatFunc(s.polynomial(k, 1, 3));
    }
    const int got = dc::degree_bump(p, a);
    v.require(got == dc::expoly_degree(p) + 1,
              "case " + std::to_string(c) + ": degree " + std::to_string(got) + " for p = " + str(p));
  }
  return v;
}

// 7. Recurrence checker flags single-entry perturbations at the right index.
Verdict recurrence_suite() {
  Verdict v;
  const std::size_t k = 1;
  auto constant = [&](long c) { return dc::RatFunc::constant(k, c); };
  const dc::RatFunc t = dc::RatFunc::variable(k, 0);

  struct Case {
    std::string name;
    std::vector<dc::RatFunc> coeffs;
    std::vector<dc::RatFunc> seq;
  };
  std::vector<Case> cases;
  {
    Case fib{"fibonacci", {constant(-1), constant(-1), constant(1)}, {constant(1), constant(1)}};
    while (fib.seq.size() < 12) fib.seq.push_back(fib.seq[fib.seq.size() - 1] + fib.seq[fib.seq.size() - 2]);
    cases.push_back(fib);
    Case geo{"geometric", {-t, constant(1)}, {constant(1)}};
    while (geo.seq.size() < 10) geo.seq.push_back(geo.seq.back() * t);
    cases.push_back(geo);
    Case gap{"step-two", {constant(-1), constant(0), constant(1)}, {constant(2), t}};
    while (gap.seq.size() < 10) gap.seq.push_back(gap.seq[gap.seq.size() - 2]);
    cases.push_back(gap);
  }

  for (const auto& c : cases) {
    v.require(dc::check_recurrence({c.coeffs, c.seq}).passed, c.name + " does not pass");
    const std::size_t order = c.coeffs.size() - 1;
    for (std::size_t p = 0; p < c.seq.size(); ++p) {
      auto seq = c.seq;
      seq[p] += constant(1);
      std::size_t expected = 0;
      for (std::size_t n = order; n < seq.size(); ++n) {
        if (n - order <= p && p <= n && !c.coeffs[p + order - n].is_zero()) {
          expected = n;
          break;
        }
      }
      const dc::RecurrenceOutcome r = dc::check_recurrence({c.coeffs, seq});
      v.require(!r.passed && r.first_failure == expected,
                c.name + ": perturbing entry " + std::to_string(p) + " not caught at " + std::to_string(expected));
    }
  }
  return v;
}

// 8. Degree is additive under composition.
Verdict degree_additivity_suite() {
  Verdict v;
  dc::Sampler s(dc::kDefaultSeed + 8);
  for (int c = 0; c < 100 && v.ok; ++c) {
    const std::size_t k = 1 + static_cast<std::size_t>(c % 2);
    const dc::DiffOp a = random_operator(s, k, 1 + static_cast<unsigned>(s.integer(0, 2)), true);
    const dc::DiffOp b = random_operator(s, k, 1 + static_cast<unsigned>(s.integer(0, 2)), true);
    const int got = dc::degree(dc::compose(a, b));
    v.require(got == dc::degree(a) + dc::degree(b),
              "case " + std::to_string(c) + ": degree " + std::to_string(got) + " for " + str(a) + " o " + str(b));
  }
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace

// Optional arguments select criteria by id; the default runs all of them.
int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "exact order of compositions, n = 1..4", 60, composition_order_suite},
      {2, "grid reconstruction round trip", 30, reconstruction_round_trip},
      {3, "order / gp-degree / fitting agreement", 60, equivalence_echo},
      {4, "characteristic-2 fixture", 10, char2_fixture},
      {5, "product-ring fixture", 5, product_ring_fixture},
      {6, "degree bump", 10, degree_bump_suite},
      {7, "recurrence perturbations", 1, recurrence_suite},
      {8, "degree additivity", 20, degree_additivity_suite},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.ok && secs > c.limit_seconds) {
      v.ok = false;
      v.detail = "over time limit";
    }
    if (!v.ok) ++failures;
    std::printf("[%s] %d. %s (%.2f s, limit %.0f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, v.ok ? "" : ": ", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
