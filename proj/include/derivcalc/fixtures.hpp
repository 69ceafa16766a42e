#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "derivcalc/diffop.hpp"
#include "derivcalc/genpoly.hpp"
#include "derivcalc/gf2poly.hpp"
#include "derivcalc/leibniz.hpp"
#include "derivcalc/sampling.hpp"

namespace derivcalc {

// --- characteristic 2 ------------------------------------------------------

using GF2Map = std::function<GF2Poly(const GF2Poly&)>;

/// D(sum a_i x^i) = sum_{i>=2} C(i,2) a_i x^(i-2) over GF(2). An order-2
/// derivation on F2[x] that is not a derivation.
GF2Poly char2_D(const GF2Poly& p);

/// The derivation of F2[x] with d(x) = image, i.e. p -> image * p'.
GF2Map gf2_derivation(GF2Poly image);

/// D(xy) - D(x) y - D(y) x over GF(2).
GF2Poly gf2_defect(const GF2Map& d, const GF2Poly& x, const GF2Poly& y);
/// Nested defect in the same convention as nested_defect over K.
GF2Poly gf2_nested_defect(const GF2Map& d, const GF2Poly& x, const std::vector<GF2Poly>& ys);

struct Char2Report {
  unsigned max_degree = 0;
  GF2Poly d_of_x;
  GF2Poly d_of_x2;
  bool additive = false;
  bool two_fold_vanishes = false;
  /// First pair (in enumeration order) with a nonzero Leibniz defect.
  std::optional<std::pair<GF2Poly, GF2Poly>> derivation_witness;

  /// Order <= 2 on every tested input.
  bool passed() const { return additive && two_fold_vanishes; }
  /// No Leibniz defect found: the map behaves like a derivation here.
  bool derivation_candidate() const { return !derivation_witness.has_value(); }
};

/// Exhaustive check over every polynomial of degree <= max_degree.
Char2Report char2_order_check(const GF2Map& d, unsigned max_degree = 4);
inline Char2Report char2_order_check(unsigned max_degree = 4) { return char2_order_check(char2_D, max_degree); }

struct Char2ComposeRow {
  unsigned k = 0;
  GF2Poly lhs;  // (d1 o d2)(x^k)
  GF2Poly rhs;  // k x^(k-1) a
};

struct Char2ComposeReport {
  GF2Poly d1_x;
  GF2Poly d2_x;
  GF2Poly a;  // d1(d2(x))
  std::vector<Char2ComposeRow> rows;
  bool identity_holds = false;
  /// d1 o d2 has zero Leibniz defect on all pairs of degree <= max_k / 2.
  bool composition_is_derivation = false;

  bool passed() const { return identity_holds && composition_is_derivation; }
};

/// Verifies (d1 o d2)(x^k) = k x^(k-1) a for k = 0..max_k, where d1, d2 are
/// the derivations with d1(x) = d1_x, d2(x) = d2_x and a = d1(d2(x)).
Char2ComposeReport char2_compose_check(const GF2Poly& d1_x, const GF2Poly& d2_x, unsigned max_k = 8);
/// Same with d1(x) = a and d2(x) = x, so that d1(d2(x)) = a.
Char2ComposeReport char2_compose_check(const GF2Poly& a, unsigned max_k = 8);

// --- product ring Q[x] x Q[x] ----------------------------------------------

/// Element of Q[x] x Q[x] with componentwise operations. Not an integral
/// domain: (1,0)(0,1) = 0.
struct PairPoly {
  MultiPoly first{1};
  MultiPoly second{1};

  static PairPoly monomials(unsigned i, unsigned j);
  static PairPoly one();

  friend PairPoly operator+(const PairPoly& a, const PairPoly& b) {
    return {a.first + b.first, a.second + b.second};
  }
  friend PairPoly operator-(const PairPoly& a, const PairPoly& b) {
    return {a.first - b.first, a.second - b.second};
  }
  friend PairPoly operator*(const PairPoly& a, const PairPoly& b) {
    return {a.first * b.first, a.second * b.second};
  }
  friend bool operator==(const PairPoly&, const PairPoly&) = default;
  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  std::string to_string() const;
};

/// (p, q) -> (p', 0)
PairPoly product_d1(const PairPoly& v);
/// (p, q) -> (0, q')
PairPoly product_d2(const PairPoly& v);

struct ProductRingReport {
  bool d1_is_derivation = false;
  bool d2_is_derivation = false;
  bool d1_nonzero = false;
  bool d2_nonzero = false;
  /// d1 o d2 vanishes on every (x^i, x^j), i, j <= max_exponent.
  bool composition_vanishes = false;
  unsigned max_exponent = 0;

  bool passed() const {
    return d1_is_derivation && d2_is_derivation && d1_nonzero && d2_nonzero && composition_vanishes;
  }
};

ProductRingReport product_ring_demo(unsigned max_exponent = 6);

// --- exact order of compositions -------------------------------------------

struct CompositionOrderOptions {
  std::uint64_t seed = kDefaultSeed;
  int vanishing_tuples = 5;
  unsigned vanishing_degree = 2;
  int witness_tries = 50;
};

struct CompositionOrderReport {
  DiffOp composed;
  int degree = -1;
  ExpPoly exponent_poly;
  int exponent_degree = -1;
  /// (n-1)-fold nested defect that does not vanish.
  std::optional<DefectWitness> lower_witness;
  /// Every n-fold nested defect on the sampled tuples vanished.
  bool top_vanishes = false;
  int n = 0;

  bool passed() const {
    return degree == n && exponent_degree == n && lower_witness.has_value() && top_vanishes;
  }
};

/// Composes d_1 o ... o d_n, normalizes, and reports degree, exponent
/// polynomial degree, an (n-1)-fold defect witness, and n-fold vanishing on
/// seeded samples. Throws PreconditionError for an empty list or a zero
/// derivation.
CompositionOrderReport composition_order_demo(const std::vector<Derivation>& derivations, const CompositionOrderOptions& options = {});

}  // namespace derivcalc
