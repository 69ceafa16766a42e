#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "derivcalc/derivation.hpp"
#include "derivcalc/exponents.hpp"
#include "derivcalc/ratfunc.hpp"

namespace derivcalc {

/// Differential operator in canonical form sum_alpha c_alpha * d^alpha with
/// c_alpha in K. No stored coefficient is zero; iteration is grlex-descending.
class DiffOp {
 public:
  using Coeffs = std::map<MultiIndex, RatFunc, GrlexDescending>;

  DiffOp() = default;
  /// The zero operator on Q(t1..t_nvars).
  explicit DiffOp(std::size_t nvars) : nvars_(nvars) {}

  static DiffOp identity(std::size_t nvars, const RatFunc& c);
  static DiffOp partial(const RatFunc& c, MultiIndex alpha);
  static DiffOp from_derivation(const Derivation& d);
  static DiffOp from_coeffs(std::size_t nvars, Coeffs coeffs);

  std::size_t nvars() const { return nvars_; }
  const Coeffs& coeffs() const { return coeffs_; }
  /// Zero when alpha is absent.
  RatFunc coefficient(const MultiIndex& alpha) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Member of O_0: no identity term, equivalently E(1) = 0.
  bool annihilates_one() const;

  /// Adds c * d^alpha.
  void add_term(const MultiIndex& alpha, const RatFunc& c);

  DiffOp& operator+=(const DiffOp& rhs);
  DiffOp& operator-=(const DiffOp& rhs);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  DiffOp operator-() const;
  /// Left multiplication c * E.
  DiffOp scaled(const RatFunc& c) const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// "c1 * d[2,0] + c2 * d[0,1]"; identity terms print as the bare
  /// coefficient, and "0" for the zero operator.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Coeffs coeffs_;
};

/// Max |alpha| with nonzero coefficient; -1 for the zero operator.
int degree(const DiffOp& e);

RatFunc apply_diffop(const DiffOp& e, const RatFunc& f);

/// Canonical form of e1 o e2 (e2 applied first).
DiffOp compose(const DiffOp& e1, const DiffOp& e2);

/// Caches d^alpha f, building each from a neighbor one derivative lower.
class DerivativeTable {
 public:
  explicit DerivativeTable(RatFunc f);
  const RatFunc& get(const MultiIndex& alpha);

 private:
  std::map<MultiIndex, RatFunc, GrlexDescending> table_;
};

/// A formal composition word: the sum over terms of
/// coefficient * (d_1 o d_2 o ... o d_m). An empty word is the identity.
struct WordTerm {
  RatFunc coefficient;
  std::vector<Derivation> word;
};

struct OpWord {
  std::size_t nvars = 0;
  std::vector<WordTerm> terms;

  static OpWord single(const RatFunc& coefficient, std::vector<Derivation> word);
  std::string to_string() const;
};

/// Rewrites the word into canonical form by expanding each derivation as
/// sum_i g_i d_i and commuting partials past coefficients with
/// d_i o (c .) = (d_i c) . + c . d_i. Throws DimensionError on mixed arity.
DiffOp normalize(const OpWord& w);

/// Applies the word directly, right-most derivation first.
RatFunc apply_word(const OpWord& w, const RatFunc& f);

/// Reinterprets a canonical operator as a word: c_alpha times the partials
/// of alpha, as coordinate derivations.
OpWord as_word(const DiffOp& e);

}  // namespace derivcalc
