#include "derivcalc/sampling.hpp"

namespace derivcalc {

int Sampler::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

MultiPoly Sampler::polynomial(std::size_t k, unsigned max_degree, int bound) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& m : indices_up_to(k, max_degree)) {
    const int c = integer(-bound, bound);
    if (c != 0) terms.emplace_back(m, BigRational(c));
  }
  return MultiPoly::from_terms(k, std::move(terms));
}

MultiPoly Sampler::nonzero_polynomial(std::size_t k, unsigned max_degree, int bound) {
  for (;;) {
    MultiPoly p = polynomial(k, max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

MultiPoly Sampler::non_monomial(std::size_t k, unsigned max_degree, int bound) {
  for (;;) {
    MultiPoly p = polynomial(k, max_degree, bound);
    if (p.term_count() >= 2) return p;
  }
}

RatFunc Sampler::rational_function(std::size_t k, unsigned num_degree, unsigned den_degree, int bound) {
  for (;;) {
    const MultiPoly num = nonzero_polynomial(k, num_degree, bound);
    const MultiPoly den = nonzero_polynomial(k, den_degree, bound);
    RatFunc f = ratfunc_normalize(num, den);
    if (f.num().term_count() + f.den().term_count() > 2) return f;
  }
}

}  // namespace derivcalc
