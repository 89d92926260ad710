#include "bvkit/random.hpp"

namespace bvkit {

Polynomial random_polynomial(Rng& rng, std::size_t nvars, int max_degree, int max_terms, int coeff_bound) {
  Polynomial p(nvars);
  int terms = rng.range(0, max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    int budget = rng.range(0, max_degree);
    for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
      int e = rng.range(0, budget);
      m[v] = e;
      budget -= e;
    }
    int c = rng.range(-coeff_bound, coeff_bound);
    p.add_term(m, make_rational(c, rng.range(1, 2)));
  }
  return p;
}

}  // namespace bvkit
