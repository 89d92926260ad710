#pragma once

#include <cstdint>
#include <random>

#include "bvkit/polynomial.hpp"

namespace bvkit {

// Sampling contract: std::mt19937_64 seeded with the user seed; every draw
// is below(n) = next() % n. Sample sequences are a pure function of the seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
  // Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 gen_;
};

// Up to max_terms terms of total degree <= max_degree, coefficients
// c/d with |c| <= coeff_bound and d in {1, 2}.
Polynomial random_polynomial(Rng& rng, std::size_t nvars, int max_degree, int max_terms = 4, int coeff_bound = 3);

}  // namespace bvkit
