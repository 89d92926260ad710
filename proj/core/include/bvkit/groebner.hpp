#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bvkit/polynomial.hpp"

namespace bvkit {

// Reduced Groebner basis: monic, inter-reduced, sorted by increasing leading
// monomial. Empty for the zero ideal.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(std::move(order)) {}
  GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced);

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return polys_.size(); }
  bool is_unit_ideal() const;
  bool contains(const Polynomial& p) const;

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leads_;
};

// Buchberger's algorithm with the coprime-leading-monomial and chain criteria.
GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);

// Fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Remainder of multivariate division by an arbitrary list (not necessarily a basis).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, const MonomialOrder& order);

struct QuotientBasis {
  std::vector<Polynomial> generators;
  GroebnerBasis groebner;
  // Increasing in the basis order. When infinite, only those of degree <= degree_cap.
  std::vector<Monomial> standard_monomials;
  bool finite = true;
  std::size_t dimension = 0;  // meaningful only when finite
  int degree_cap = 0;
  // When infinite: a variable with no pure power among the leading monomials.
  std::optional<std::size_t> open_variable;
};

QuotientBasis quotient_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order, int degree_cap,
                             std::size_t nvars);

}  // namespace bvkit
