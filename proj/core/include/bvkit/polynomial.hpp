#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvkit/rational.hpp"

namespace bvkit {

// Exponent vector over a fixed number of ring variables.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; caller guarantees b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  // Storage order only (lexicographic on exponents); not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

// Term order used by Groebner bases and canonical printing.
struct MonomialOrder {
  enum class Kind { degrevlex, deglex, lex };

  Kind kind = Kind::degrevlex;
  // precedence[0] is the most significant variable; empty means natural order.
  std::vector<std::size_t> precedence;

  static MonomialOrder degrevlex() { return {Kind::degrevlex, {}}; }
  static MonomialOrder deglex() { return {Kind::deglex, {}}; }
  static MonomialOrder lex() { return {Kind::lex, {}}; }

  // Negative, zero or positive as a is smaller, equal or larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

  Monomial leading_monomial(const MonomialOrder& order) const;
  Rational leading_coefficient(const MonomialOrder& order) const;
  // Terms in decreasing order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

  // Drops every term of total degree above max_degree.
  Polynomial truncated(int max_degree) const;
  Polynomial homogeneous_part(int degree) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

// d/dx_i with 0-based i; throws InputError when i >= nvars.
Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// q with p = q * d when d divides p exactly.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// Canonical text: terms in decreasing order, explicit '*' and '^'.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names,
                      const MonomialOrder& order = MonomialOrder::degrevlex());
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// All monomials in n variables of total degree <= d, grouped by increasing degree.
std::vector<Monomial> monomials_up_to(std::size_t n, int d);

}  // namespace bvkit
