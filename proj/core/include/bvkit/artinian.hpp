#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bvkit/error.hpp"
#include "bvkit/rational.hpp"

namespace bvkit {

// Element of Q[e]/(e^s). A value built from a plain rational has no order yet
// and adopts the order of whatever it is combined with; mixing two different
// orders throws InputError.
class Artinian {
 public:
  Artinian() = default;
  Artinian(int c) : Artinian(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Artinian(const Rational& c);                // NOLINT(google-explicit-constructor)
  // Coefficients of 1, e, e^2, ...; terms of degree >= order are dropped.
  Artinian(int order, std::vector<Rational> coeffs);

  static Artinian epsilon(int order, int power = 1);

  // 0 when the order is still unset.
  int order() const { return order_; }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  // Lies in the maximal ideal (e).
  bool is_nilpotent() const { return sgn(coefficient(0)) == 0; }
  // Smallest k with a nonzero coefficient; -1 for zero.
  int valuation() const;
  // Image under Q[e]/(e^s) -> Q[e]/(e^order); throws InputError when order > s.
  Artinian with_order(int order) const;

  Artinian& operator+=(const Artinian& o);
  Artinian& operator-=(const Artinian& o);
  Artinian& operator*=(const Artinian& o);
  friend Artinian operator+(Artinian a, const Artinian& b) { return a += b; }
  friend Artinian operator-(Artinian a, const Artinian& b) { return a -= b; }
  friend Artinian operator*(Artinian a, const Artinian& b) { return a *= b; }
  Artinian operator-() const;
  friend bool operator==(const Artinian& a, const Artinian& b);

 private:
  void trim();
  static int common_order(const Artinian& a, const Artinian& b);

  int order_ = 0;
  std::vector<Rational> c_;  // no trailing zeros
};

inline bool is_zero(const Artinian& a) { return a.is_zero(); }

// "a + b*e + c*e^2" with rational a, b, c. Throws ParseError on malformed text
// and InputError when order < 1.
Artinian parse_artinian(std::string_view text, int order);
std::string to_string(const Artinian& a);

}  // namespace bvkit
