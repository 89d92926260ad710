#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bvkit/polynomial.hpp"

namespace bvkit {

// The fixed denominator c of a localized ring A[1/c]. Shared by every element
// of that ring; c = 1 gives the polynomial ring itself.
class Localization {
 public:
  explicit Localization(Polynomial c);
  static std::shared_ptr<const Localization> trivial(std::size_t nvars);

  const Polynomial& denominator() const { return c_; }
  // d c / d x_i
  const Polynomial& denominator_derivative(std::size_t i) const { return dc_.at(i); }
  std::size_t nvars() const { return c_.nvars(); }
  // c is a nonzero constant, so no element ever carries a denominator power.
  bool is_trivial() const { return trivial_; }

 private:
  Polynomial c_;
  std::vector<Polynomial> dc_;
  bool trivial_;
};

using LocalizationPtr = std::shared_ptr<const Localization>;

// numerator / c^power, normalized so that c does not divide the numerator
// whenever power > 0. With this normal form equality is structural.
class LocalizedElement {
 public:
  explicit LocalizedElement(LocalizationPtr loc);
  LocalizedElement(LocalizationPtr loc, Polynomial numerator, unsigned power = 0);

  const LocalizationPtr& localization() const { return loc_; }
  const Polynomial& numerator() const { return num_; }
  unsigned power() const { return power_; }
  std::size_t nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return power_ == 0; }

  LocalizedElement& operator+=(const LocalizedElement& o);
  LocalizedElement& operator-=(const LocalizedElement& o);
  LocalizedElement& operator*=(const LocalizedElement& o);
  LocalizedElement& operator*=(const Rational& q);
  friend LocalizedElement operator+(LocalizedElement a, const LocalizedElement& b) { return a += b; }
  friend LocalizedElement operator-(LocalizedElement a, const LocalizedElement& b) { return a -= b; }
  friend LocalizedElement operator*(LocalizedElement a, const LocalizedElement& b) { return a *= b; }
  friend LocalizedElement operator*(LocalizedElement a, const Rational& q) { return a *= q; }
  friend LocalizedElement operator*(const Rational& q, LocalizedElement a) { return a *= q; }
  LocalizedElement operator-() const;
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
    return a.power_ == b.power_ && a.num_ == b.num_;
  }

  // Multiplies by c^-k.
  LocalizedElement divided_by_denominator(unsigned k = 1) const;

 private:
  void normalize();

  LocalizationPtr loc_;
  Polynomial num_;
  unsigned power_ = 0;
};

// Quotient rule: d(p / c^k) = (c dp - k p dc) / c^(k+1).
LocalizedElement partial_derivative(const LocalizedElement& a, std::size_t i);

// "p" or "(p)/(c)^k".
std::string to_string(const LocalizedElement& a, const std::vector<std::string>& names);

}  // namespace bvkit
