#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bvkit {

// Exact rationals. mpq_class keeps numerator/denominator coprime with a
// positive denominator after every arithmetic operation; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "3", "-3", "3/2", "-6/4" (canonicalized). Throws InputError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(num, den) does not canonicalize by itself.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace bvkit
