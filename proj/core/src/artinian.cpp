#include "bvkit/artinian.hpp"

#include "bvkit/polynomial.hpp"

namespace bvkit {

Artinian::Artinian(const Rational& c) {
  c_.push_back(c);
  trim();
}

Artinian::Artinian(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 1) throw InputError("Artinian order must be at least 1");
  if (c_.size() > static_cast<std::size_t>(order)) c_.resize(static_cast<std::size_t>(order));
  trim();
}

Artinian Artinian::epsilon(int order, int power) {
  if (power < 0) throw InputError("negative power of epsilon");
  std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
  c.back() = 1;
  return Artinian(order, std::move(c));
}

void Artinian::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Artinian::coefficient(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

bool Artinian::is_zero() const { return c_.empty(); }

int Artinian::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (sgn(c_[k]) != 0) return static_cast<int>(k);
  return -1;
}

Artinian Artinian::with_order(int order) const {
  if (order_ != 0 && order > order_) throw InputError("cannot lift an Artinian value to a higher order");
  return Artinian(order, c_);
}

int Artinian::common_order(const Artinian& a, const Artinian& b) {
  if (a.order_ == 0) return b.order_;
  if (b.order_ == 0 || a.order_ == b.order_) return a.order_;
  throw InputError("Artinian values of different orders");
}

Artinian& Artinian::operator+=(const Artinian& o) {
  order_ = common_order(*this, o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  if (order_ != 0 && c_.size() > static_cast<std::size_t>(order_)) c_.resize(static_cast<std::size_t>(order_));
  trim();
  return *this;
}

Artinian& Artinian::operator-=(const Artinian& o) { return *this += -o; }

Artinian& Artinian::operator*=(const Artinian& o) {
  order_ = common_order(*this, o);
  std::vector<Rational> out;
  if (!c_.empty() && !o.c_.empty()) {
    std::size_t n = c_.size() + o.c_.size() - 1;
    if (order_ != 0) n = std::min(n, static_cast<std::size_t>(order_));
    out.assign(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size() && i + j < n; ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Artinian Artinian::operator-() const {
  Artinian r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const Artinian& a, const Artinian& b) {
  if (a.order_ != 0 && b.order_ != 0 && a.order_ != b.order_) return false;
  return a.c_ == b.c_;
}

Artinian parse_artinian(std::string_view text, int order) {
  if (order < 1) throw InputError("Artinian order must be at least 1");
  Polynomial p = parse_polynomial(text, {"e"});
  std::vector<Rational> c;
  for (const auto& [m, coeff] : p.terms()) {
    auto k = static_cast<std::size_t>(m[0]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coeff;
  }
  return Artinian(order, std::move(c));
}

std::string to_string(const Artinian& a) {
  std::vector<Rational> c = a.coefficients();
  Polynomial p(1);
  for (std::size_t k = 0; k < c.size(); ++k) p.add_term(Monomial::variable(1, 0, static_cast<int>(k)), c[k]);
  return to_string(p, {"e"});
}

}  // namespace bvkit
