#include "bvkit/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "bvkit/error.hpp"

namespace bvkit {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power) {
  Monomial m(nvars);
  m.exps_[i] = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  auto var = [&](std::size_t k) { return precedence.empty() ? k : precedence[k]; };
  if (kind != Kind::lex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind == Kind::degrevlex) {
    // Ties broken at the least significant variable: smaller exponent wins.
    for (std::size_t k = n; k-- > 0;) {
      std::size_t v = var(k);
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t v = var(k);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, i), Rational(1));
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (bvkit::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (bvkit::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (bvkit::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (bvkit::is_zero(c)) return r;
  // Lexicographic storage order is translation invariant, so hints stay valid.
  for (const auto& [mt, ct] : terms_) r.terms_.emplace_hint(r.terms_.end(), mt * m, ct * c);
  return r;
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw InputError("leading monomial of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return best->first;
}

Rational Polynomial::leading_coefficient(const MonomialOrder& order) const {
  return coefficient(leading_monomial(order));
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.nvars())
    throw InputError("variable index " + std::to_string(i) + " out of range for " +
                     std::to_string(p.nvars()) + " variables");
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    Monomial q = m;
    q[i] -= 1;
    r.add_term(q, c * m[i]);
  }
  return r;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  const auto order = MonomialOrder::degrevlex();
  const Monomial lm = d.leading_monomial(order);
  const Rational lc = d.coefficient(lm);
  Polynomial rem = p;
  Polynomial quot(std::max(p.nvars(), d.nvars()));
  // A single divisor is its own Groebner basis, so a nonzero leading term that
  // cannot be cancelled proves non-divisibility.
  while (!rem.is_zero()) {
    Monomial m = rem.leading_monomial(order);
    if (!lm.divides(m)) return std::nullopt;
    Rational c = rem.coefficient(m) / lc;
    Monomial q = m / lm;
    quot.add_term(q, c);
    rem -= d.mul_monomial(q, c);
  }
  return quot;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names,
                      const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(order)) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono = to_string(m, names);
    if (mono.empty())
      out += to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += to_string(mag) + "*" + mono;
  }
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(d) + 1);
  by_degree[0].push_back(Monomial(n));
  for (int k = 1; k <= d; ++k)
    for (const auto& m : by_degree[static_cast<std::size_t>(k - 1)])
      for (std::size_t v = 0; v < n; ++v) {
        // Extend only at or after the last nonzero variable, so each monomial appears once.
        bool ok = true;
        for (std::size_t w = v + 1; w < n; ++w) ok = ok && m[w] == 0;
        if (!ok) continue;
        Monomial next = m;
        ++next[v];
        by_degree[static_cast<std::size_t>(k)].push_back(next);
      }
  for (auto& level : by_degree)
    for (auto& m : level) out.push_back(std::move(m));
  return out;
}

}  // namespace bvkit
