#include "bvkit/groebner.hpp"

#include <algorithm>

#include "bvkit/error.hpp"

namespace bvkit {

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  return p * (Rational(1) / p.leading_coefficient(order));
}

Polynomial reduce_impl(Polynomial p, const std::vector<Polynomial>& divisors, const std::vector<Monomial>& leads,
                       const MonomialOrder& order) {
  Polynomial rem(p.nvars());
  while (!p.is_zero()) {
    Monomial m = p.leading_monomial(order);
    Rational c = p.coefficient(m);
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (!leads[k].divides(m)) continue;
      p -= divisors[k].mul_monomial(m / leads[k], c / divisors[k].coefficient(leads[k]));
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

std::vector<Monomial> leads_of(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
  std::vector<Monomial> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.leading_monomial(order));
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, MonomialOrder order, std::vector<Polynomial> reduced)
    : nvars_(nvars), order_(std::move(order)), polys_(std::move(reduced)) {
  leads_ = leads_of(polys_, order_);
}

bool GroebnerBasis::is_unit_ideal() const { return polys_.size() == 1 && polys_.front().is_constant(); }

bool GroebnerBasis::contains(const Polynomial& p) const { return normal_form(p, *this).is_zero(); }

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors, const MonomialOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& d : divisors)
    if (!d.is_zero()) nonzero.push_back(d);
  return reduce_impl(p, nonzero, leads_of(nonzero, order), order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce_impl(p, gb.polynomials(), gb.leading_monomials(), gb.order());
}

GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::size_t nvars = 0;
  for (const auto& g : gens) nvars = std::max(nvars, g.nvars());

  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = reduce_impl(g, basis, leads, order);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, order));
    leads.push_back(basis.back().leading_monomial(order));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(leads[i], leads[j])});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // Normal selection strategy: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const Pair& a, const Pair& b) { return order.less(a.lcm, b.lcm); });
    Pair pr = *it;
    pairs.erase(it);
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (pr.lcm == leads[pr.i] * leads[pr.j]) continue;
    // Chain criterion: some other leading monomial divides the lcm and both
    // companion pairs are already gone.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j || !leads[k].divides(pr.lcm)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) { return p.i == a && p.j == b; });
      };
      if (!pending(pr.i, k) && !pending(pr.j, k)) skip = true;
    }
    if (skip) continue;
    Polynomial s = basis[pr.i].mul_monomial(pr.lcm / leads[pr.i], Rational(1)) -
                   basis[pr.j].mul_monomial(pr.lcm / leads[pr.j], Rational(1));
    Polynomial r = reduce_impl(std::move(s), basis, leads, order);
    if (r.is_zero()) continue;
    basis.push_back(monic(r, order));
    leads.push_back(basis.back().leading_monomial(order));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      // Equal leading monomials: keep the earliest one.
      redundant = leads[j] != leads[i] || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(monic(reduce(minimal[i], others, order), order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });
  return GroebnerBasis(nvars, order, std::move(reduced));
}

namespace {

// All monomials of total degree <= cap in nvars variables, not divisible by any lead.
void enumerate_standard(std::size_t nvars, int cap, const std::vector<Monomial>& leads,
                        std::vector<Monomial>& out) {
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t var, int budget) -> void {
    if (var == nvars) {
      for (const auto& l : leads)
        if (l.divides(m)) return;
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      m[var] = e;
      self(self, var + 1, budget - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, cap);
}

}  // namespace

QuotientBasis quotient_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order, int degree_cap,
                             std::size_t nvars) {
  if (degree_cap < 0) throw InputError("degree cap must be non-negative");
  QuotientBasis qb{gens, groebner_basis(gens, order), {}, true, 0, degree_cap, std::nullopt};
  const auto& leads = qb.groebner.leading_monomials();
  // Finite iff every variable has a pure power among the leading monomials.
  int box = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    int best = -1;
    for (const auto& l : leads) {
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != v && l[w] != 0) pure = false;
      if (pure && (best < 0 || l[v] < best)) best = l[v];
    }
    if (best < 0) {
      qb.finite = false;
      if (!qb.open_variable) qb.open_variable = v;
    } else {
      box += best;
    }
  }
  int cap = qb.finite ? box : degree_cap;
  enumerate_standard(nvars, cap, leads, qb.standard_monomials);
  std::sort(qb.standard_monomials.begin(), qb.standard_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  if (qb.finite) qb.dimension = qb.standard_monomials.size();
  return qb;
}

}  // namespace bvkit
