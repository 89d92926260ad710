#include "bvkit/dgla.hpp"

#include <algorithm>
#include <set>

namespace bvkit {

namespace {

void add_scaled(DenseVector& acc, const DenseVector& v, const Rational& c) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * v[i];
}

bool all_zero(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational evaluate(const Polynomial& p, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (int e = 0; e < m[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(const std::map<int, std::vector<std::string>>& degrees) {
  std::set<std::string> seen;
  for (const auto& [deg, names] : degrees)
    for (const auto& name : names) {
      if (!seen.insert(name).second) throw InputError("duplicate basis label '" + name + "'");
      labels_.push_back(name);
      degrees_.push_back(deg);
    }
}

std::size_t GradedLieAlgebra::dimension(int degree) const {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), degree));
}

std::size_t GradedLieAlgebra::index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::size_t> GradedLieAlgebra::indices_in_degree(int degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == degree) out.push_back(i);
  return out;
}

std::size_t GradedLieAlgebra::local_index(std::size_t i) const {
  std::size_t k = 0;
  for (std::size_t j = 0; j < i; ++j)
    if (degrees_[j] == degrees_.at(i)) ++k;
  return k;
}

std::vector<int> GradedLieAlgebra::occupied_degrees() const {
  std::vector<int> out(degrees_.begin(), degrees_.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void GradedLieAlgebra::set_differential(std::size_t from, const DenseVector& image) {
  if (from >= dimension() || image.size() != dimension()) throw InputError("differential entry out of range");
  diff_[from] = image;
}

void GradedLieAlgebra::set_bracket(std::size_t a, std::size_t b, const DenseVector& out) {
  if (a >= dimension() || b >= dimension() || out.size() != dimension())
    throw InputError("bracket entry out of range");
  brackets_[{a, b}] = out;
}

DenseVector GradedLieAlgebra::basis_vector(std::size_t i) const {
  DenseVector v = zero();
  v.at(i) = 1;
  return v;
}

DenseVector GradedLieAlgebra::d(std::size_t i) const {
  auto it = diff_.find(i);
  return it == diff_.end() ? zero() : it->second;
}

DenseVector GradedLieAlgebra::d(const DenseVector& v) const {
  DenseVector out = zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) add_scaled(out, d(i), v[i]);
  return out;
}

DenseVector GradedLieAlgebra::bracket(std::size_t a, std::size_t b) const {
  if (auto it = brackets_.find({a, b}); it != brackets_.end()) return it->second;
  if (auto it = brackets_.find({b, a}); it != brackets_.end()) {
    DenseVector out = zero();
    add_scaled(out, it->second, Rational(-sign_pow(static_cast<long>(degree(a)) * degree(b))));
    return out;
  }
  return zero();
}

DenseVector GradedLieAlgebra::bracket(const DenseVector& u, const DenseVector& v) const {
  DenseVector out = zero();
  for (std::size_t a = 0; a < u.size(); ++a) {
    if (sgn(u[a]) == 0) continue;
    for (std::size_t b = 0; b < v.size(); ++b)
      if (sgn(v[b]) != 0) add_scaled(out, bracket(a, b), u[a] * v[b]);
  }
  return out;
}

DglaCheck check_dgla(const GradedLieAlgebra& g) {
  DglaCheck r;
  std::size_t n = g.dimension();
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && r.detail.empty()) r.detail = what;
    flag = false;
  };
  auto lies_in = [&](const DenseVector& v, int degree) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0 && g.degree(i) != degree) return false;
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!lies_in(g.d(i), g.degree(i) + 1)) fail(r.degrees_respected, "d(" + g.label(i) + ") has the wrong degree");
    if (!all_zero(g.d(g.d(i)))) fail(r.d_squared, "d(d(" + g.label(i) + ")) != 0");
  }
  for (const auto& [ab, out] : g.given_brackets()) {
    auto [a, b] = ab;
    std::string name = "[" + g.label(a) + ", " + g.label(b) + "]";
    if (!lies_in(out, g.degree(a) + g.degree(b))) fail(r.degrees_respected, name + " has the wrong degree");
    int s = -sign_pow(static_cast<long>(g.degree(a)) * g.degree(b));
    if (a == b) {
      if (s == -1 && !all_zero(out)) fail(r.antisymmetric, name + " must vanish");
    } else if (auto it = g.given_brackets().find({b, a}); it != g.given_brackets().end()) {
      DenseVector expect = g.zero();
      add_scaled(expect, out, Rational(s));
      if (expect != it->second) fail(r.antisymmetric, name + " and its transpose disagree");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      DenseVector ab = g.bracket(a, b);
      // d[a,b] = [da,b] + (-1)^{|a|}[a,db]
      DenseVector lhs = g.d(ab);
      DenseVector rhs = g.bracket(g.d(a), g.basis_vector(b));
      add_scaled(rhs, g.bracket(g.basis_vector(a), g.d(b)), Rational(sign_pow(g.degree(a))));
      if (lhs != rhs) fail(r.derivation, "d is not a derivation on (" + g.label(a) + ", " + g.label(b) + ")");
      for (std::size_t c = 0; c < n; ++c) {
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]
        DenseVector ea = g.basis_vector(a), eb = g.basis_vector(b), ec = g.basis_vector(c);
        DenseVector left = g.bracket(ea, g.bracket(eb, ec));
        DenseVector right = g.bracket(ab, ec);
        add_scaled(right, g.bracket(eb, g.bracket(ea, ec)),
                   Rational(sign_pow(static_cast<long>(g.degree(a)) * g.degree(b))));
        if (left != right)
          fail(r.jacobi, "Jacobi fails on (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")");
      }
    }
  return r;
}

std::vector<Polynomial> MCScheme::equations() const {
  std::vector<Polynomial> out;
  for (const auto& f : components)
    if (!f.is_zero()) out.push_back(f);
  return out;
}

MCScheme mc_equations(const GradedLieAlgebra& g) {
  auto one = g.indices_in_degree(1), two = g.indices_in_degree(2);
  std::size_t m = one.size();
  MCScheme s;
  for (std::size_t a = 0; a < m; ++a) s.coordinates.push_back("t" + std::to_string(a + 1));
  for (std::size_t i : two) {
    Polynomial f(m);
    for (std::size_t a = 0; a < m; ++a) {
      f.add_term(Monomial::variable(m, a), g.d(one[a])[i]);
      for (std::size_t b = 0; b < m; ++b)
        f.add_term(Monomial::variable(m, a) * Monomial::variable(m, b),
                   g.bracket(one[a], one[b])[i] * make_rational(1, 2));
    }
    s.components.push_back(std::move(f));
  }
  return s;
}

std::vector<Artinian> mc_residual(const GradedLieAlgebra& g, const std::vector<Artinian>& a) {
  auto one = g.indices_in_degree(1), two = g.indices_in_degree(2);
  if (a.size() != one.size()) throw InputError("MC element has the wrong number of coordinates");
  std::vector<Artinian> out;
  for (std::size_t i : two) {
    Artinian r;
    for (std::size_t x = 0; x < one.size(); ++x) {
      r += a[x] * Artinian(g.d(one[x])[i]);
      for (std::size_t y = 0; y < one.size(); ++y)
        r += a[x] * a[y] * Artinian(g.bracket(one[x], one[y])[i] * make_rational(1, 2));
    }
    out.push_back(r);
  }
  return out;
}

std::size_t MCSolutionFamily::unknown_index(std::size_t alpha, int k) const {
  return alpha * static_cast<std::size_t>(order - 1) + static_cast<std::size_t>(k - 1);
}

bool MCSolutionFamily::only_zero() const {
  std::vector<bool> pinned(unknowns.size(), false);
  for (const auto& p : groebner.polynomials()) {
    if (p.total_degree() != 1 || p.terms().size() != 1) return false;
    for (std::size_t i = 0; i < unknowns.size(); ++i)
      if (p.terms().begin()->first[i] == 1) pinned[i] = true;
  }
  return std::all_of(pinned.begin(), pinned.end(), [](bool b) { return b; });
}

bool MCSolutionFamily::unconstrained() const { return groebner.size() == 0; }

std::vector<std::string> MCSolutionFamily::independent_unknowns() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    bool used = std::any_of(groebner.leading_monomials().begin(), groebner.leading_monomials().end(),
                            [&](const Monomial& m) { return m[i] > 0; });
    if (!used) out.push_back(unknowns[i]);
  }
  return out;
}

bool MCSolutionFamily::contains(const std::vector<Artinian>& a) const {
  if (a.size() != coordinates) return false;
  std::vector<Rational> point(unknowns.size());
  for (std::size_t x = 0; x < coordinates; ++x) {
    if (a[x].order() != 0 && a[x].order() != order) return false;
    if (!a[x].is_nilpotent()) return false;
    for (int k = 1; k < order; ++k) point[unknown_index(x, k)] = a[x].coefficient(k);
  }
  return std::all_of(groebner.polynomials().begin(), groebner.polynomials().end(),
                     [&](const Polynomial& p) { return sgn(evaluate(p, point)) == 0; });
}

MCSolutionFamily mc_solutions_over(const GradedLieAlgebra& g, int order) {
  if (order < 1) throw InputError("Artinian order must be at least 1");
  auto one = g.indices_in_degree(1), two = g.indices_in_degree(2);
  MCSolutionFamily fam;
  fam.order = order;
  fam.coordinates = one.size();
  for (std::size_t x = 0; x < one.size(); ++x)
    for (int k = 1; k < order; ++k) fam.unknowns.push_back("a" + std::to_string(x + 1) + "_" + std::to_string(k));
  std::size_t u = fam.unknowns.size(), nv = u + 1;  // last variable is e
  std::vector<Polynomial> coord;
  for (std::size_t x = 0; x < one.size(); ++x) {
    Polynomial p(nv);
    for (int k = 1; k < order; ++k)
      p.add_term(Monomial::variable(nv, fam.unknown_index(x, k)) * Monomial::variable(nv, u, k), 1);
    coord.push_back(std::move(p));
  }
  fam.equations_by_order.assign(static_cast<std::size_t>(std::max(order - 1, 0)), {});
  std::vector<Polynomial> all;
  for (std::size_t i : two) {
    Polynomial r(nv);
    for (std::size_t x = 0; x < one.size(); ++x) {
      r += coord[x] * g.d(one[x])[i];
      for (std::size_t y = 0; y < one.size(); ++y)
        r += coord[x] * coord[y] * (g.bracket(one[x], one[y])[i] * make_rational(1, 2));
    }
    for (int j = 1; j < order; ++j) {
      Polynomial cj(u);
      for (const auto& [m, c] : r.terms())
        if (m[u] == j) {
          std::vector<int> e(m.exponents().begin(), m.exponents().end() - 1);
          cj.add_term(Monomial(std::move(e)), c);
        }
      if (!cj.is_zero()) {
        all.push_back(cj);
        fam.equations_by_order[static_cast<std::size_t>(j - 1)].push_back(std::move(cj));
      }
    }
  }
  fam.groebner = all.empty() ? GroebnerBasis(u, MonomialOrder::degrevlex())
                             : groebner_basis(all, MonomialOrder::degrevlex());
  return fam;
}

SymSeriesW coalgebra_differential_s1(const GradedLieAlgebra& g, const SymSeries& x) {
  auto one = g.indices_in_degree(1), two = g.indices_in_degree(2);
  std::size_t m = one.size();
  SymSeriesW out;
  auto add = [&](const Monomial& mono, std::size_t w, const Artinian& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace({mono, w}, Artinian());
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  for (const auto& [gamma, c] : x) {
    for (std::size_t a = 0; a < m; ++a) {
      if (gamma[a] == 0) continue;
      Monomial lower = gamma;
      --lower[a];
      DenseVector da = g.d(one[a]);
      for (std::size_t w = 0; w < two.size(); ++w) add(lower, w, c * Artinian(da[two[w]] * gamma[a]));
      for (std::size_t b = a; b < m; ++b) {
        Rational mult;
        Monomial lower2 = lower;
        if (b == a) {
          if (gamma[a] < 2) continue;
          mult = make_rational(static_cast<long>(gamma[a]) * (gamma[a] - 1), 2);
        } else {
          if (gamma[b] == 0) continue;
          mult = static_cast<long>(gamma[a]) * gamma[b];
        }
        --lower2[b];
        DenseVector br = g.bracket(one[a], one[b]);
        for (std::size_t w = 0; w < two.size(); ++w) add(lower2, w, c * Artinian(br[two[w]] * mult));
      }
    }
  }
  return out;
}

MCCocycleReport mc_cocycle(const GradedLieAlgebra& g, const std::vector<Artinian>& a, int N) {
  if (N < 1) throw InputError("cocycle cutoff must be at least 1");
  MCCocycleReport rep;
  rep.safe_degree = N - 2;
  rep.residual = mc_residual(g, a);
  rep.accepted = std::all_of(rep.residual.begin(), rep.residual.end(), [](const Artinian& r) { return r.is_zero(); });
  if (!rep.accepted) return rep;
  std::size_t m = a.size();
  SymSeries linear;
  for (std::size_t x = 0; x < m; ++x)
    if (!a[x].is_zero()) linear[Monomial::variable(m, x)] = a[x];
  SymSeries power = linear;
  for (int n = 1; n <= N && !power.empty(); ++n) {
    Artinian inv(1 / factorial(n));
    for (const auto& [mono, c] : power) {
      auto [it, fresh] = rep.element.try_emplace(mono, Artinian());
      it->second += c * inv;
      if (it->second.is_zero()) rep.element.erase(it);
    }
    SymSeries next;
    for (const auto& [m1, c1] : power)
      for (const auto& [m2, c2] : linear) {
        auto [it, fresh] = next.try_emplace(m1 * m2, Artinian());
        it->second += c1 * c2;
        if (it->second.is_zero()) next.erase(it);
      }
    power = std::move(next);
  }
  rep.image = coalgebra_differential_s1(g, rep.element);
  rep.cocycle = std::none_of(rep.image.begin(), rep.image.end(),
                             [&](const auto& kv) { return kv.first.first.degree() <= rep.safe_degree; });
  return rep;
}

}  // namespace bvkit
