#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bvkit/cocom.hpp"
#include "bvkit/dgla.hpp"
#include "bvkit/hochschild.hpp"

namespace bvkit {

bool check_coassociativity(std::size_t dim, std::size_t N) {
  using Triple = std::map<std::vector<TensorWord>, int>;
  for (std::size_t n = 1; n <= N; ++n)
    for (std::size_t i = 0; i < word_count(n, dim); ++i) {
      TensorWord w = word_at(i, n, dim);
      Triple left, right;
      for (const auto& [a, b] : deconcatenate(w)) {
        for (const auto& [a1, a2] : deconcatenate(a)) ++left[{a1, a2, b}];
        for (const auto& [b1, b2] : deconcatenate(b)) ++right[{a, b1, b2}];
      }
      if (left != right) return false;
    }
  return true;
}

namespace {

MultilinearMap<Artinian> lift(const FiniteAlgebra& f) {
  MultilinearMap<Artinian> out(f.dim);
  for (std::size_t a = 0; a < f.dim; ++a)
    for (std::size_t b = 0; b < f.dim; ++b)
      for (std::size_t c = 0; c < f.dim; ++c) out.set({a, b}, c, Artinian(f.at(a, b, c)));
  return out;
}

void require_associative(const FiniteAlgebra& f) {
  if (associativity_failure(f)) throw InputError("base multiplication is not associative");
}

}  // namespace

DeformationVerdict check_deformation(const FiniteAlgebra& f, const StructureTensor<Artinian>& h) {
  if (h.dim != f.dim) throw InputError("perturbation and algebra have different dimensions");
  require_associative(f);
  StructureTensor<Artinian> sum(f.dim, f.basis);
  for (std::size_t i = 0; i < sum.mu.size(); ++i) sum.mu[i] = Artinian(f.mu[i]) + h.mu[i];

  DeformationVerdict v;
  v.associative = !associativity_failure(sum).has_value();
  auto fm = lift(f);
  auto hm = h.as_map();
  auto mc = gerstenhaber_bracket(fm, hm) + gerstenhaber_bracket(hm, hm) * Artinian(make_rational(1, 2));
  v.maurer_cartan = mc.is_zero_map();
  return v;
}

namespace {

std::string cochain_label(char head, const TensorWord& inputs, std::size_t out) {
  std::string s(1, head);
  for (std::size_t x : inputs) s += std::to_string(x + 1);
  s += "_" + std::to_string(out + 1);
  return s;
}

// Hom(V (x) V, V) in degree 1 and Hom(V^{(x)3}, V) in degree 2, with d = [f, -]
// and the Gerstenhaber bracket. Only this part of g_f reaches H^0.
GradedLieAlgebra deformation_dgla(const FiniteAlgebra& f) {
  std::size_t n = f.dim;
  std::vector<std::string> g1, g2;
  for (std::size_t i = 0; i < word_count(2, n); ++i)
    for (std::size_t o = 0; o < n; ++o) g1.push_back(cochain_label('h', word_at(i, 2, n), o));
  for (std::size_t i = 0; i < word_count(3, n); ++i)
    for (std::size_t o = 0; o < n; ++o) g2.push_back(cochain_label('k', word_at(i, 3, n), o));
  GradedLieAlgebra g({{1, g1}, {2, g2}});

  auto basis_map = [&](std::size_t local) {
    MultilinearMap<Rational> m(n);
    m.set(word_at(local / n, 2, n), local % n, Rational(1));
    return m;
  };
  auto to_vector = [&](const MultilinearMap<Rational>& m) {
    DenseVector v = g.zero();
    for (std::size_t i = 0; i < word_count(3, n); ++i)
      for (std::size_t o = 0; o < n; ++o) v[g1.size() + i * n + o] = m.get(word_at(i, 3, n), o);
    return v;
  };

  auto fm = f.as_map();
  for (std::size_t a = 0; a < g1.size(); ++a) g.set_differential(a, to_vector(gerstenhaber_bracket(fm, basis_map(a))));
  for (std::size_t a = 0; a < g1.size(); ++a)
    for (std::size_t b = a; b < g1.size(); ++b) {
      auto br = gerstenhaber_bracket(basis_map(a), basis_map(b));
      if (!br.is_zero_map()) g.set_bracket(a, b, to_vector(br));
    }
  return g;
}

// Associativity of mu + t in the coordinates t of Hom(V (x) V, V).
std::vector<Polynomial> associativity_equations(const FiniteAlgebra& f) {
  std::size_t n = f.dim, m = n * n * n;
  auto entry = [&](std::size_t a, std::size_t b, std::size_t c) {
    Polynomial p = Polynomial::constant(m, f.at(a, b, c));
    p.add_term(Monomial::variable(m, (a * n + b) * n + c, 1), Rational(1));
    return p;
  };
  std::vector<Polynomial> eqs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t o = 0; o < n; ++o) {
          Polynomial p(m);
          for (std::size_t e = 0; e < n; ++e) {
            p += entry(a, b, e) * entry(e, c, o);
            p -= entry(b, c, e) * entry(a, e, o);
          }
          if (!p.is_zero()) eqs.push_back(std::move(p));
        }
  return eqs;
}

}  // namespace

ModuliTable deformation_moduli_truncated(const FiniteAlgebra& f, int D) {
  if (f.dim == 0 || f.dim > 2) throw InputError("deformation moduli are supported for dim V <= 2");
  if (D < 0 || D > 4) throw InputError("deformation moduli are supported for 0 <= D <= 4");
  require_associative(f);

  ModuliTable t;
  t.cutoff = D;
  t.coordinates = f.dim * f.dim * f.dim;
  t.coalgebra = increments(coalgebra_h0_filtration(deformation_dgla(f), D));
  t.local_ring = increments(local_hilbert_samuel(associativity_equations(f), t.coordinates, D));
  t.equal = t.coalgebra == t.local_ring;
  return t;
}

}  // namespace bvkit
