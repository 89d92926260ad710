#include "bvkit/cocom.hpp"

#include <algorithm>
#include <optional>

#include "bvkit/groebner.hpp"
#include "bvkit/koszul.hpp"
#include "bvkit/linalg.hpp"

namespace bvkit {

namespace {

bool odd(const GradedLieAlgebra& g, std::size_t i) { return (g.degree(i) - 1) % 2 != 0; }

// Sign and sorted result of a * b for single words; nullopt when an odd index repeats.
std::optional<std::pair<int, SymWord>> multiply_words(const GradedLieAlgebra& g, const SymWord& a, const SymWord& b) {
  int sign = 1;
  for (std::size_t x : a)
    for (std::size_t y : b) {
      if (x == y && odd(g, x)) return std::nullopt;
      if (x > y && odd(g, x) && odd(g, y)) sign = -sign;
    }
  SymWord out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return std::make_pair(sign, std::move(out));
}

void accumulate(SymElement& acc, const SymWord& w, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = acc.try_emplace(w, 0);
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

void accumulate(CocomVector& acc, const CocomMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = acc.try_emplace(m, 0);
  it->second += c;
  if (sgn(it->second) == 0) acc.erase(it);
}

Rational multi_factorial(const Monomial& m) {
  Rational r = 1;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    for (int k = 2; k <= m[i]; ++k) r *= k;
  return r;
}

struct WindowSpaces {
  DegreeWindow window;
  std::vector<std::size_t> even;  // global indices of V
  std::vector<std::size_t> odd;   // global indices of W or U
};

WindowSpaces spaces(const GradedLieAlgebra& g) {
  WindowSpaces s;
  s.window = degree_window(g);
  s.even = g.indices_in_degree(1);
  s.odd = g.indices_in_degree(s.window == DegreeWindow::one_two ? 2 : 0);
  if (s.odd.size() > kMaxGenerators) throw InputError("odd part too large for the coalgebra complex");
  return s;
}

std::pair<int, SymWord> to_word(const WindowSpaces& s, const CocomMonomial& m) {
  SymWord w;
  for (std::size_t i : blade_indices(m.odd)) w.push_back(s.odd[i]);
  for (std::size_t i = 0; i < s.even.size(); ++i)
    for (int k = 0; k < m.even[i]; ++k) w.push_back(s.even[i]);
  std::sort(w.begin(), w.end());
  int sign = s.window == DegreeWindow::zero_one && m.even.degree() % 2 != 0 ? -1 : 1;
  return {sign, w};
}

std::pair<int, CocomMonomial> from_word(const GradedLieAlgebra& g, const WindowSpaces& s, const SymWord& w) {
  CocomMonomial m{Monomial(s.even.size()), 0};
  for (std::size_t idx : w) {
    if (g.degree(idx) == 1) {
      ++m.even[g.local_index(idx)];
    } else {
      m.odd |= blade_bit(g.local_index(idx));
    }
  }
  int sign = s.window == DegreeWindow::zero_one && m.even.degree() % 2 != 0 ? -1 : 1;
  return {sign, m};
}

TruncatedCoalgebraComplex empty_complex(const WindowSpaces& s, int N) {
  if (N < 0) throw InputError("symmetric cutoff must be non-negative");
  TruncatedCoalgebraComplex c;
  c.window = s.window;
  c.cutoff = N;
  c.even_dim = s.even.size();
  c.odd_dim = s.odd.size();
  auto monos = monomials_up_to(c.even_dim, N);
  for (Blade b = 0; b < (Blade{1} << c.odd_dim); ++b)
    for (const auto& m : monos) {
      c.index.emplace(CocomMonomial{m, b}, c.basis.size());
      c.basis.push_back({m, b});
    }
  return c;
}

}  // namespace

SymElement sym_multiply(const GradedLieAlgebra& g, const SymElement& a, const SymElement& b) {
  SymElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b)
      if (auto prod = multiply_words(g, wa, wb)) accumulate(out, prod->second, ca * cb * prod->first);
  return out;
}

SymElement coalgebra_differential(const GradedLieAlgebra& g, const SymWord& w) {
  SymElement out;
  std::size_t n = w.size();
  std::vector<int> par(n), before(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    par[p] = odd(g, w[p]) ? 1 : 0;
    before[p + 1] = before[p] + par[p];
  }
  auto without = [&](std::initializer_list<std::size_t> skip) {
    SymWord r;
    for (std::size_t q = 0; q < n; ++q)
      if (std::find(skip.begin(), skip.end(), q) == skip.end()) r.push_back(w[q]);
    return r;
  };
  auto emit = [&](const DenseVector& v, const SymWord& rest, const Rational& c) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) == 0) continue;
      if (auto prod = multiply_words(g, SymWord{j}, rest)) accumulate(out, prod->second, c * v[j] * prod->first);
    }
  };
  for (std::size_t p = 0; p < n; ++p) {
    int s = (par[p] * before[p]) % 2 == 0 ? 1 : -1;
    emit(g.d(w[p]), without({p}), Rational(s));
    for (std::size_t q = p + 1; q < n; ++q) {
      int e = par[p] * before[p] + par[q] * (before[q] - par[p]);
      int s2 = e % 2 == 0 ? 1 : -1;
      int l2 = (g.degree(w[p]) + 1) % 2 == 0 ? 1 : -1;
      emit(g.bracket(w[p], w[q]), without({p, q}), Rational(s2 * l2));
    }
  }
  return out;
}

SymElement coalgebra_differential(const GradedLieAlgebra& g, const SymElement& x) {
  SymElement out;
  for (const auto& [w, c] : x)
    for (const auto& [w2, c2] : coalgebra_differential(g, w)) accumulate(out, w2, c * c2);
  return out;
}

DegreeWindow degree_window(const GradedLieAlgebra& g) {
  auto occ = g.occupied_degrees();
  auto within = [&](int lo, int hi) {
    return std::all_of(occ.begin(), occ.end(), [&](int d) { return d >= lo && d <= hi; });
  };
  if (within(1, 2)) return DegreeWindow::one_two;
  if (within(0, 1)) return DegreeWindow::zero_one;
  throw InputError("the dg Lie algebra must sit in degrees {1, 2} or {0, 1}");
}

std::string to_string(DegreeWindow w) { return w == DegreeWindow::one_two ? "{1,2}" : "{0,1}"; }

int TruncatedCoalgebraComplex::cohomological_degree(const CocomMonomial& m) const {
  int b = blade_degree(m.odd);
  return window == DegreeWindow::one_two ? b : -b;
}

std::vector<std::size_t> TruncatedCoalgebraComplex::piece(int sym_degree, int ext_degree) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].even.degree() == sym_degree && blade_degree(basis[i].odd) == ext_degree) out.push_back(i);
  return out;
}

bool TruncatedCoalgebraComplex::squares_to_zero() const {
  for (const auto& img : images) {
    CocomVector dd;
    for (const auto& [m, c] : img)
      for (const auto& [m2, c2] : images[index.at(m)]) accumulate(dd, m2, c * c2);
    if (!dd.empty()) return false;
  }
  return true;
}

std::vector<std::size_t> TruncatedCoalgebraComplex::h0_filtration() const {
  std::vector<std::size_t> out;
  for (int n = 0; n <= cutoff; ++n) {
    std::size_t dim = 0;
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& b = basis[i];
      if (b.even.degree() > n) continue;
      if (b.odd == 0) ++dim;
      bool source = window == DegreeWindow::one_two ? b.odd == 0 : blade_degree(b.odd) == 1;
      if (!source) continue;
      std::map<std::size_t, Rational> row;
      for (const auto& [m, c] : images[i])
        if (m.even.degree() <= n) row[index.at(m)] += c;
      rows.push_back(make_sparse(row));
    }
    out.push_back(dim - rank_of(rows));
  }
  return out;
}

TruncatedCoalgebraComplex build_cocom_complex(const GradedLieAlgebra& g, int N) {
  WindowSpaces s = spaces(g);
  TruncatedCoalgebraComplex c = empty_complex(s, N);
  for (const auto& b : c.basis) {
    auto [sign, word] = to_word(s, b);
    CocomVector img;
    for (const auto& [w, coeff] : coalgebra_differential(g, word)) {
      auto [tsign, target] = from_word(g, s, w);
      if (target.even.degree() <= N) accumulate(img, target, coeff * sign * tsign);
    }
    c.images.push_back(std::move(img));
  }
  return c;
}

std::vector<std::size_t> coalgebra_h0_filtration(const GradedLieAlgebra& g, int N) {
  WindowSpaces s = spaces(g);
  if (s.window != DegreeWindow::one_two) throw InputError("the coalgebra H^0 filtration needs degrees {1, 2}");
  if (N < 0) throw InputError("symmetric cutoff must be non-negative");
  auto monos = monomials_up_to(s.even.size(), N);
  std::map<CocomMonomial, std::size_t> col;
  Echelon ech;
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  for (int n = 0; n <= N; ++n) {
    for (; pos < monos.size() && monos[pos].degree() <= n; ++pos) {
      auto [sign, word] = to_word(s, CocomMonomial{monos[pos], 0});
      std::map<std::size_t, Rational> row;
      for (const auto& [w, coeff] : coalgebra_differential(g, word)) {
        auto [tsign, target] = from_word(g, s, w);
        auto it = col.try_emplace(target, col.size()).first;
        row[it->second] += coeff * sign * tsign;
      }
      ech.insert(make_sparse(row));
    }
    out.push_back(pos - ech.rank());
  }
  return out;
}

TruncatedCoalgebraComplex chevalley_eilenberg_complex(const GradedLieAlgebra& g, int N) {
  WindowSpaces s = spaces(g);
  if (s.window != DegreeWindow::zero_one) throw InputError("the Chevalley-Eilenberg complex needs degrees {0, 1}");
  TruncatedCoalgebraComplex c = empty_complex(s, N);
  std::size_t m = s.even.size();
  for (const auto& b : c.basis) {
    CocomVector img;
    auto add = [&](const Monomial& mono, Blade blade, const Rational& coeff) {
      if (mono.degree() <= N) accumulate(img, CocomMonomial{mono, blade}, coeff);
    };
    auto pos = blade_indices(b.odd);
    for (std::size_t p = 0; p < pos.size(); ++p) {
      // (-1)^p with 1-based p: u_p acts on the coefficient. This is the sign that
      // makes d^2 = 0 for a left action.
      Rational sign = p % 2 == 0 ? -1 : 1;
      std::size_t u = s.odd[pos[p]];
      Blade rest = b.odd & ~blade_bit(pos[p]);
      for (std::size_t j = 0; j < m; ++j) {
        if (b.even[j] == 0) continue;
        DenseVector uv = g.bracket(u, s.even[j]);
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(uv[s.even[k]]) == 0) continue;
          Monomial mono = b.even;
          --mono[j];
          ++mono[k];
          add(mono, rest, sign * uv[s.even[k]] * b.even[j]);
        }
      }
      DenseVector du = g.d(u);
      for (std::size_t k = 0; k < m; ++k)
        if (sgn(du[s.even[k]]) != 0) add(b.even * Monomial::variable(m, k), rest, sign * du[s.even[k]]);
      for (std::size_t q = p + 1; q < pos.size(); ++q) {
        // (-1)^{p+q} with 1-based positions.
        Rational sign2 = (p + q) % 2 == 0 ? 1 : -1;
        Blade rest2 = rest & ~blade_bit(pos[q]);
        DenseVector br = g.bracket(u, s.odd[pos[q]]);
        for (std::size_t k = 0; k < s.odd.size(); ++k) {
          if (sgn(br[s.odd[k]]) == 0) continue;
          int ws = wedge_sign(blade_bit(k), rest2);
          if (ws == 0) continue;
          add(b.even, rest2 | blade_bit(k), sign2 * br[s.odd[k]] * ws);
        }
      }
    }
    c.images.push_back(std::move(img));
  }
  return c;
}

MatrixComparison compare_with_koszul_transpose(const GradedLieAlgebra& g, int N) {
  WindowSpaces s = spaces(g);
  if (s.window != DegreeWindow::one_two) throw InputError("the Koszul comparison needs degrees {1, 2}");
  MatrixComparison rep;
  auto cocom = build_cocom_complex(g, N);
  if (s.odd.empty()) {
    rep.equal = std::all_of(cocom.images.begin(), cocom.images.end(), [](const auto& v) { return v.empty(); });
    return rep;
  }
  MCScheme scheme = mc_equations(g);
  KoszulComplex K(scheme.coordinates, scheme.components);
  // Koszul coefficient of t^gamma e_J in d(t^src e_srcJ).
  auto koszul_entry = [&](const CocomMonomial& src, const CocomMonomial& tgt) -> Rational {
    auto d = K.basis_differential(src.odd);
    auto it = d.find(tgt.odd);
    if (it == d.end() || !src.even.divides(tgt.even)) return 0;
    Monomial q = tgt.even / src.even;
    for (const auto& [mono, c] : it->second.terms())
      if (mono == q) return c;
    return 0;
  };
  auto check = [&](const CocomMonomial& src, const CocomMonomial& tgt, const Rational& cocom_coeff) {
    // <D(x^src w_src), t^tgt e_tgt> = <x^src w_src, d_K(t^tgt e_tgt)>
    Rational lhs = cocom_coeff * multi_factorial(tgt.even);
    Rational rhs = multi_factorial(src.even) * koszul_entry(tgt, src);
    ++rep.entries_compared;
    if (lhs != rhs && rep.equal) {
      rep.equal = false;
      rep.first_mismatch = "entry (" + to_string(src.even, scheme.coordinates) + ", " + std::to_string(src.odd) +
                           ") -> (" + to_string(tgt.even, scheme.coordinates) + ", " + std::to_string(tgt.odd) + ")";
    }
  };
  for (std::size_t i = 0; i < cocom.basis.size(); ++i)
    for (const auto& [tgt, c] : cocom.images[i]) check(cocom.basis[i], tgt, c);
  // Koszul entries the coalgebra side might have missed.
  for (const auto& src : cocom.basis)
    for (const auto& [blade, poly] : K.basis_differential(src.odd))
      for (const auto& [mono, c] : poly.terms()) {
        CocomMonomial tgt{src.even * mono, blade};
        if (tgt.even.degree() > N) continue;
        const auto& img = cocom.images[cocom.index.at(tgt)];
        auto it = img.find(src);
        if (it == img.end()) check(tgt, src, 0);
      }
  return rep;
}

MatrixComparison compare_with_chevalley_eilenberg(const GradedLieAlgebra& g, int N) {
  auto a = build_cocom_complex(g, N);
  auto b = chevalley_eilenberg_complex(g, N);
  MatrixComparison rep;
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    rep.entries_compared += std::max(a.images[i].size(), b.images[i].size());
    if (a.images[i] != b.images[i] && rep.equal) {
      rep.equal = false;
      rep.first_mismatch = "column " + std::to_string(i);
    }
  }
  return rep;
}

std::vector<std::size_t> local_hilbert_samuel(const std::vector<Polynomial>& gens, std::size_t nvars, int D) {
  if (D < 0) throw InputError("degree cutoff must be non-negative");
  std::vector<std::size_t> out;
  for (int n = 0; n <= D; ++n) {
    std::vector<Polynomial> all;
    for (const auto& f : gens)
      if (!f.is_zero()) all.push_back(f);
    for (const auto& mono : monomials_up_to(nvars, n + 1))
      if (mono.degree() == n + 1) {
        Polynomial p(nvars);
        p.add_term(mono, 1);
        all.push_back(std::move(p));
      }
    if (nvars == 0) {
      bool unit = std::any_of(all.begin(), all.end(), [](const Polynomial& p) { return !p.is_zero(); });
      out.push_back(unit ? 0 : 1);
      continue;
    }
    out.push_back(quotient_basis(all, MonomialOrder::degrevlex(), n + 1, nvars).dimension);
  }
  return out;
}

std::vector<std::size_t> increments(const std::vector<std::size_t>& cumulative) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cumulative.size(); ++i) out.push_back(cumulative[i] - (i ? cumulative[i - 1] : 0));
  return out;
}

HilbertComparison compare_h0_local_ring(const GradedLieAlgebra& g, int D) {
  if (D < 1) throw InputError("degree cutoff must be at least 1");
  if (degree_window(g) != DegreeWindow::one_two) throw InputError("the local ring comparison needs degrees {1, 2}");
  MCScheme scheme = mc_equations(g);
  HilbertComparison rep;
  rep.cutoff = D;
  rep.local_ring = increments(local_hilbert_samuel(scheme.equations(), scheme.coordinates.size(), D));
  rep.coalgebra = increments(coalgebra_h0_filtration(g, D));
  rep.equal = rep.local_ring == rep.coalgebra;
  return rep;
}

HilbertComparison compare_invariants(const GradedLieAlgebra& g, int D) {
  if (D < 0) throw InputError("degree cutoff must be non-negative");
  WindowSpaces s = spaces(g);
  if (s.window != DegreeWindow::zero_one) throw InputError("the invariant comparison needs degrees {0, 1}");
  HilbertComparison rep;
  rep.cutoff = D;
  rep.coalgebra = increments(chevalley_eilenberg_complex(g, D).h0_filtration());
  std::size_t m = s.even.size();
  // tau_u = sum_k ((du)_k + sum_j [u, v_j]_k t_j) d/dt_k on Q[t_1..t_m].
  std::vector<std::vector<Polynomial>> fields;
  for (std::size_t u : s.odd) {
    std::vector<Polynomial> comp(m, Polynomial(m));
    DenseVector du = g.d(u);
    for (std::size_t k = 0; k < m; ++k) {
      comp[k].add_term(Monomial(m), du[s.even[k]]);
      for (std::size_t j = 0; j < m; ++j)
        comp[k].add_term(Monomial::variable(m, j), g.bracket(u, s.even[j])[s.even[k]]);
    }
    fields.push_back(std::move(comp));
  }
  std::vector<std::size_t> cumulative;
  for (int n = 0; n <= D; ++n) {
    auto monos = monomials_up_to(m, n);
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col.emplace(monos[i], i);
    std::vector<SparseVector> rows;
    for (const auto& mono : monos) {
      Polynomial f(m);
      f.add_term(mono, 1);
      std::map<std::size_t, Rational> row;
      for (std::size_t u = 0; u < fields.size(); ++u) {
        Polynomial image(m);
        for (std::size_t k = 0; k < m; ++k) image += fields[u][k] * partial_derivative(f, k);
        for (const auto& [t, c] : image.terms()) row[u * monos.size() + col.at(t)] += c;
      }
      rows.push_back(make_sparse(row));
    }
    cumulative.push_back(monos.size() - rank_of(rows));
  }
  rep.local_ring = increments(cumulative);
  rep.equal = rep.local_ring == rep.coalgebra;
  return rep;
}

}  // namespace bvkit
