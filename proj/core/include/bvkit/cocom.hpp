#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bvkit/dgla.hpp"
#include "bvkit/exterior.hpp"

namespace bvkit {

// Words in S(g[1]): sorted global basis indices. An index of odd shifted degree
// (degree - 1) appears at most once.
using SymWord = std::vector<std::size_t>;
using SymElement = std::map<SymWord, Rational>;

// Product in the graded-symmetric algebra S(g[1]) with Koszul signs.
SymElement sym_multiply(const GradedLieAlgebra& g, const SymElement& a, const SymElement& b);

// The coderivation of S(g[1]) with l1(sx) = s(dx) and l2(sx, sy) = (-1)^{|x|+1} s[x, y].
SymElement coalgebra_differential(const GradedLieAlgebra& g, const SymWord& w);
SymElement coalgebra_differential(const GradedLieAlgebra& g, const SymElement& x);

// The two windows with explicit descriptions: g in degrees {1, 2}, giving
// S(V) (x) Lambda(W), and g in degrees {0, 1}, giving Lambda(U) (x) S(V).
enum class DegreeWindow { one_two, zero_one };

// Throws InputError when g is not concentrated in one of the two windows.
DegreeWindow degree_window(const GradedLieAlgebra& g);
std::string to_string(DegreeWindow w);

// Basis element: monomial over the even space V and blade over the odd space (W or U).
struct CocomMonomial {
  Monomial even;
  Blade odd = 0;
  friend auto operator<=>(const CocomMonomial&, const CocomMonomial&) = default;
};

using CocomVector = std::map<CocomMonomial, Rational>;

struct TruncatedCoalgebraComplex {
  DegreeWindow window = DegreeWindow::one_two;
  int cutoff = 0;  // symmetric degree <= cutoff
  std::size_t even_dim = 0;
  std::size_t odd_dim = 0;
  std::vector<CocomMonomial> basis;
  std::map<CocomMonomial, std::size_t> index;
  std::vector<CocomVector> images;  // differential of basis[i], with terms beyond the cutoff dropped

  // one_two: number of W factors; zero_one: minus the number of U factors.
  int cohomological_degree(const CocomMonomial& m) const;
  // Basis positions with the given symmetric and exterior degree.
  std::vector<std::size_t> piece(int sym_degree, int ext_degree) const;
  // d^2 = 0 on every basis element. In one_two the truncation is a subcomplex; in
  // zero_one d never lowers symmetric degree, so the dropped terms cannot come back.
  bool squares_to_zero() const;
  // Cumulative dimension of H^0 restricted to symmetric degrees <= n, for n = 0..cutoff.
  // one_two: ker d on S^{<=n}(V). zero_one: S^{<=n}(V) modulo the truncated image of U (x) S^{<=n}(V).
  std::vector<std::size_t> h0_filtration() const;
};

// Built from the coalgebra differential above via the identification of words
// with CocomMonomial; in the zero_one window a monomial of V-degree k carries (-1)^k.
TruncatedCoalgebraComplex build_cocom_complex(const GradedLieAlgebra& g, int N);

// one_two window: cumulative dim(ker d on S^{<=n}(V)) for n = 0..N, building only
// the degree-0 piece. Equals build_cocom_complex(g, N).h0_filtration().
std::vector<std::size_t> coalgebra_h0_filtration(const GradedLieAlgebra& g, int N);

// Homological Chevalley-Eilenberg complex of U with coefficients in S(V), where u
// acts by the derivation extending v -> [u, v] plus multiplication by du.
TruncatedCoalgebraComplex chevalley_eilenberg_complex(const GradedLieAlgebra& g, int N);

struct MatrixComparison {
  bool equal = true;
  std::size_t entries_compared = 0;
  std::string first_mismatch;
};

// one_two window: the coalgebra differential is the transpose of the Koszul
// differential of the MC components under <x^a, t^b> = a! delta_{ab}.
MatrixComparison compare_with_koszul_transpose(const GradedLieAlgebra& g, int N);

// zero_one window: build_cocom_complex equals chevalley_eilenberg_complex entry by entry.
MatrixComparison compare_with_chevalley_eilenberg(const GradedLieAlgebra& g, int N);

struct HilbertComparison {
  int cutoff = 0;
  // Per-degree increments for n = 0..cutoff.
  std::vector<std::size_t> local_ring;
  std::vector<std::size_t> coalgebra;
  bool equal = false;
};

// one_two window: dim A/((f_i) + m^{n+1}) against dim(ker d on S^{<=n}).
HilbertComparison compare_h0_local_ring(const GradedLieAlgebra& g, int D);

// zero_one window: truncated CE H^0 against the functions on V of degree <= n
// killed by every vector field du + u.v.
HilbertComparison compare_invariants(const GradedLieAlgebra& g, int D);

// Cumulative dim A/(I + m^{n+1}) for n = 0..D, through Groebner bases.
std::vector<std::size_t> local_hilbert_samuel(const std::vector<Polynomial>& gens, std::size_t nvars, int D);

// Per-degree increments of a cumulative table.
std::vector<std::size_t> increments(const std::vector<std::size_t>& cumulative);

}  // namespace bvkit
