#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvkit/artinian.hpp"
#include "bvkit/groebner.hpp"
#include "bvkit/polynomial.hpp"

namespace bvkit {

using DenseVector = std::vector<Rational>;

// Finite-dimensional dg Lie algebra by structure constants. Basis elements are
// indexed globally, grouped by increasing degree.
class GradedLieAlgebra {
 public:
  // degree -> ordered labels. Labels must be distinct.
  explicit GradedLieAlgebra(const std::map<int, std::vector<std::string>>& degrees);

  std::size_t dimension() const { return labels_.size(); }
  std::size_t dimension(int degree) const;
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::size_t index(const std::string& label) const;  // throws InputError
  std::vector<std::size_t> indices_in_degree(int degree) const;
  // Position of global index i among the basis of its own degree.
  std::size_t local_index(std::size_t i) const;
  std::vector<int> occupied_degrees() const;

  void set_differential(std::size_t from, const DenseVector& image);
  // Stores [a, b]; [b, a] is implied by graded antisymmetry unless also given.
  void set_bracket(std::size_t a, std::size_t b, const DenseVector& out);

  DenseVector d(std::size_t i) const;
  DenseVector d(const DenseVector& v) const;
  DenseVector bracket(std::size_t a, std::size_t b) const;
  DenseVector bracket(const DenseVector& u, const DenseVector& v) const;
  DenseVector zero() const { return DenseVector(dimension()); }
  DenseVector basis_vector(std::size_t i) const;

  const std::map<std::pair<std::size_t, std::size_t>, DenseVector>& given_brackets() const { return brackets_; }

 private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::size_t, DenseVector> diff_;
  std::map<std::pair<std::size_t, std::size_t>, DenseVector> brackets_;
};

struct DglaCheck {
  bool degrees_respected = true;
  bool d_squared = true;
  bool antisymmetric = true;
  bool jacobi = true;
  bool derivation = true;
  std::string detail;  // first violation
  bool ok() const { return degrees_respected && d_squared && antisymmetric && jacobi && derivation; }
};

DglaCheck check_dgla(const GradedLieAlgebra& g);

// MC(g) = Spec(A/(f_i)) with A = Q[t_1..t_m] on the degree-1 coordinates.
struct MCScheme {
  std::vector<std::string> coordinates;
  // f_i(t) = <e_i, d(a) + 1/2 [a, a]> for a = sum t_alpha b_alpha, one per degree-2 basis element.
  std::vector<Polynomial> components;
  // The nonzero components.
  std::vector<Polynomial> equations() const;
};

MCScheme mc_equations(const GradedLieAlgebra& g);

// da + 1/2 [a, a] for a in g^1 (x) B, indexed by the degree-1 and degree-2 bases.
std::vector<Artinian> mc_residual(const GradedLieAlgebra& g, const std::vector<Artinian>& a);

// Solutions a in g^1 (x) (e) over Q[e]/(e^order), as the zero set of a polynomial
// system in the unknowns a_{alpha,k} (coefficient of e^k in coordinate alpha).
struct MCSolutionFamily {
  int order = 1;
  std::size_t coordinates = 0;
  std::vector<std::string> unknowns;
  // equations_by_order[j - 1]: the coefficient of e^j, involving only a_{., k <= j}.
  std::vector<std::vector<Polynomial>> equations_by_order;
  GroebnerBasis groebner{0, MonomialOrder::degrevlex()};

  std::size_t unknown_index(std::size_t alpha, int k) const;
  // Only a = 0 solves the system.
  bool only_zero() const;
  // No constraint at all: every a in g^1 (x) (e) is a solution.
  bool unconstrained() const;
  // Unknowns absent from every leading monomial; they can be chosen freely.
  std::vector<std::string> independent_unknowns() const;
  bool contains(const std::vector<Artinian>& a) const;
};

MCSolutionFamily mc_solutions_over(const GradedLieAlgebra& g, int order);

// Symmetric-algebra elements with Artinian coefficients.
using SymSeries = std::map<Monomial, Artinian>;
using SymSeriesW = std::map<std::pair<Monomial, std::size_t>, Artinian>;

struct MCCocycleReport {
  bool accepted = false;
  std::vector<Artinian> residual;  // da + 1/2[a,a]; nonzero when rejected
  SymSeries element;               // sum_{n=1}^N a^n / n!
  SymSeriesW image;                // its coalgebra differential in S(g^1) (x) g^2
  int safe_degree = 0;             // N - 2
  bool cocycle = false;            // image vanishes in symmetric degrees <= safe_degree
};

MCCocycleReport mc_cocycle(const GradedLieAlgebra& g, const std::vector<Artinian>& a, int N);

// Coalgebra differential S(g^1) -> S(g^1) (x) g^2: sum d(b_a) d/dx_a + 1/2 sum [b_a, b_b] d^2/dx_a dx_b.
SymSeriesW coalgebra_differential_s1(const GradedLieAlgebra& g, const SymSeries& x);

}  // namespace bvkit
