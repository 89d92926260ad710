#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bvkit/exterior.hpp"
#include "bvkit/groebner.hpp"

namespace bvkit {

// Element of the Koszul complex: slot blade -> polynomial coefficient.
using KoszulElement = std::map<Blade, Polynomial>;

// K(A; f_1..f_r): Lambda^p(A^r) in cohomological degree -p with
// d(e_{i_1}^...^e_{i_p}) = sum_j (-1)^{j-1} f_{i_j} e_{..i_j-hat..}.
class KoszulComplex {
 public:
  KoszulComplex(std::vector<std::string> vars, std::vector<Polynomial> gens);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  std::size_t rank() const { return gens_.size(); }
  // Weight of slot i in the degree filtration: max(deg f_i, 0).
  int slot_weight(std::size_t i) const;
  int max_generator_degree() const;
  bool homogeneous() const;

  KoszulElement differential(const KoszulElement& x) const;
  KoszulElement basis_differential(Blade b) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> gens_;
};

// Throws InputError on an empty generator list or mismatched rings.
KoszulComplex build_koszul(std::vector<std::string> vars, std::vector<Polynomial> gens);

// Exterior product on the Koszul algebra.
KoszulElement koszul_wedge(const KoszulElement& a, const KoszulElement& b);
KoszulElement koszul_add(KoszulElement a, const KoszulElement& b, const Rational& scale = 1);
bool koszul_is_zero(const KoszulElement& a);

// One (cohomological degree, weight) entry. x^a e_I has weight
// |a| + sum_{i in I} deg f_i; the differential does not raise weight.
struct CohomologyCell {
  int cohomological_degree = 0;
  int weight = 0;
  std::size_t dimension = 0;  // graded piece of the chain space
  std::size_t rank_out = 0;   // growth of rank d|F_k
  std::size_t rank_in = 0;    // growth of dim(B_D cap F_k)
  std::size_t cohomology = 0;
  bool reliable = false;
};

struct TruncatedComplexReport {
  int degree_cap = 0;
  int reliable_bound = 0;  // degree_cap - max deg f_i
  bool homogeneous = false;
  std::vector<CohomologyCell> cells;

  const CohomologyCell* cell(int cohomological_degree, int weight) const;
  // Every reliable cell in degrees < 0 (and weight <= up_to) has zero cohomology.
  bool acyclic_below_zero(std::optional<int> up_to = std::nullopt) const;
  std::size_t total_cohomology(int cohomological_degree, bool reliable_only = true) const;
};

// Cohomology of the complex filtered by weight and truncated at weight D.
// Cell (k) measures Z(F_k)/(B(F_D) cap F_k) against its value at k - 1.
TruncatedComplexReport truncated_cohomology(const KoszulComplex& cplx, int degree_cap);

struct MilnorReport {
  std::vector<std::string> vars;
  Polynomial f;
  bool isolated = false;
  std::optional<std::size_t> milnor_number;  // empty = infinite
  QuotientBasis quotient{{}, GroebnerBasis(0, MonomialOrder::degrevlex()), {}, true, 0, 0, std::nullopt};
};

MilnorReport milnor_ring(const std::vector<std::string>& vars, const Polynomial& f, int degree_cap = 12,
                         const MonomialOrder& order = MonomialOrder::degrevlex());

struct IsolationVerdict {
  bool isolated = false;
  // Finite staircase, or a variable whose pure powers all survive.
  std::vector<Monomial> staircase;
  std::optional<std::size_t> open_variable;
  // When isolated: truncated Koszul cohomology of the partials vanishes in
  // negative degrees at reliable weights.
  std::optional<bool> cohomology_consistent;
};

IsolationVerdict is_isolated_singularity(const std::vector<std::string>& vars, const Polynomial& f,
                                         int reliable_degree = 8);

// Multiplication by gens[i] is injective on A/(gens[0..i-1]) in degrees <= bound,
// for every i. Exact when true in the homogeneous case; a truncated verdict otherwise.
struct RegularSequenceVerdict {
  bool regular = true;
  std::optional<std::size_t> failing_index;
  std::optional<Polynomial> kernel_witness;
};

RegularSequenceVerdict regular_sequence_test(const std::vector<Polynomial>& gens, int bound);

// The three conditions on f: finite Milnor number, acyclicity at reliable
// weights <= reliable_degree, regular sequence of partials (truncated).
struct Lemma14Verdict {
  bool finite = false;
  bool acyclic = false;
  bool regular = false;
  bool agree() const { return finite == acyclic && acyclic == regular; }
};

Lemma14Verdict lemma_1_4(const std::vector<std::string>& vars, const Polynomial& f, int reliable_degree = 8);

std::vector<Polynomial> jacobian_generators(const Polynomial& f);

}  // namespace bvkit
