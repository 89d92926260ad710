#include <doctest.h>

#include "bvkit/bv.hpp"
#include "bvkit/exterior.hpp"
#include "bvkit/identities.hpp"
#include "bvkit/koszul.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bvkit;
using namespace bvkit::testing;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& v = XY) { return parse_polynomial(s, v); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

struct CorpusEntry {
  std::string f;
  std::vector<std::string> vars;
  bool isolated;
};

// Mixed isolated / non-isolated polynomials.
std::vector<CorpusEntry> lemma_corpus() {
  return {
      {"x^2 + y^2", XY, true},           {"x^3 + y^2", XY, true},
      {"x^5 + y^3", XY, true},           {"x*y^2", XY, false},
      {"x^4 + y^2", XY, true},           {"x^5 + y^2", XY, true},
      {"x^6 + y^2", XY, true},           {"x^3 + x*y^2", XY, true},
      {"x^4 + x*y^2", XY, true},         {"x^3 + y^4", XY, true},
      {"x^3 + x*y^3", XY, true},         {"x^3 + y^5", XY, true},
      {"x^2*y", XY, false},              {"x*y", XY, true},
      {"x^4 + y^4", XY, true},           {"x^2*y + y^3", XY, true},
      {"(x - y)^2", XY, false},          {"x^3", XY, false},
      {"x^2*y^2", XY, false},            {"y^2 - x^3 - x^2", XY, true},
      {"x^2 + y^2 + z^2", XYZ, true},    {"x*y*z", XYZ, false},
      {"x^3 + y^3 + z^3", XYZ, true},    {"x*y + z^2", XYZ, true},
      {"x^2 + y^2", XYZ, false},
  };
}

// Coefficient of blade b in a Koszul element.
Polynomial coeff(const KoszulElement& e, Blade b, std::size_t n) {
  auto it = e.find(b);
  return it == e.end() ? Polynomial(n) : it->second;
}

}  // namespace

TEST_CASE("build_koszul examples and errors") {
  auto fx = P("x^2 + y^2");
  KoszulComplex K(XY, jacobian_generators(fx));
  auto d = K.basis_differential(0b11);
  CHECK(coeff(d, 0b10, 2) == P("2*x"));
  CHECK(coeff(d, 0b01, 2) == P("-2*y"));
  CHECK(d.size() == 2);

  KoszulComplex single(XY, {P("x*y - 1")});
  CHECK(single.rank() == 1);
  auto d1 = single.basis_differential(0b1);
  CHECK(coeff(d1, 0, 2) == P("x*y - 1"));

  CHECK_THROWS_AS(build_koszul(XY, {}), InputError);
  CHECK_THROWS_AS(build_koszul(XY, {P("x", {"x"})}), InputError);
}

TEST_CASE("Koszul differential squares to zero on every basis blade") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng.below(3), r = 1 + rng.below(4);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_polynomial(rng, n, 3));
    KoszulComplex K(var_names(n), gens);
    for (Blade b = 0; b < (Blade{1} << r); ++b) {
      auto dd = K.differential(K.basis_differential(b));
      CHECK(koszul_is_zero(dd));
    }
  }
}

TEST_CASE("Koszul differential is a derivation of the wedge product") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.below(4);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_polynomial(rng, 2, 2));
    KoszulComplex K(XY, gens);
    KoszulElement a, b;
    a.emplace(static_cast<Blade>(rng.below(Blade{1} << r)), random_polynomial(rng, 2, 2));
    b.emplace(static_cast<Blade>(rng.below(Blade{1} << r)), random_polynomial(rng, 2, 2));
    int pa = blade_degree(a.begin()->first);
    auto lhs = K.differential(koszul_wedge(a, b));
    auto rhs = koszul_add(koszul_wedge(K.differential(a), b), koszul_wedge(a, K.differential(b)),
                          Rational(pa % 2 == 0 ? 1 : -1));
    CHECK(koszul_is_zero(koszul_add(lhs, rhs, -1)));
  }
}

TEST_CASE("rank-two Koszul complex is the tensor product of two rank-one complexes") {
  // K(f1) has basis {1, s}, K(f2) has basis {1, t}; s (x) t corresponds to e1^e2.
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    auto f1 = random_polynomial(rng, 2, 3), f2 = random_polynomial(rng, 2, 3);
    KoszulComplex K(XY, {f1, f2});
    // Tensor differential d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db, per basis pair.
    auto tensor_d = [&](int a, int b) {
      std::map<std::pair<int, int>, Polynomial> out;
      if (a == 1) out[{0, b}] = f1;
      if (b == 1) {
        Polynomial term = a == 1 ? -f2 : f2;
        auto [it, fresh] = out.try_emplace({a, 0}, Polynomial(2));
        it->second += term;
      }
      return out;
    };
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        Blade blade = static_cast<Blade>(a | (b << 1));
        auto direct = K.basis_differential(blade);
        auto tensor = tensor_d(a, b);
        for (const auto& [ab, p] : tensor) {
          Blade target = static_cast<Blade>(ab.first | (ab.second << 1));
          CHECK(coeff(direct, target, 2) == p);
        }
        std::size_t nonzero = 0;
        for (const auto& kv : tensor) nonzero += kv.second.is_zero() ? 0 : 1;
        CHECK(direct.size() == nonzero);
      }
  }
}

TEST_CASE("truncated cohomology examples") {
  SUBCASE("regular partials are acyclic") {
    KoszulComplex K(XY, jacobian_generators(P("x^2 + y^2")));
    auto rep = truncated_cohomology(K, 8);
    CHECK(rep.homogeneous);
    CHECK(rep.reliable_bound == 7);
    CHECK(rep.total_cohomology(-1) == 0);
    CHECK(rep.total_cohomology(-2) == 0);
    CHECK(rep.total_cohomology(0) == 1);
    CHECK(rep.acyclic_below_zero());
  }
  SUBCASE("x^2 in k[x,y] leaves a cocycle in degree -1") {
    KoszulComplex K(XY, jacobian_generators(P("x^2")));
    auto rep = truncated_cohomology(K, 6);
    CHECK_FALSE(rep.acyclic_below_zero());
    // d(slot_2) = 0 while the only boundary from the top blade is 2x slot_2.
    const auto* c = rep.cell(-1, 0);
    REQUIRE(c != nullptr);
    CHECK(c->dimension == 1);
    CHECK(c->cohomology == 1);
    CHECK(rep.cell(-1, 1)->cohomology >= 1);
  }
  SUBCASE("errors") {
    KoszulComplex K(XY, {P("x")});
    CHECK_THROWS_AS(truncated_cohomology(K, -1), InputError);
  }
}

TEST_CASE("truncated cohomology table invariants") {
  Rng rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 1 + rng.below(2), r = 1 + rng.below(3);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(random_polynomial(rng, n, 2));
    KoszulComplex K(var_names(n), gens);
    int D = 4;
    auto rep = truncated_cohomology(K, D);
    CHECK(rep.cells.size() == (r + 1) * static_cast<std::size_t>(D + 1));
    for (const auto& c : rep.cells) {
      CHECK(c.rank_out + c.rank_in + c.cohomology == c.dimension);
      CHECK(c.reliable == (rep.homogeneous || c.weight <= rep.reliable_bound));
    }
    // Euler characteristic of the truncated complex is unaffected by the ranks.
    long euler_dim = 0, euler_coh = 0;
    for (const auto& c : rep.cells) {
      long sign = c.cohomological_degree % 2 == 0 ? 1 : -1;
      euler_dim += sign * static_cast<long>(c.dimension);
      euler_coh += sign * static_cast<long>(c.cohomology);
    }
    CHECK(euler_dim == euler_coh);
  }
}

TEST_CASE("truncated cohomology agrees with a dense rank computation for homogeneous generators") {
  // In the homogeneous case each weight is a subcomplex; compute it directly.
  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) {
      int deg = 1 + static_cast<int>(rng.below(2));
      gens.push_back(random_polynomial(rng, 2, deg).homogeneous_part(deg));
      if (gens.back().is_zero()) gens.back() = P(deg == 1 ? "x" : "x*y");
    }
    KoszulComplex K(XY, gens);
    int D = 5;
    auto rep = truncated_cohomology(K, D);
    REQUIRE(rep.homogeneous);
    for (int k = 0; k <= D; ++k) {
      // Basis of weight exactly k for p = 0, 1, 2.
      auto weight_basis = [&](Blade b) {
        int slot = 0;
        for (std::size_t i : blade_indices(b)) slot += K.slot_weight(i);
        std::vector<Monomial> out;
        for (const auto& m : all_monomials_below(2, k + 1))
          if (m.degree() + slot == k) out.push_back(m);
        return out;
      };
      std::vector<std::vector<std::pair<Monomial, Blade>>> basis(3);
      for (Blade b = 0; b < 4; ++b)
        for (const auto& m : weight_basis(b)) basis[static_cast<std::size_t>(blade_degree(b))].emplace_back(m, b);
      auto matrix_rank = [&](int p) -> std::size_t {
        if (p == 0 || p > 2) return 0;
        std::map<std::pair<Monomial, Blade>, std::size_t> col;
        for (std::size_t i = 0; i < basis[static_cast<std::size_t>(p - 1)].size(); ++i)
          col.emplace(basis[static_cast<std::size_t>(p - 1)][i], i);
        std::vector<SparseVector> rows;
        for (const auto& [m, b] : basis[static_cast<std::size_t>(p)]) {
          KoszulElement e{{b, Polynomial(2)}};
          e.begin()->second.add_term(m, 1);
          std::map<std::size_t, Rational> row;
          for (const auto& [c, g] : K.differential(e))
            for (const auto& [t, q] : g.terms()) row[col.at({t, c})] += q;
          rows.push_back(make_sparse(row));
        }
        return rank_of(rows);
      };
      for (int p = 0; p <= 2; ++p) {
        std::size_t expect = basis[static_cast<std::size_t>(p)].size() - matrix_rank(p) - matrix_rank(p + 1);
        CHECK(rep.cell(-p, k)->cohomology == expect);
      }
    }
  }
}

TEST_CASE("milnor_ring examples") {
  auto a = milnor_ring(XY, P("x^3 - y^2"));
  CHECK(a.isolated);
  CHECK(a.milnor_number == 2u);
  CHECK(a.quotient.standard_monomials == std::vector<Monomial>{mono({0, 0}), mono({1, 0})});

  auto b = milnor_ring(XY, P("x^2 + y^2"));
  CHECK(b.milnor_number == 1u);
  CHECK(b.quotient.standard_monomials == std::vector<Monomial>{mono({0, 0})});

  auto c = milnor_ring(XY, P("x^3 + y^4"));
  CHECK(c.milnor_number == 6u);
  std::vector<Monomial> expected = {mono({0, 0}), mono({1, 0}), mono({0, 1}),
                                    mono({0, 2}), mono({1, 1}), mono({1, 2})};
  auto got = c.quotient.standard_monomials;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  auto z = milnor_ring(XY, Polynomial(2));
  CHECK_FALSE(z.isolated);
  CHECK_FALSE(z.milnor_number.has_value());

  CHECK_THROWS_AS(milnor_ring(XY, P("x", {"x"})), InputError);
}

TEST_CASE("Milnor ideal is unchanged by adding a constant to f") {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_polynomial(rng, 2, 4);
    auto shifted = f + Polynomial::constant(2, Rational(static_cast<long>(rng.range(-5, 5))));
    auto a = milnor_ring(XY, f, 8), b = milnor_ring(XY, shifted, 8);
    CHECK(a.isolated == b.isolated);
    CHECK(a.milnor_number == b.milnor_number);
    CHECK(a.quotient.standard_monomials == b.quotient.standard_monomials);
  }
}

TEST_CASE("is_isolated_singularity examples and certificates") {
  auto a = is_isolated_singularity(XY, P("x^3 - y^2"));
  CHECK(a.isolated);
  CHECK(a.staircase.size() == 2);
  CHECK(a.cohomology_consistent == true);

  auto b = is_isolated_singularity(XY, P("x^2*y"));
  CHECK_FALSE(b.isolated);
  REQUIRE(b.open_variable.has_value());
  CHECK(*b.open_variable == 1);

  auto z = is_isolated_singularity(XY, Polynomial(2));
  CHECK_FALSE(z.isolated);
  CHECK(z.open_variable.has_value());
}

TEST_CASE("Milnor numbers match the brute-force local oracle") {
  // All entries are quasi-homogeneous, so the global and local counts coincide.
  const std::vector<std::string> corpus = {"x^2 + y^2",   "x^3 + y^2",   "x^5 + y^3",  "x^2 + y^3",
                                           "x^4 + y^2",   "x^5 + y^2",   "x^6 + y^2",  "x^3 + x*y^2",
                                           "x^4 + x*y^2", "x^3 + y^4",   "x^3 + x*y^3", "x^3 + y^5",
                                           "x^2*y",       "x^4 + y^4",   "x^2*y + y^3"};
  for (const auto& s : corpus) {
    CAPTURE(s);
    auto f = P(s);
    auto rep = milnor_ring(XY, f);
    CHECK(rep.milnor_number == brute_force_milnor(f));
  }
  CHECK(brute_force_milnor(P("x^3 + y^4")) == 6u);
  CHECK(brute_force_milnor(P("x^2*y")) == std::nullopt);
}

TEST_CASE("H^0 of the truncated complex counts the Milnor ring") {
  for (const std::string s : {"x^2 + y^2", "x^3 + y^2", "x^3 + y^4", "x^3 + x*y^2", "x^2*y + y^3", "x^4 + x*y^2"}) {
    CAPTURE(s);
    auto f = P(s);
    KoszulComplex K(XY, jacobian_generators(f));
    auto rep = truncated_cohomology(K, 2 * f.total_degree() + 2);
    CHECK(rep.total_cohomology(0) == *milnor_ring(XY, f).milnor_number);
  }
}

TEST_CASE("regular_sequence_test examples") {
  CHECK(regular_sequence_test({P("x"), P("y")}, 6).regular);
  CHECK(regular_sequence_test({P("x^2"), P("y^3")}, 6).regular);
  auto bad = regular_sequence_test({P("x*y"), P("x^2")}, 6);
  CHECK_FALSE(bad.regular);
  CHECK(bad.failing_index == 1u);
  REQUIRE(bad.kernel_witness.has_value());
  // The witness is killed by x^2 modulo (xy) but is not itself in (xy).
  auto gb = groebner_basis({P("x*y")}, MonomialOrder::degrevlex());
  CHECK(normal_form(*bad.kernel_witness * P("x^2"), gb).is_zero());
  CHECK_FALSE(normal_form(*bad.kernel_witness, gb).is_zero());

  auto zero = regular_sequence_test({P("2*x"), Polynomial(2)}, 4);
  CHECK_FALSE(zero.regular);
  CHECK(zero.failing_index == 1u);
}

TEST_CASE("finiteness, acyclicity and regularity agree on the corpus") {
  auto corpus = lemma_corpus();
  REQUIRE(corpus.size() >= 20);
  std::size_t isolated = 0;
  for (const auto& e : corpus) {
    CAPTURE(e.f);
    auto v = lemma_1_4(e.vars, P(e.f, e.vars));
    CHECK(v.finite == e.isolated);
    CHECK(v.acyclic == e.isolated);
    CHECK(v.regular == e.isolated);
    CHECK(v.agree());
    isolated += e.isolated ? 1 : 0;
  }
  CHECK(isolated > 0);
  CHECK(isolated < corpus.size());
}

TEST_CASE("omega transfer turns the Koszul differential into multiplication by df") {
  Rng rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto names = var_names(n);
    auto ctx = Context::make(names, std::nullopt);
    for (int trial = 0; trial < 40; ++trial) {
      auto df = random_exact_form(rng, ctx, 3);
      int p = static_cast<int>(rng.below(n + 1));
      auto u = random_polyvector(rng, ctx, p, 2);
      auto lhs = omega_to_forms(koszul_differential(df, u));
      auto rhs = wedge(df, omega_to_forms(u));
      CHECK(lhs == rhs);
    }
  }
}
