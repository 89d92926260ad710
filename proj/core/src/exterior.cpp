#include "bvkit/exterior.hpp"

#include <sstream>

namespace bvkit {

std::vector<std::size_t> blade_indices(Blade b) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(blade_degree(b)));
  while (b != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    b &= b - 1;
  }
  return out;
}

int wedge_sign(Blade a, Blade b) {
  if ((a & b) != 0) return 0;
  // Count inversions: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Blade rest = b; rest != 0; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Blade above = j + 1 >= 32 ? 0 : ~((Blade{1} << (j + 1)) - 1);
    inversions += std::popcount(a & above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

using Vec = std::vector<Polynomial>;

Polynomial anchor_apply(const LieAlgebroidPresentation& alg, std::size_t k, const Polynomial& a) {
  Polynomial out(a.nvars());
  for (std::size_t j = 0; j < a.nvars(); ++j)
    if (!alg.anchor[k][j].is_zero()) out += alg.anchor[k][j] * partial_derivative(a, j);
  return out;
}

Vec structure_of(const LieAlgebroidPresentation& alg, std::size_t nvars, std::size_t i, std::size_t j) {
  if (auto it = alg.structure.find({i, j}); it != alg.structure.end()) return it->second;
  Vec out(alg.rank(), Polynomial(nvars));
  if (auto it = alg.structure.find({j, i}); it != alg.structure.end())
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -it->second[k];
  return out;
}

// [sum_m v_m e_m, e_k] by the anchored Leibniz rule.
Vec bracket_with_generator(const LieAlgebroidPresentation& alg, std::size_t nvars, const Vec& v, std::size_t k) {
  Vec out(alg.rank(), Polynomial(nvars));
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (v[m].is_zero()) continue;
    Vec c = structure_of(alg, nvars, m, k);
    for (std::size_t l = 0; l < out.size(); ++l) out[l] += v[m] * c[l];
    out[m] -= anchor_apply(alg, k, v[m]);
  }
  return out;
}

bool all_zero(const Vec& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

}  // namespace

AlgebroidCheck check_algebroid(const LieAlgebroidPresentation& alg, std::size_t nvars) {
  AlgebroidCheck out;
  std::size_t r = alg.rank();
  auto fail_form = [&](const std::string& why) {
    out.well_formed = false;
    out.detail = why;
    return out;
  };
  if (r == 0) return fail_form("algebroid has no generators");
  if (r > kMaxGenerators) return fail_form("algebroid rank exceeds 32");
  if (alg.anchor.size() != r) return fail_form("anchor must list one vector field per generator");
  for (const auto& row : alg.anchor) {
    if (row.size() != nvars) return fail_form("anchor vector field has the wrong number of components");
    for (const auto& p : row)
      if (p.nvars() != nvars) return fail_form("anchor coefficient over the wrong ring");
  }
  for (const auto& [ij, c] : alg.structure) {
    if (ij.first >= r || ij.second >= r) return fail_form("structure function index out of range");
    if (c.size() != r) return fail_form("structure functions must have one entry per generator");
    for (const auto& p : c)
      if (p.nvars() != nvars) return fail_form("structure function over the wrong ring");
  }

  for (const auto& [ij, c] : alg.structure) {
    auto [i, j] = ij;
    bool bad = false;
    if (i == j) {
      bad = !all_zero(c);
    } else if (auto it = alg.structure.find({j, i}); it != alg.structure.end()) {
      for (std::size_t k = 0; k < r; ++k) bad = bad || !(c[k] + it->second[k]).is_zero();
    }
    if (bad) {
      out.antisymmetric = false;
      out.detail = "bracket of " + alg.names[i] + " and " + alg.names[j] + " is not antisymmetric";
      return out;
    }
  }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      Vec c = structure_of(alg, nvars, i, j);
      for (std::size_t l = 0; l < nvars; ++l) {
        Polynomial lhs(nvars), rhs(nvars);
        for (std::size_t k = 0; k < r; ++k) lhs += c[k] * alg.anchor[k][l];
        for (std::size_t m = 0; m < nvars; ++m) {
          rhs += alg.anchor[i][m] * partial_derivative(alg.anchor[j][l], m);
          rhs -= alg.anchor[j][m] * partial_derivative(alg.anchor[i][l], m);
        }
        if (!(lhs == rhs)) {
          out.anchor_compatible = false;
          out.detail = "anchor does not preserve the bracket of " + alg.names[i] + " and " + alg.names[j];
          return out;
        }
      }
    }

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = j + 1; k < r; ++k) {
        Vec a = bracket_with_generator(alg, nvars, structure_of(alg, nvars, i, j), k);
        Vec b = bracket_with_generator(alg, nvars, structure_of(alg, nvars, j, k), i);
        Vec c = bracket_with_generator(alg, nvars, structure_of(alg, nvars, k, i), j);
        for (std::size_t l = 0; l < r; ++l) a[l] += b[l] + c[l];
        if (!all_zero(a)) {
          out.jacobi = false;
          out.detail = "Jacobi fails on " + alg.names[i] + ", " + alg.names[j] + ", " + alg.names[k];
          return out;
        }
      }
  return out;
}

Context::Context(std::vector<std::string> names, LocalizationPtr loc, std::optional<LieAlgebroidPresentation> algebroid)
    : names_(std::move(names)), loc_(std::move(loc)), algebroid_(std::move(algebroid)) {
  std::size_t n = names_.size(), r = rank();
  pairing_.assign(r, std::vector<LocalizedElement>(n, zero()));
  structure_.assign(r, std::vector<std::vector<std::pair<std::size_t, LocalizedElement>>>(r));
  if (!algebroid_) {
    for (std::size_t i = 0; i < n; ++i) pairing_[i][i] = from(Rational(1));
    return;
  }
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) pairing_[k][j] = from(algebroid_->anchor[k][j]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      Vec c = structure_of(*algebroid_, n, i, j);
      for (std::size_t k = 0; k < r; ++k)
        if (!c[k].is_zero()) {
          structure_[i][j].emplace_back(k, from(c[k]));
          has_structure_ = true;
        }
    }
}

ContextPtr Context::make(std::vector<std::string> names, std::optional<Polynomial> c,
                         std::optional<LieAlgebroidPresentation> algebroid) {
  std::size_t n = names.size();
  if (n > kMaxGenerators) throw InputError("at most 32 variables are supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (names[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InputError("duplicate variable name '" + names[i] + "'");
  }
  if (c && c->nvars() != n) throw InputError("denominator is over the wrong number of variables");
  auto loc = std::make_shared<const Localization>(c ? *c : Polynomial::constant(n, 1));
  if (algebroid) {
    AlgebroidCheck check = check_algebroid(*algebroid, n);
    if (!check.ok()) throw InputError("invalid Lie algebroid: " + check.detail);
  }
  return std::make_shared<const Context>(std::move(names), std::move(loc), std::move(algebroid));
}

LocalizedElement Context::derive(std::size_t k, const LocalizedElement& a) const {
  if (!algebroid_) return partial_derivative(a, k);
  LocalizedElement out = zero();
  for (std::size_t j = 0; j < nvars(); ++j)
    if (!pairing_[k][j].is_zero()) out += pairing_[k][j] * partial_derivative(a, j);
  return out;
}

namespace {

template <class E>
E wedge_impl(const E& u, const E& v) {
  u.same_context(v);
  E out(u.context());
  for (const auto& [a, x] : u.terms())
    for (const auto& [b, y] : v.terms()) {
      int s = wedge_sign(a, b);
      if (s == 0) continue;
      LocalizedElement c = x * y;
      if (s < 0) c = -c;
      out.add_term(a | b, c);
    }
  return out;
}

void require_degree_one(const Polyvector& tau, const char* what) {
  for (const auto& [b, a] : tau.terms())
    if (blade_degree(b) != 1) throw InputError(std::string(what) + " needs a polyvector of exterior degree 1");
}

void require_tangent(const ContextPtr& ctx, const char* what) {
  if (!ctx->is_tangent()) throw InputError(std::string(what) + " is not defined for a non-tangent algebroid");
}

// Components t_j = <tau, dx_j>.
std::vector<LocalizedElement> coordinate_components(const Polyvector& tau) {
  const auto& ctx = tau.context();
  std::vector<LocalizedElement> t(ctx->nvars(), ctx->zero());
  for (const auto& [b, a] : tau.terms()) {
    std::size_t k = static_cast<std::size_t>(std::countr_zero(b));
    for (std::size_t j = 0; j < ctx->nvars(); ++j)
      if (!ctx->pairing(k, j).is_zero()) t[j] += a * ctx->pairing(k, j);
  }
  return t;
}

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Polyvector wedge(const Polyvector& u, const Polyvector& v) { return wedge_impl(u, v); }
DifferentialForm wedge(const DifferentialForm& u, const DifferentialForm& v) { return wedge_impl(u, v); }

LocalizedElement apply_vector_field(const Polyvector& tau, const LocalizedElement& a) {
  require_degree_one(tau, "a vector field");
  const auto& ctx = tau.context();
  LocalizedElement out = ctx->zero();
  for (const auto& [b, c] : tau.terms()) out += c * ctx->derive(static_cast<std::size_t>(std::countr_zero(b)), a);
  return out;
}

LocalizedElement pairing(const Polyvector& tau, const DifferentialForm& phi) {
  require_degree_one(tau, "pairing");
  if (tau.context() != phi.context()) throw InputError("context mismatch");
  for (const auto& [b, a] : phi.terms())
    if (blade_degree(b) != 1) throw InputError("pairing needs a one-form");
  auto t = coordinate_components(tau);
  LocalizedElement out = tau.context()->zero();
  for (const auto& [b, a] : phi.terms()) out += t[static_cast<std::size_t>(std::countr_zero(b))] * a;
  return out;
}

DifferentialForm contract(const Polyvector& tau, const DifferentialForm& eta) {
  require_degree_one(tau, "contract");
  if (tau.context() != eta.context()) throw InputError("context mismatch");
  auto t = coordinate_components(tau);
  DifferentialForm out(eta.context());
  for (const auto& [J, b] : eta.terms()) {
    int m = 0;
    for (std::size_t j : blade_indices(J)) {
      if (!t[j].is_zero()) {
        LocalizedElement c = t[j] * b;
        out.add_term(J & ~blade_bit(j), m % 2 == 0 ? c : -c);
      }
      ++m;
    }
  }
  return out;
}

DifferentialForm omega_to_forms(const Polyvector& u) {
  const auto& ctx = u.context();
  require_tangent(ctx, "omega_transfer");
  Blade full = ctx->nvars() == 32 ? ~Blade{0} : (Blade{1} << ctx->nvars()) - 1;
  LocalizedElement c = ctx->from(ctx->denominator());
  DifferentialForm out(ctx);
  for (const auto& [I, a] : u.terms()) {
    long index_sum = 0;
    for (std::size_t i : blade_indices(I)) index_sum += static_cast<long>(i);
    LocalizedElement coef = a * c;
    out.add_term(full & ~I, parity_sign(index_sum) > 0 ? coef : -coef);
  }
  return out;
}

Polyvector omega_to_polyvectors(const DifferentialForm& eta) {
  const auto& ctx = eta.context();
  require_tangent(ctx, "omega_transfer");
  Blade full = ctx->nvars() == 32 ? ~Blade{0} : (Blade{1} << ctx->nvars()) - 1;
  Polyvector out(ctx);
  for (const auto& [J, b] : eta.terms()) {
    Blade I = full & ~J;
    long index_sum = 0;
    for (std::size_t i : blade_indices(I)) index_sum += static_cast<long>(i);
    LocalizedElement coef = b.divided_by_denominator(1);
    out.add_term(I, parity_sign(index_sum) > 0 ? coef : -coef);
  }
  return out;
}

DifferentialForm de_rham_d(const DifferentialForm& eta) {
  const auto& ctx = eta.context();
  DifferentialForm out(ctx);
  for (const auto& [J, a] : eta.terms())
    for (std::size_t i = 0; i < ctx->nvars(); ++i) {
      if (J & blade_bit(i)) continue;
      LocalizedElement da = partial_derivative(a, i);
      if (da.is_zero()) continue;
      out.add_term(J | blade_bit(i), wedge_sign(blade_bit(i), J) > 0 ? da : -da);
    }
  return out;
}

DifferentialForm exact_form(const ContextPtr& ctx, const LocalizedElement& f) {
  return de_rham_d(DifferentialForm::scalar(ctx, f));
}

DifferentialForm lie_derivative(const Polyvector& tau, const DifferentialForm& eta) {
  require_degree_one(tau, "lie_derivative");
  if (tau.context() != eta.context()) throw InputError("context mismatch");
  const auto& ctx = eta.context();
  auto t = coordinate_components(tau);
  DifferentialForm out(ctx);
  for (const auto& [J, a] : eta.terms()) {
    out.add_term(J, apply_vector_field(tau, a));
    // Replace the m-th factor dx_j by d(t_j) = sum_i d_i(t_j) dx_i.
    for (std::size_t j : blade_indices(J)) {
      Blade rest = J & ~blade_bit(j);
      int slot_sign = wedge_sign(blade_bit(j), rest);  // moves dx_j to the front
      for (std::size_t i = 0; i < ctx->nvars(); ++i) {
        if (rest & blade_bit(i)) continue;
        LocalizedElement dt = partial_derivative(t[j], i);
        if (dt.is_zero()) continue;
        LocalizedElement c = a * dt;
        int s = slot_sign * wedge_sign(blade_bit(i), rest);
        out.add_term(rest | blade_bit(i), s > 0 ? c : -c);
      }
    }
  }
  return out;
}

DifferentialForm right_action_top_form(const DifferentialForm& omega, const Polyvector& tau) {
  const auto& ctx = omega.context();
  for (const auto& [b, a] : omega.terms())
    if (blade_degree(b) != static_cast<int>(ctx->nvars()))
      throw InputError("the right action is defined on top-degree forms only");
  return -de_rham_d(contract(tau, omega));
}

namespace {

// [a, e_J] for a function a, using [a, f] = -f(a).
Polyvector bracket_function_blade(const ContextPtr& ctx, const LocalizedElement& a, Blade J) {
  Polyvector out(ctx);
  if (J == 0 || (a.is_polynomial() && a.numerator().is_constant())) return out;
  std::size_t f = static_cast<std::size_t>(std::countr_zero(J));
  Blade rest = J & (J - 1);
  out.add_term(rest, -ctx->derive(f, a));
  Polyvector inner = bracket_function_blade(ctx, a, rest);
  if (!inner.is_zero()) out -= wedge(Polyvector::generator(ctx, f), inner);
  return out;
}

Polyvector generator_bracket(const ContextPtr& ctx, std::size_t i, std::size_t j) {
  Polyvector out(ctx);
  for (const auto& [k, c] : ctx->structure(i, j)) out.add_term(blade_bit(k), c);
  return out;
}

// [e_i, e_J]: [e_i, f ^ Y] = [e_i, f] ^ Y + f ^ [e_i, Y].
Polyvector bracket_generator_blade(const ContextPtr& ctx, std::size_t i, Blade J) {
  Polyvector out(ctx);
  if (J == 0) return out;
  std::size_t f = static_cast<std::size_t>(std::countr_zero(J));
  Blade rest = J & (J - 1);
  Polyvector rest_blade = Polyvector::blade(ctx, rest, ctx->from(Rational(1)));
  out += wedge(generator_bracket(ctx, i, f), rest_blade);
  Polyvector inner = bracket_generator_blade(ctx, i, rest);
  if (!inner.is_zero()) out += wedge(Polyvector::generator(ctx, f), inner);
  return out;
}

// [e_I, e_J]: [e_i ^ X, v] = e_i ^ [X, v] + (-1)^{(|v|-1)|X|} [e_i, v] ^ X.
Polyvector bracket_blades(const ContextPtr& ctx, Blade I, Blade J) {
  Polyvector out(ctx);
  if (I == 0 || J == 0 || !ctx->has_structure()) return out;
  std::size_t i = static_cast<std::size_t>(std::countr_zero(I));
  Blade rest = I & (I - 1);
  Polyvector inner = bracket_blades(ctx, rest, J);
  if (!inner.is_zero()) out += wedge(Polyvector::generator(ctx, i), inner);
  long v_deg = -blade_degree(J), x_deg = -blade_degree(rest);
  Polyvector head = wedge(bracket_generator_blade(ctx, i, J), Polyvector::blade(ctx, rest, ctx->from(Rational(1))));
  out += static_cast<Rational>(parity_sign((v_deg - 1) * x_deg)) * head;
  return out;
}

}  // namespace

Polyvector schouten_bracket(const Polyvector& u, const Polyvector& v) {
  u.same_context(v);
  const auto& ctx = u.context();
  Polyvector out(ctx);
  for (const auto& [I, a] : u.terms())
    for (const auto& [J, b] : v.terms()) {
      long p = blade_degree(I), q = blade_degree(J);
      // [a e_I, b e_J] = a [e_I, b e_J] + (-1)^{(|v|-1)|e_I|} [a, b e_J] ^ e_I
      // [e_I, b e_J]  = (-1)^{|e_I|} [b, e_I] ^ e_J + b [e_I, e_J]
      // [a, b e_J]    = b [a, e_J]
      Polyvector first = wedge(bracket_function_blade(ctx, b, I), Polyvector::blade(ctx, J, ctx->from(Rational(1))));
      if (p % 2 == 1) first = -first;
      first += b * bracket_blades(ctx, I, J);
      out += a * first;

      Polyvector second = b * bracket_function_blade(ctx, a, J);
      if (!second.is_zero()) {
        second = wedge(second, Polyvector::blade(ctx, I, ctx->from(Rational(1))));
        if (parity_sign((-q - 1) * -p) < 0) second = -second;
        out += second;
      }
    }
  return out;
}

}  // namespace bvkit
