#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bvkit/error.hpp"
#include "bvkit/localized.hpp"

namespace bvkit {

// A blade is a set of generator indices stored as a bit mask; the wedge of
// the generators is taken in increasing index order.
using Blade = std::uint32_t;
inline constexpr std::size_t kMaxGenerators = 32;

inline int blade_degree(Blade b) { return std::popcount(b); }
inline Blade blade_bit(std::size_t i) { return Blade{1} << i; }
std::vector<std::size_t> blade_indices(Blade b);

// Sign of e_a ^ e_b against the sorted blade a|b; 0 when they share an index.
int wedge_sign(Blade a, Blade b);

// A free Lie algebroid of finite rank over the polynomial (or localized) ring.
struct LieAlgebroidPresentation {
  std::vector<std::string> names;
  // anchor[k][j] is the coefficient of d/dx_j in rho(e_k).
  std::vector<std::vector<Polynomial>> anchor;
  // [e_i, e_j] = sum_k structure[{i, j}][k] e_k. Either order may be given;
  // missing pairs bracket to zero.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> structure;

  std::size_t rank() const { return names.size(); }
};

struct AlgebroidCheck {
  bool well_formed = true;
  bool antisymmetric = true;
  bool anchor_compatible = true;
  bool jacobi = true;
  std::string detail;

  bool ok() const { return well_formed && antisymmetric && anchor_compatible && jacobi; }
};

// Antisymmetry, rho[e_i,e_j] = [rho e_i, rho e_j] and Jacobi on every
// generator triple, with the bracket extended by the anchored Leibniz rule.
AlgebroidCheck check_algebroid(const LieAlgebroidPresentation& alg, std::size_t nvars);

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// The ring A = Q[x_1..x_n][1/c] together with its module of generators: the
// coordinate fields d/dx_i, or the generators of an algebroid.
class Context {
 public:
  // c defaults to 1. Throws InputError when the algebroid fails its checks.
  static ContextPtr make(std::vector<std::string> names, std::optional<Polynomial> c = std::nullopt,
                         std::optional<LieAlgebroidPresentation> algebroid = std::nullopt);

  std::size_t nvars() const { return names_.size(); }
  std::size_t rank() const { return algebroid_ ? algebroid_->rank() : names_.size(); }
  const std::vector<std::string>& variable_names() const { return names_; }
  const std::vector<std::string>& generator_names() const {
    return algebroid_ ? algebroid_->names : names_;
  }
  const LocalizationPtr& localization() const { return loc_; }
  const Polynomial& denominator() const { return loc_->denominator(); }
  bool is_tangent() const { return !algebroid_.has_value(); }
  const std::optional<LieAlgebroidPresentation>& algebroid() const { return algebroid_; }

  LocalizedElement zero() const { return LocalizedElement(loc_); }
  LocalizedElement from(const Polynomial& p) const { return LocalizedElement(loc_, p); }
  LocalizedElement from(const Rational& q) const {
    return LocalizedElement(loc_, Polynomial::constant(nvars(), q));
  }

  // rho(e_k)(a)
  LocalizedElement derive(std::size_t k, const LocalizedElement& a) const;
  // <e_k, dx_j> = rho(e_k)(x_j)
  const LocalizedElement& pairing(std::size_t k, std::size_t j) const { return pairing_[k][j]; }
  // Nonzero structure functions of [e_i, e_j] as (k, c_ij^k).
  const std::vector<std::pair<std::size_t, LocalizedElement>>& structure(std::size_t i, std::size_t j) const {
    return structure_[i][j];
  }
  bool has_structure() const { return has_structure_; }

  Context(std::vector<std::string> names, LocalizationPtr loc, std::optional<LieAlgebroidPresentation> algebroid);

 private:
  std::vector<std::string> names_;
  LocalizationPtr loc_;
  std::optional<LieAlgebroidPresentation> algebroid_;
  std::vector<std::vector<LocalizedElement>> pairing_;
  std::vector<std::vector<std::vector<std::pair<std::size_t, LocalizedElement>>>> structure_;
  bool has_structure_ = false;
};

struct PolyvectorTag {
  static constexpr int degree_sign = -1;
};
struct FormTag {
  static constexpr int degree_sign = 1;
};

// Finite sum of coefficient * blade. For polyvectors the blade indexes
// algebroid generators (cohomological degree -p); for forms it indexes dx_j
// (degree +q).
template <class Tag>
class ExteriorElement {
 public:
  using Terms = std::map<Blade, LocalizedElement>;

  explicit ExteriorElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static ExteriorElement scalar(const ContextPtr& ctx, const LocalizedElement& a) { return blade(ctx, 0, a); }
  static ExteriorElement scalar(const ContextPtr& ctx, const Polynomial& p) { return blade(ctx, 0, ctx->from(p)); }
  static ExteriorElement generator(const ContextPtr& ctx, std::size_t i) {
    return blade(ctx, blade_bit(i), ctx->from(Rational(1)));
  }
  static ExteriorElement blade(const ContextPtr& ctx, Blade b, const LocalizedElement& a) {
    ExteriorElement e(ctx);
    e.add_term(b, a);
    return e;
  }

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // Number of index slots: algebroid rank for polyvectors, n for forms.
  std::size_t dimension() const {
    if constexpr (Tag::degree_sign < 0)
      return ctx_->rank();
    else
      return ctx_->nvars();
  }

  LocalizedElement coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? ctx_->zero() : it->second;
  }

  void add_term(Blade b, const LocalizedElement& a) {
    if (a.is_zero()) return;
    if (dimension() < kMaxGenerators && (b >> dimension()) != 0)
      throw InputError("blade index out of range");
    auto [it, inserted] = terms_.try_emplace(b, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int p = blade_degree(terms_.begin()->first);
    for (const auto& [b, a] : terms_)
      if (blade_degree(b) != p) return false;
    return true;
  }
  // Exterior degree of a homogeneous nonzero element.
  std::optional<int> exterior_degree() const {
    if (terms_.empty() || !is_homogeneous()) return std::nullopt;
    return blade_degree(terms_.begin()->first);
  }
  ExteriorElement homogeneous_part(int p) const {
    ExteriorElement out(ctx_);
    for (const auto& [b, a] : terms_)
      if (blade_degree(b) == p) out.terms_.emplace(b, a);
    return out;
  }

  ExteriorElement& operator+=(const ExteriorElement& o) {
    same_context(o);
    for (const auto& [b, a] : o.terms_) add_term(b, a);
    return *this;
  }
  ExteriorElement& operator-=(const ExteriorElement& o) {
    same_context(o);
    for (const auto& [b, a] : o.terms_) add_term(b, -a);
    return *this;
  }
  ExteriorElement& operator*=(const LocalizedElement& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, a] : terms_) a *= s;
    return *this;
  }
  ExteriorElement& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, a] : terms_) a *= q;
    return *this;
  }
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(const LocalizedElement& s, ExteriorElement a) { return a *= s; }
  friend ExteriorElement operator*(const Rational& q, ExteriorElement a) { return a *= q; }
  ExteriorElement operator-() const {
    ExteriorElement out(*this);
    for (auto& [b, a] : out.terms_) a = -a;
    return out;
  }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  void same_context(const ExteriorElement& o) const {
    if (o.ctx_ != ctx_) throw InputError("context mismatch");
  }

 private:
  ContextPtr ctx_;
  Terms terms_;
};

using Polyvector = ExteriorElement<PolyvectorTag>;
using DifferentialForm = ExteriorElement<FormTag>;

Polyvector wedge(const Polyvector& u, const Polyvector& v);
DifferentialForm wedge(const DifferentialForm& u, const DifferentialForm& v);

// tau(a) for a polyvector of exterior degree 1.
LocalizedElement apply_vector_field(const Polyvector& tau, const LocalizedElement& a);
// <tau, phi> for tau of exterior degree 1 and a one-form phi.
LocalizedElement pairing(const Polyvector& tau, const DifferentialForm& phi);

// i_tau; throws InputError unless tau has exterior degree exactly 1.
DifferentialForm contract(const Polyvector& tau, const DifferentialForm& eta);

// omega_* for omega = c dx_1 ^ ... ^ dx_n, and its inverse. Tangent contexts only.
DifferentialForm omega_to_forms(const Polyvector& u);
Polyvector omega_to_polyvectors(const DifferentialForm& eta);

DifferentialForm de_rham_d(const DifferentialForm& eta);

// Coordinate Leibniz formula, independent of the Cartan formula.
DifferentialForm lie_derivative(const Polyvector& tau, const DifferentialForm& eta);

// omega . tau = -d(i_tau omega); omega must be a top-degree form.
DifferentialForm right_action_top_form(const DifferentialForm& omega, const Polyvector& tau);

Polyvector schouten_bracket(const Polyvector& u, const Polyvector& v);

// Exact differential of a function, as a one-form.
DifferentialForm exact_form(const ContextPtr& ctx, const LocalizedElement& f);

// Grammar: polynomial expressions, '@name' generators, 'd(x)' for dx, '^'
// as wedge (or power when followed by an integer literal), '*' as product,
// '/' by a power of the context denominator.
Polyvector parse_polyvector(std::string_view text, const ContextPtr& ctx);
DifferentialForm parse_form(std::string_view text, const ContextPtr& ctx);

std::string to_string(const Polyvector& u);
std::string to_string(const DifferentialForm& eta);
std::string to_string_in(const LocalizedElement& a, const ContextPtr& ctx);

}  // namespace bvkit
