#include "bvkit/bv.hpp"

#include <algorithm>

namespace bvkit {

namespace {

void require_one_form(const DifferentialForm& phi) {
  for (const auto& [b, a] : phi.terms())
    if (blade_degree(b) != 1) throw InputError("expected a one-form");
}

}  // namespace

Connection Connection::zero(const ContextPtr& ctx) { return {ctx, std::vector<LocalizedElement>(ctx->rank(), ctx->zero())}; }

LocalizedElement Connection::apply(const Polyvector& tau) const {
  if (tau.context() != ctx) throw InputError("context mismatch");
  LocalizedElement out = ctx->zero();
  for (const auto& [b, a] : tau.terms()) {
    if (blade_degree(b) != 1) throw InputError("a connection acts on polyvectors of exterior degree 1");
    std::size_t k = static_cast<std::size_t>(std::countr_zero(b));
    out += a * values[k];
    out -= ctx->derive(k, a);
  }
  return out;
}

Connection connection_from_volume(const ContextPtr& ctx, const DifferentialForm& phi) {
  if (!ctx->is_tangent()) throw InputError("connection_from_volume needs the tangent algebroid");
  if (phi.context() != ctx) throw InputError("context mismatch");
  require_one_form(phi);
  Connection conn = Connection::zero(ctx);
  const auto& loc = ctx->localization();
  for (std::size_t i = 0; i < ctx->nvars(); ++i) {
    conn.values[i] = -LocalizedElement(loc, loc->denominator_derivative(i), 1);
    conn.values[i] += phi.coefficient(blade_bit(i));
  }
  return conn;
}

Polyvector bv_from_connection(const Connection& conn, const Polyvector& u, std::size_t absorb_slot) {
  const auto& ctx = u.context();
  if (conn.ctx != ctx) throw InputError("context mismatch");
  const LocalizedElement one = ctx->from(Rational(1));
  Polyvector out(ctx);
  for (const auto& [I, a] : u.terms()) {
    auto idx = blade_indices(I);
    std::size_t p = idx.size();
    if (p == 0) continue;
    std::size_t s = std::min(absorb_slot, p - 1);
    auto factor = [&](std::size_t j) {
      return Polyvector::blade(ctx, blade_bit(idx[j]), j == s ? a : one);
    };
    // Wedge of the factors other than those in `skip`, in order.
    auto rest = [&](Blade skip, bool carries_coefficient) {
      return Polyvector::blade(ctx, I & ~skip, carries_coefficient ? a : one);
    };
    for (std::size_t j = 0; j < p; ++j) {
      LocalizedElement nab = conn.apply(factor(j));
      if (nab.is_zero()) continue;
      Polyvector r = rest(blade_bit(idx[j]), j != s);
      r *= j % 2 == 0 ? nab : -nab;
      out += r;
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        Polyvector br = schouten_bracket(factor(i), factor(j));
        if (br.is_zero()) continue;
        Polyvector term = wedge(br, rest(blade_bit(idx[i]) | blade_bit(idx[j]), i != s && j != s));
        // (-1)^{i+j} with 1-based positions equals (-1)^{i+j} with 0-based ones.
        out += (i + j) % 2 == 0 ? term : -term;
      }
  }
  return out;
}

PolyvectorOperator bv_operator(const Connection& conn) {
  return [conn](const Polyvector& u) { return bv_from_connection(conn, u); };
}

Connection connection_from_bv(const ContextPtr& ctx, const PolyvectorOperator& d) {
  Connection conn = Connection::zero(ctx);
  for (std::size_t i = 0; i < ctx->rank(); ++i) conn.values[i] = d(Polyvector::generator(ctx, i)).coefficient(0);
  return conn;
}

Polyvector koszul_differential(const DifferentialForm& phi, const Polyvector& u) {
  const auto& ctx = u.context();
  if (phi.context() != ctx) throw InputError("context mismatch");
  require_one_form(phi);
  std::vector<LocalizedElement> pair(ctx->rank(), ctx->zero());
  for (std::size_t k = 0; k < ctx->rank(); ++k) pair[k] = pairing(Polyvector::generator(ctx, k), phi);
  Polyvector out(ctx);
  for (const auto& [I, a] : u.terms()) {
    std::size_t j = 0;
    for (std::size_t k : blade_indices(I)) {
      if (!pair[k].is_zero()) {
        LocalizedElement c = a * pair[k];
        out.add_term(I & ~blade_bit(k), j % 2 == 0 ? c : -c);
      }
      ++j;
    }
  }
  return out;
}

Polyvector form_path_operator(const DifferentialForm& phi, const Polyvector& u) {
  DifferentialForm eta = omega_to_forms(u);
  DifferentialForm image = wedge(phi, eta) - de_rham_d(eta);
  return omega_to_polyvectors(image);
}

}  // namespace bvkit
